#include <algorithm>
#include <sstream>
#include <utility>

#include "cpg/oracle.hpp"
#include "cpg/error.hpp"

namespace cpg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kInvalidArgument, "ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

IntMatrix exponent_matrix(const CyclicPresentationSpec& p) {
  const std::uint32_t n = p.n();
  IntMatrix m(n, n);
  const auto family = relator_family(p);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (Letter l : family[i].base()) m(i, l.index) += l.sign;
  }
  return m;
}

namespace {

bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (sgn(m(i, j)) == 0) continue;
      mpz_class v = abs(m(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  SNFResult out;
  std::size_t t = 0;
  for (; t < r; ++t) {
    std::size_t pr = 0;
    std::size_t pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    m.swap_rows(t, pr);
    m.swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      mpz_class q;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (sgn(m(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
        if (sgn(m(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (sgn(m(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
        if (sgn(m(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is now smaller than the pivot.
        find_pivot(m, t, pr, pc);
        m.swap_rows(t, pr);
        m.swap_cols(t, pc);
        continue;
      }
      // Row and column cleared; enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.invariants.push_back(abs(m(t, t)));
  }
  for (; t < r; ++t) out.invariants.emplace_back(0);
  return out;
}

std::string format_invariants(const SNFResult& r) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r.invariants.size(); ++i) os << (i ? ", " : "") << r.invariants[i];
  os << ']';
  return os.str();
}

mpz_class determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t i = k + 1;
      while (i < n && sgn(m(i, k)) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;  // exact
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace cpg
