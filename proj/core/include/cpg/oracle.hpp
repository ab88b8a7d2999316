#pragma once

// Independent checks on small G_n(w): the abelianization via the circulant
// exponent-sum matrix, and bounded coset enumeration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cpg/presentation.hpp"

namespace cpg {

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> a_;
};

std::string format_matrix(const IntMatrix& m);

// Row i, column j: exponent sum of x_j in w.theta^i.
IntMatrix exponent_matrix(const CyclicPresentationSpec& p);

struct SNFResult {
  // d_1 | d_2 | ... ; min(rows, cols) entries, zeros last.
  std::vector<mpz_class> invariants;
};

// Pivot: least nonzero |entry|, first in row-major order.
SNFResult smith_normal_form(IntMatrix m);
std::string format_invariants(const SNFResult& r);  // "[1, 1, 0]"

// Fraction-free Gaussian elimination.
mpz_class determinant(IntMatrix m);

// Coefficients low degree first; trailing zeros are ignored.
using IntPoly = std::vector<mpz_class>;

mpz_class resultant(const IntPoly& f, const IntPoly& g);
// Res(f, x^n - 1), which is +-prod over n-th roots of unity z of f(z).
mpz_class resultant_with_unity(const IntPoly& f, std::uint32_t n);

// f(x) = sum_j (exponent sum of x_j in w) x^j.
IntPoly exponent_polynomial(const CyclicPresentationSpec& p);

struct AbelianOrder {
  bool infinite = false;
  mpz_class order;  // valid when !infinite

  std::string to_string() const;  // "Infinite" or the order
};

// Throws std::logic_error if the Smith form disagrees with the resultant.
AbelianOrder abelian_order(const CyclicPresentationSpec& p);

struct EnumerationOutcome {
  enum class Status { kCompleted, kOverflow };

  Status status = Status::kOverflow;
  std::size_t order = 0;        // kCompleted
  std::size_t max_cosets = 0;
  std::size_t cosets_defined = 0;
  std::size_t cosets_collapsed = 0;
  std::string strategy;

  bool completed() const { return status == Status::kCompleted; }
  std::string to_string() const;  // "Completed(5)" / "Overflow(100000)"
};

// Enumerates the cosets of the trivial subgroup. max_cosets bounds the total
// number of cosets ever defined.
EnumerationOutcome todd_coxeter(const CyclicPresentationSpec& p, std::size_t max_cosets);

}  // namespace cpg
