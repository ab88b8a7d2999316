#include "cpg/oracle.hpp"

namespace cpg {
namespace {

IntPoly trimmed(IntPoly f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
  return f;
}

mpz_class pow(const mpz_class& base, std::size_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

mpz_class resultant(const IntPoly& f_in, const IntPoly& g_in) {
  const IntPoly f = trimmed(f_in);
  const IntPoly g = trimmed(g_in);
  if (f.empty() || g.empty()) return 0;
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  if (m == 0) return pow(f[0], n);
  if (n == 0) return pow(g[0], m);
  // Sylvester matrix: n shifted rows of f, then m shifted rows of g,
  // coefficients from the leading one down.
  IntMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g[n - i];
  }
  return determinant(std::move(s));
}

mpz_class resultant_with_unity(const IntPoly& f, std::uint32_t n) {
  IntPoly g(n + 1, 0);
  g[0] = -1;
  g[n] = 1;
  return resultant(f, g);
}

IntPoly exponent_polynomial(const CyclicPresentationSpec& p) {
  IntPoly f(p.n(), 0);
  for (Letter l : p.word().base()) f[l.index] += l.sign;
  return f;
}

}  // namespace cpg
