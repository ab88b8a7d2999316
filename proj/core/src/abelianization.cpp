#include <stdexcept>

#include "cpg/oracle.hpp"
#include "cpg/word_text.hpp"

namespace cpg {

std::string AbelianOrder::to_string() const { return infinite ? "Infinite" : order.get_str(); }

AbelianOrder abelian_order(const CyclicPresentationSpec& p) {
  const SNFResult snf = smith_normal_form(exponent_matrix(p));
  AbelianOrder out;
  out.order = 1;
  for (const mpz_class& d : snf.invariants) {
    if (sgn(d) == 0) {
      out.infinite = true;
    } else {
      out.order *= d;
    }
  }
  const mpz_class res = abs(resultant_with_unity(exponent_polynomial(p), p.n()));
  const bool agree = out.infinite ? sgn(res) == 0 : res == out.order;
  if (!agree) {
    throw std::logic_error("abelianization of G_" + std::to_string(p.n()) + "(" + format_word(p.word()) +
                           "): Smith form " + format_invariants(snf) + " disagrees with resultant " + res.get_str());
  }
  if (out.infinite) out.order = 0;
  return out;
}

}  // namespace cpg
