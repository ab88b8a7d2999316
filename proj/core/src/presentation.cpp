#include "cpg/presentation.hpp"

#include <algorithm>
#include <string>

#include "cpg/error.hpp"
#include "cpg/word_text.hpp"

namespace cpg {

OneRelatorSpec::OneRelatorSpec(CyclicWord relator) : relator_(std::move(relator)) {
  if (relator_.empty()) throw Error(ErrorCode::kInvalidRelator, "relator is empty");
  involved_ = involved_indices(relator_.base());
  k_ = *involved_.rbegin();
  if (*involved_.begin() != 0) {
    throw Error(ErrorCode::kInvalidRelator, "relator does not involve x0: " + format_word(relator_));
  }
  if (k_ == 0) {
    throw Error(ErrorCode::kInvalidRelator,
                "relator must involve two distinct generators x0 and xk: " + format_word(relator_));
  }
}

NormalizedSpan normalize_span(const CyclicWord& u) {
  if (u.empty()) throw Error(ErrorCode::kEmptyWord, "cannot normalize the empty word");
  const GenIndex low = *involved_indices(u.base()).begin();
  std::vector<Letter> out;
  out.reserve(u.size());
  for (Letter l : u.base()) out.push_back({l.index - low, l.sign});
  return {OneRelatorSpec(CyclicWord(Word(out))), low};
}

MagnusSubset magnus_subset(const OneRelatorSpec& spec, IndexSet indices) {
  for (GenIndex i : indices) {
    if (i > spec.k()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index " + std::to_string(i) + " outside x0..x" + std::to_string(spec.k()));
    }
  }
  const bool omits_involved = std::any_of(spec.involved().begin(), spec.involved().end(),
                                          [&](GenIndex i) { return indices.count(i) == 0; });
  if (!omits_involved) {
    throw Error(ErrorCode::kNotMagnus,
                format_index_set(indices) + " contains every generator of the relator");
  }
  return MagnusSubset(spec.k(), std::move(indices));
}

CyclicPresentationSpec::CyclicPresentationSpec(std::uint32_t n, CyclicWord w) : n_(n), w_(std::move(w)) {
  if (n_ == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  for (Letter l : w_.base()) {
    if (l.index >= n_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "n = " + std::to_string(n_) + " too small for subscript " + std::to_string(l.index));
    }
  }
}

std::vector<CyclicWord> relator_family(const CyclicPresentationSpec& p) {
  std::vector<CyclicWord> out;
  out.reserve(p.n());
  for (std::uint32_t i = 0; i < p.n(); ++i) {
    // Shifting preserves cyclic reducedness; CyclicWord's constructor checks it.
    out.push_back(CyclicWord(shift_subscripts(p.word().base(), i, p.n())));
  }
  return out;
}

GapProfile gap_profile(const OneRelatorSpec& spec) {
  GapProfile g{spec.k(), spec.involved(), 0};
  std::uint32_t run = 0;
  for (GenIndex i = 1; i < spec.k(); ++i) {
    run = spec.involved().count(i) ? 0 : run + 1;
    g.max_interior_gap = std::max(g.max_interior_gap, run);
  }
  return g;
}

}  // namespace cpg
