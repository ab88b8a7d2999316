#pragma once

// One-relator groups H = <x_0..x_k | w> and cyclic presentation families
// G_n(w) = <x_0..x_{n-1} | w, w.theta, ..., w.theta^(n-1)>, where theta
// shifts every subscript up by one modulo n.

#include <cstdint>
#include <vector>

#include "cpg/free_word.hpp"

namespace cpg {

// H = <x_0..x_k | relator>. The relator is nonempty, cyclically reduced,
// uses only x_0..x_k, and involves both x_0 and x_k (so k >= 1).
class OneRelatorSpec {
 public:
  // Throws InvalidRelator when the invariants above fail.
  explicit OneRelatorSpec(CyclicWord relator);

  std::uint32_t k() const { return k_; }
  const CyclicWord& relator() const { return relator_; }
  const IndexSet& involved() const { return involved_; }
  bool involves_all() const { return involved_.size() == k_ + 1; }

  friend bool operator==(const OneRelatorSpec& a, const OneRelatorSpec& b) {
    return a.relator_ == b.relator_;
  }

 private:
  CyclicWord relator_;
  std::uint32_t k_ = 0;
  IndexSet involved_;
};

struct NormalizedSpan {
  OneRelatorSpec spec;
  std::uint32_t offset = 0;  // subtracted from every subscript
};

// Translates subscripts so the least involved one is 0; k becomes the
// largest. Throws EmptyWord, or InvalidRelator when only one generator
// occurs.
NormalizedSpan normalize_span(const CyclicWord& u);

class MagnusSubset {
 public:
  std::uint32_t alphabet_k() const { return alphabet_k_; }
  const IndexSet& indices() const { return indices_; }
  // Rank of the free subgroup these generators span.
  std::size_t rank() const { return indices_.size(); }
  bool contains(GenIndex i) const { return indices_.count(i) != 0; }

  friend bool operator==(const MagnusSubset&, const MagnusSubset&) = default;
  friend auto operator<=>(const MagnusSubset& a, const MagnusSubset& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  friend MagnusSubset magnus_subset(const OneRelatorSpec&, IndexSet);
  MagnusSubset(std::uint32_t k, IndexSet indices) : alphabet_k_(k), indices_(std::move(indices)) {}

  std::uint32_t alphabet_k_ = 0;
  IndexSet indices_;
};

// Throws InvalidArgument if an index exceeds k, NotMagnus if the subset
// contains every generator involved in the relator.
MagnusSubset magnus_subset(const OneRelatorSpec& spec, IndexSet indices);

class CyclicPresentationSpec {
 public:
  // Throws InvalidArgument when n is 0 or some subscript of w is >= n.
  CyclicPresentationSpec(std::uint32_t n, CyclicWord w);

  std::uint32_t n() const { return n_; }
  const CyclicWord& word() const { return w_; }

 private:
  std::uint32_t n_;
  CyclicWord w_;
};

// [w, w.theta, ..., w.theta^(n-1)].
std::vector<CyclicWord> relator_family(const CyclicPresentationSpec& p);

struct GapProfile {
  std::uint32_t k = 0;
  IndexSet involved;
  // Longest run of consecutive subscripts in 1..k-1 absent from the relator.
  std::uint32_t max_interior_gap = 0;

  // Least t for which every window x_i..x_{i+t-1} (1 <= i <= k-t)
  // meets the relator.
  std::uint32_t t_min() const { return max_interior_gap + 1; }
};

GapProfile gap_profile(const OneRelatorSpec& spec);

}  // namespace cpg
