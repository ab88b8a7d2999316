#pragma once

// Free-group words over generators x_0, x_1, ...
//
// A Word is always freely reduced; a CyclicWord is additionally cyclically
// reduced. Unreduced letter sequences only appear as input to reduce().

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

namespace cpg {

using GenIndex = std::uint32_t;
using IndexSet = std::set<GenIndex>;

struct Letter {
  GenIndex index = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {index, -sign}; }
  constexpr bool is_inverse_of(Letter other) const {
    return index == other.index && sign == -other.sign;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  // Canonical order: by index, then x_i before x_i^-1.
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return (a.sign < 0) <=> (b.sign < 0);
  }
};

constexpr Letter gen(GenIndex i) { return {i, 1}; }
constexpr Letter inv(GenIndex i) { return {i, -1}; }

class Word {
 public:
  Word() = default;
  // Freely reduces the given letters.
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Contiguous subword [pos, pos + len); always reduced.
  Word subword(std::size_t pos, std::size_t len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> letters) : letters_(std::move(letters)) {}
  friend Word reduce(std::span<const Letter> raw);

  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word invert(const Word& u);
// reduce(u . v)
Word multiply(const Word& u, const Word& v);
// reduce(u^e) for any integer e.
Word power(const Word& u, long e);

class CyclicWord {
 public:
  CyclicWord() = default;
  // Throws NotCyclicallyReduced unless `base` is cyclically reduced.
  explicit CyclicWord(Word base);

  const Word& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  bool empty() const { return base_.empty(); }

  // Rotation starting at letter `offset` (taken mod size).
  CyclicWord rotated(std::size_t offset) const;
  CyclicWord inverse() const;
  // Lexicographically least rotation under the canonical letter order.
  CyclicWord canonical() const;
  bool is_rotation_of(const CyclicWord& other) const;
  // True when other is a rotation of this word or of its inverse.
  bool is_conjugate_or_inverse_of(const CyclicWord& other) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return a.base_ <=> b.base_;
  }

 private:
  Word base_;
};

bool is_cyclically_reduced(const Word& u);

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // u == reduce(conjugator . core . conjugator^-1)
};

CyclicReduction cyclically_reduce(const Word& u);

std::vector<CyclicWord> rotations(const CyclicWord& c);

// Adds i to every subscript modulo n. Throws IndexOutOfAlphabet when a
// subscript is >= n.
Word shift_subscripts(const Word& u, long i, std::uint32_t n);

IndexSet involved_indices(const Word& u);

struct PrimitiveRoot {
  Word root;
  int power = 1;
};

// u == root^power with power maximal. Throws EmptyWord or NotCyclicallyReduced.
PrimitiveRoot primitive_root(const Word& u);

}  // namespace cpg
