#include "cpg/free_word.hpp"

#include <algorithm>
#include <string>

#include "cpg/error.hpp"

namespace cpg {

Word::Word(std::span<const Letter> letters) : Word(reduce(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::subword(std::size_t pos, std::size_t len) const {
  auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(Trusted{}, std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    if (l.sign != 1 && l.sign != -1) {
      throw Error(ErrorCode::kInvalidArgument, "letter sign must be +1 or -1");
    }
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(Word::Trusted{}, std::move(stack));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  // The inverse of a reduced word is reduced; reduce() is linear anyway.
  return reduce(out);
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.begin(), u.end());
  raw.insert(raw.end(), v.begin(), v.end());
  return reduce(raw);
}

Word power(const Word& u, long e) {
  if (e == 0 || u.empty()) return {};
  if (e < 0) return power(invert(u), -e);
  // u = g c g^-1 with c cyclically reduced, so u^e = g c^e g^-1 exactly.
  auto [core, g] = cyclically_reduce(u);
  std::vector<Letter> raw(g.begin(), g.end());
  for (long i = 0; i < e; ++i) raw.insert(raw.end(), core.base().begin(), core.base().end());
  Word gi = invert(g);
  raw.insert(raw.end(), gi.begin(), gi.end());
  return reduce(raw);
}

bool is_cyclically_reduced(const Word& u) {
  return u.size() < 2 || !u.front().is_inverse_of(u.back());
}

CyclicWord::CyclicWord(Word base) : base_(std::move(base)) {
  if (!is_cyclically_reduced(base_)) {
    throw Error(ErrorCode::kNotCyclicallyReduced, "word is not cyclically reduced");
  }
}

CyclicWord CyclicWord::rotated(std::size_t offset) const {
  if (base_.empty()) return *this;
  offset %= base_.size();
  std::vector<Letter> out(base_.begin() + static_cast<std::ptrdiff_t>(offset), base_.end());
  out.insert(out.end(), base_.begin(), base_.begin() + static_cast<std::ptrdiff_t>(offset));
  return CyclicWord(Word(out));
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(invert(base_)); }

CyclicWord CyclicWord::canonical() const {
  CyclicWord best = *this;
  for (std::size_t i = 1; i < size(); ++i) {
    CyclicWord r = rotated(i);
    if (r < best) best = std::move(r);
  }
  return best;
}

bool CyclicWord::is_rotation_of(const CyclicWord& other) const {
  return size() == other.size() && canonical() == other.canonical();
}

bool CyclicWord::is_conjugate_or_inverse_of(const CyclicWord& other) const {
  return is_rotation_of(other) || is_rotation_of(other.inverse());
}

CyclicReduction cyclically_reduce(const Word& u) {
  std::size_t lo = 0;
  std::size_t hi = u.size();
  while (hi - lo >= 2 && u[lo].is_inverse_of(u[hi - 1])) {
    ++lo;
    --hi;
  }
  return {CyclicWord(u.subword(lo, hi - lo)), u.subword(0, lo)};
}

std::vector<CyclicWord> rotations(const CyclicWord& c) {
  if (c.empty()) return {c};
  std::vector<CyclicWord> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.rotated(i));
  return out;
}

Word shift_subscripts(const Word& u, long i, std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "alphabet size must be positive");
  const long shift = ((i % static_cast<long>(n)) + n) % n;
  std::vector<Letter> out;
  out.reserve(u.size());
  for (Letter l : u) {
    if (l.index >= n) {
      throw Error(ErrorCode::kIndexOutOfAlphabet,
                  "subscript " + std::to_string(l.index) + " not below " + std::to_string(n));
    }
    out.push_back({static_cast<GenIndex>((l.index + shift) % n), l.sign});
  }
  return Word(out);
}

IndexSet involved_indices(const Word& u) {
  IndexSet out;
  for (Letter l : u) out.insert(l.index);
  return out;
}

PrimitiveRoot primitive_root(const Word& u) {
  if (u.empty()) throw Error(ErrorCode::kEmptyWord, "primitive root of the empty word");
  if (!is_cyclically_reduced(u)) {
    throw Error(ErrorCode::kNotCyclicallyReduced, "primitive root needs a cyclically reduced word");
  }
  const std::size_t n = u.size();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = u[i] == u[i - period];
    if (periodic) return {u.subword(0, period), static_cast<int>(n / period)};
  }
  return {u, 1};
}

}  // namespace cpg
