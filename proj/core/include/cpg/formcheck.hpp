#pragma once

// Necessary-condition test for exceptional intersections of two Magnus
// subgroups <Y1>, <Y2> of a one-relator group <x_0..x_k | w>.
//
// The intersection can only be exceptional if some rotation of w (or of
// w^-1) has one of two shapes:
//
//   form I :  w1^a1 w2^b1 w1^a2 w2^b2 ... w1^al w2^bl,   w1 in <Y1>, w2 in <Y2>
//   form II:  w3^a1 (v1 v2)^b1 ... w3^al (v1 v2)^bl,      w3 in <Y1 n Y2>,
//                                                         v1 in <Y1>, v2 in <Y2>
//
// The search cuts a rotation into nonempty blocks, each block being the
// reduced power of its component. Blocks are concatenated without
// cancellation, except that a positive cancellation budget lets interior
// block boundaries carry a cancelling pad u u^-1 of shared (Y1 n Y2)
// letters, with the total pad length bounded by the budget. Form II also
// admits the single-block shape (v1 v2)^b with w3 = 1.
//
// Finding no decomposition of either shape proves the intersection is
// non-exceptional only relative to these search rules; finding one proves
// nothing. Verdicts therefore always carry their search parameters.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cpg/free_word.hpp"
#include "cpg/presentation.hpp"

namespace cpg {

struct SearchParams {
  // Largest |exponent| accepted in a witness; 0 selects the relator length
  // plus the cancellation budget, beyond which no block can reach.
  int max_exponent = 0;
  int cancellation_budget = 0;

  // Copy with max_exponent made explicit for a relator of the given length.
  SearchParams resolved(std::size_t relator_length) const;

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

class MagnusPair {
 public:
  // Throws InvalidPair when the subsets coincide or belong to different
  // alphabets.
  MagnusPair(OneRelatorSpec spec, MagnusSubset first, MagnusSubset second);
  // Validates both index sets with magnus_subset().
  static MagnusPair from_indices(const OneRelatorSpec& spec, IndexSet first, IndexSet second);

  const OneRelatorSpec& spec() const { return spec_; }
  const MagnusSubset& first() const { return first_; }
  const MagnusSubset& second() const { return second_; }
  IndexSet shared() const;

  MagnusPair swapped() const { return MagnusPair(spec_, second_, first_); }
  // Same subsets, different relator; the relator must satisfy the same
  // Magnus conditions.
  MagnusPair with_relator(const CyclicWord& relator) const;
  // True when both pairs name the same two subsets in either order.
  bool same_subsets(const MagnusPair& other) const;

 private:
  OneRelatorSpec spec_;
  MagnusSubset first_;
  MagnusSubset second_;
};

// "0,1|1,2"
std::string format_pair(const IndexSet& first, const IndexSet& second);
std::string format_pair(const MagnusPair& pair);

enum class Form { kI, kII };

struct FormIParts {
  Word w1;
  Word w2;
  friend bool operator==(const FormIParts&, const FormIParts&) = default;
};

struct FormIIParts {
  Word w3;  // empty for the single-block shape
  Word v1;
  Word v2;
  friend bool operator==(const FormIIParts&, const FormIIParts&) = default;
};

struct FormWitness {
  // The decomposed word is relator.rotated(rotation_offset), or the same
  // rotation of the inverse relator when `inverted` is set.
  std::size_t rotation_offset = 0;
  bool inverted = false;
  std::variant<FormIParts, FormIIParts> parts;
  // (alpha_j, beta_j) in written order.
  std::vector<std::pair<long, long>> exponents;

  Form form() const { return parts.index() == 0 ? Form::kI : Form::kII; }
  std::size_t component_length() const;
  // The factors w1^a1, w2^b1, ... (or w3^a1, (v1v2)^b1, ...) freely reduced;
  // a zero exponent contributes an empty factor.
  std::vector<Word> factors() const;
  // Free reduction of the whole alternating product.
  Word expand() const;
  // The rotation this witness claims to reproduce.
  Word designated(const CyclicWord& relator) const;
  bool reproduces(const CyclicWord& relator) const { return expand() == designated(relator); }

  friend bool operator==(const FormWitness&, const FormWitness&) = default;
};

// Deterministic preference among witnesses: form I before form II, then
// smaller total component length, then smaller rotation offset, then the
// uninverted relator, then components and exponents lexicographically.
bool witness_precedes(const FormWitness& a, const FormWitness& b);

std::string describe_witness(const FormWitness& w);
// Step-by-step expansion in the word grammar.
std::string explain_witness(const FormWitness& w, const CyclicWord& relator);

enum class Outcome { kCertifiedNonExceptional, kFormMatch, kInconclusive };

std::string_view to_string(Outcome o);

struct PairVerdict {
  Outcome outcome = Outcome::kInconclusive;
  std::optional<FormWitness> witness;  // set iff outcome == kFormMatch
  std::string reason;                  // set iff outcome == kInconclusive
  SearchParams search_params;          // resolved

  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

enum class LetterClass { kFirst, kSecond, kShared, kForeign };

struct AnchorBlock {
  LetterClass side;    // kFirst, kSecond or kForeign
  std::size_t start;   // position in the relator
  std::size_t length;  // cyclic; may wrap past the end
};

// Letters of the relator classified against a pair: letters only in Y1 and
// only in Y2 are anchors; letters in both are flexible. Anchor blocks are
// maximal cyclic segments whose anchors all lie on one side (flexible
// letters inside them included); consecutive blocks sit on different sides
// and the flexible run between them must be split by any decomposition.
struct AlternationSkeleton {
  std::vector<LetterClass> classes;
  std::vector<AnchorBlock> blocks;
  std::vector<std::size_t> flexible_between;  // run after blocks[i]

  // "ABAB": one character per block (A = first side, B = second, X = foreign).
  std::string pattern() const;
};

// Throws DegeneratePair when every letter lies in Y1 or every letter lies
// in Y2.
AlternationSkeleton syllable_factorize(const MagnusPair& pair);

struct FormSearch {
  std::optional<FormWitness> witness;
  // False when some decomposition was rejected only because it needed an
  // exponent beyond max_exponent.
  bool exhaustive = true;
};

FormSearch match_form_i(const MagnusPair& pair, const SearchParams& params = {});
FormSearch match_form_ii(const MagnusPair& pair, const SearchParams& params = {});

// CertifiedNonExceptional iff both searches are exhaustive and find
// nothing; FormMatch with the preferred witness if either finds one;
// Inconclusive otherwise, including when the relator lies inside <Y1> or
// <Y2>.
PairVerdict check_pair(const MagnusPair& pair, const SearchParams& params = {});

// Independent exhaustive enumeration of every cut of every rotation. Throws
// TooLong when the relator exceeds max_len letters.
PairVerdict brute_force_oracle(const MagnusPair& pair, const SearchParams& params = {},
                               std::size_t max_len = 12);

}  // namespace cpg
