#pragma once

// Infiniteness certificates for cyclically presented groups G_n(w).
//
// Four rules are tried; the one with the smallest bound wins, ties going to
// the earlier rule. Serialized names are given in quotes.
//
//   kAllInvolvedPair  "Cor1_4"   w involves every x_0..x_k and
//                                <x_0..x_{k-1}> n <x_1..x_k> is
//                                non-exceptional                  n >= 2(k+1)
//   kPurity           "Thm1_3"   w is t-pure                      n >= 2k + 2t
//   kEndpointPair     "Cor1_2"   <x_0..x_{k-1}> n <x_1..x_k> is
//                                non-exceptional                  n >= 4k
//   kAssumedTriviality "Thm1_1_manual"
//                                the k-fold intersection of the shifted
//                                Magnus subgroups is trivial (user
//                                assumption)                      n >= 4k
//
// "Non-exceptional" is established by check_pair() or by an explicit
// NonExceptionalPair assumption; assumptions are never generated.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpg/formcheck.hpp"
#include "cpg/presentation.hpp"

namespace cpg {

enum class Theorem { kNone, kAllInvolvedPair, kPurity, kEndpointPair, kAssumedTriviality };

std::string_view to_string(Theorem t);
Theorem theorem_from_string(std::string_view s);

// Bound attached to a rule. t is only read for kPurity.
std::uint32_t bound_for(Theorem theorem, std::uint32_t k, std::uint32_t t = 0);

struct Assumption {
  enum class Kind { kNonExceptionalPair, kTripleIntersectionTrivial };

  Kind kind = Kind::kNonExceptionalPair;
  // Subsets for kNonExceptionalPair, compared as an unordered pair.
  IndexSet first;
  IndexSet second;
  std::string description;  // kTripleIntersectionTrivial
  std::string source;       // user-supplied justification
  // When set, the assumption only applies to this relator, up to rotation
  // and inversion.
  std::optional<CyclicWord> relator;

  static Assumption non_exceptional(IndexSet first, IndexSet second, std::string source);
  static Assumption triple_trivial(std::string description, std::string source);

  bool matches(const MagnusPair& pair) const;
  bool applies_to(const OneRelatorSpec& spec) const;

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

// Pairs whose non-exceptionality t-purity demands: (M_k, M_0), then for
// i = 1..k-t the pairs (M_{i,i+t-1}, M_0) and (M_{i,i+t-1}, M_k).
// Throws InvalidArgument for t outside 1..k and Condition3Violated when some
// window of t interior generators is absent from the relator.
std::vector<MagnusPair> required_pairs(const OneRelatorSpec& spec, std::uint32_t t);

struct CheckRecord {
  IndexSet first;
  IndexSet second;
  PairVerdict verdict;
  // Index into the assumption list that discharged this pair, if any.
  std::optional<std::size_t> assumed_by;

  bool positive() const {
    return verdict.outcome == Outcome::kCertifiedNonExceptional || assumed_by.has_value();
  }
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct PurityCandidate {
  std::uint32_t t = 0;
  std::vector<CheckRecord> checks;
  bool pure() const;
};

struct PurityReport {
  std::uint32_t k = 0;
  std::uint32_t t_min_syntactic = 0;
  std::vector<PurityCandidate> candidates;
  std::optional<std::uint32_t> certified_t;
};

PurityReport analyze_purity(const OneRelatorSpec& spec, const std::vector<Assumption>& assumptions,
                            const SearchParams& params = {});

struct Certificate {
  CyclicWord word;  // canonical rotation of the normalized relator
  std::uint32_t k = 0;
  Theorem theorem = Theorem::kNone;
  std::optional<std::uint32_t> t;      // kPurity only
  std::optional<std::uint32_t> n_min;  // absent for kNone
  std::vector<CheckRecord> checks;
  std::vector<Assumption> assumptions;  // exactly the ones the rule used
  std::vector<std::string> notes;

  bool certified() const { return theorem != Theorem::kNone; }
  std::string conclusion() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Best certificate for the relator's canonical rotation, or a kNone
// certificate carrying every verdict computed.
Certificate certify(const OneRelatorSpec& spec, const std::vector<Assumption>& assumptions = {},
                    const SearchParams& params = {});

// The t-purity route at one fixed t; nullopt when some required pair is
// neither certified nor assumed.
std::optional<Certificate> certify_t_pure(const OneRelatorSpec& spec, std::uint32_t t,
                                          const std::vector<Assumption>& assumptions = {},
                                          const SearchParams& params = {});

}  // namespace cpg
