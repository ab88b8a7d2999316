#include "cpg/certify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cpg/error.hpp"

namespace cpg {

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::kNone: return "NoCertificate";
    case Theorem::kAllInvolvedPair: return "Cor1_4";
    case Theorem::kPurity: return "Thm1_3";
    case Theorem::kEndpointPair: return "Cor1_2";
    case Theorem::kAssumedTriviality: return "Thm1_1_manual";
  }
  return "Unknown";
}

Theorem theorem_from_string(std::string_view s) {
  for (Theorem t : {Theorem::kNone, Theorem::kAllInvolvedPair, Theorem::kPurity, Theorem::kEndpointPair,
                    Theorem::kAssumedTriviality}) {
    if (to_string(t) == s) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown theorem name '" + std::string(s) + "'");
}

std::uint32_t bound_for(Theorem theorem, std::uint32_t k, std::uint32_t t) {
  switch (theorem) {
    case Theorem::kAllInvolvedPair: return 2 * (k + 1);
    case Theorem::kPurity: return 2 * k + 2 * t;
    case Theorem::kEndpointPair:
    case Theorem::kAssumedTriviality: return 4 * k;
    case Theorem::kNone: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "no bound without a rule");
}

Assumption Assumption::non_exceptional(IndexSet first, IndexSet second, std::string source) {
  Assumption a;
  a.kind = Kind::kNonExceptionalPair;
  a.first = std::move(first);
  a.second = std::move(second);
  a.source = std::move(source);
  return a;
}

Assumption Assumption::triple_trivial(std::string description, std::string source) {
  Assumption a;
  a.kind = Kind::kTripleIntersectionTrivial;
  a.description = std::move(description);
  a.source = std::move(source);
  return a;
}

bool Assumption::applies_to(const OneRelatorSpec& spec) const {
  return !relator || relator->is_conjugate_or_inverse_of(spec.relator());
}

bool Assumption::matches(const MagnusPair& pair) const {
  if (kind != Kind::kNonExceptionalPair || !applies_to(pair.spec())) return false;
  const IndexSet& a = pair.first().indices();
  const IndexSet& b = pair.second().indices();
  return (first == a && second == b) || (first == b && second == a);
}

namespace {

IndexSet range_set(std::uint32_t lo, std::uint32_t hi) {  // [lo, hi]
  IndexSet s;
  for (std::uint32_t i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

MagnusPair endpoint_pair(const OneRelatorSpec& spec) {
  return MagnusPair::from_indices(spec, range_set(0, spec.k() - 1), range_set(1, spec.k()));
}

// Runs each pair check once per certify() call.
class Checker {
 public:
  Checker(const OneRelatorSpec& spec, const std::vector<Assumption>& assumptions, const SearchParams& params)
      : spec_(spec), assumptions_(assumptions), params_(params) {}

  CheckRecord record(const MagnusPair& pair) {
    const auto key = std::make_pair(pair.first().indices(), pair.second().indices());
    auto it = verdicts_.find(key);
    if (it == verdicts_.end()) it = verdicts_.emplace(key, check_pair(pair, params_)).first;
    CheckRecord rec{key.first, key.second, it->second, std::nullopt};
    if (rec.verdict.outcome != Outcome::kCertifiedNonExceptional) {
      for (std::size_t i = 0; i < assumptions_.size(); ++i) {
        if (assumptions_[i].matches(pair)) {
          rec.assumed_by = i;
          break;
        }
      }
    }
    return rec;
  }

  const OneRelatorSpec& spec() const { return spec_; }
  const std::vector<Assumption>& assumptions() const { return assumptions_; }

 private:
  const OneRelatorSpec& spec_;
  const std::vector<Assumption>& assumptions_;
  SearchParams params_;
  std::map<std::pair<IndexSet, IndexSet>, PairVerdict> verdicts_;
};

// Copies the assumptions the records reference and renumbers assumed_by.
void attach_assumptions(Certificate& cert, const std::vector<Assumption>& all) {
  std::map<std::size_t, std::size_t> remap;
  for (CheckRecord& r : cert.checks) {
    if (!r.assumed_by) continue;
    auto [it, inserted] = remap.emplace(*r.assumed_by, cert.assumptions.size());
    if (inserted) cert.assumptions.push_back(all[*r.assumed_by]);
    r.assumed_by = it->second;
  }
}

bool any_searched(const std::vector<CheckRecord>& checks) {
  return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& r) {
    return r.verdict.outcome == Outcome::kCertifiedNonExceptional;
  });
}

const char* const kSearchNote =
    "non-exceptional verdicts mean neither decomposition shape exists under the recorded search "
    "parameters; completeness of the cancellation-free search is not established";
const char* const kGeneralizedNote =
    "pairs other than <x0..x(k-1)>, <x1..xk> were tested with the same two decomposition shapes, "
    "applied to arbitrary Magnus pairs";
const char* const kFourKNote =
    "bound 4k: the free-product embedding step needs n >= 4k although the presentations are set up for "
    "n >= 3k";
const char* const kAllInvolvedNote =
    "every generator x0..xk occurs in the relator; only the pair <x0..x(k-1)>, <x1..xk> is required";

Certificate make_certificate(const OneRelatorSpec& spec, Theorem theorem, std::optional<std::uint32_t> t,
                             std::vector<CheckRecord> checks, const std::vector<Assumption>& all) {
  Certificate c;
  c.word = spec.relator();
  c.k = spec.k();
  c.theorem = theorem;
  c.t = t;
  c.n_min = bound_for(theorem, spec.k(), t.value_or(0));
  c.checks = std::move(checks);
  attach_assumptions(c, all);
  if (any_searched(c.checks)) c.notes.push_back(kSearchNote);
  if (theorem == Theorem::kAllInvolvedPair) c.notes.push_back(kAllInvolvedNote);
  if (theorem == Theorem::kPurity && *t < spec.k()) c.notes.push_back(kGeneralizedNote);
  if (theorem == Theorem::kEndpointPair || theorem == Theorem::kAssumedTriviality) c.notes.push_back(kFourKNote);
  return c;
}

OneRelatorSpec canonical_spec(const OneRelatorSpec& spec) { return OneRelatorSpec(spec.relator().canonical()); }

PurityReport purity(Checker& checker) {
  const OneRelatorSpec& spec = checker.spec();
  PurityReport report;
  report.k = spec.k();
  report.t_min_syntactic = gap_profile(spec).t_min();
  for (std::uint32_t t = report.t_min_syntactic; t <= spec.k(); ++t) {
    PurityCandidate cand{t, {}};
    for (const MagnusPair& p : required_pairs(spec, t)) cand.checks.push_back(checker.record(p));
    if (!report.certified_t && cand.pure()) report.certified_t = t;
    report.candidates.push_back(std::move(cand));
  }
  return report;
}

}  // namespace

std::vector<MagnusPair> required_pairs(const OneRelatorSpec& spec, std::uint32_t t) {
  const std::uint32_t k = spec.k();
  if (t < 1 || t > k) {
    throw Error(ErrorCode::kInvalidArgument, "t = " + std::to_string(t) + " outside 1.." + std::to_string(k));
  }
  if (t < gap_profile(spec).t_min()) {
    throw Error(ErrorCode::kCondition3Violated, "the relator omits " + std::to_string(t) +
                                                    " consecutive interior generators");
  }
  const IndexSet m_k = range_set(0, k - 1);
  const IndexSet m_0 = range_set(1, k);
  std::vector<MagnusPair> out{MagnusPair::from_indices(spec, m_k, m_0)};
  for (std::uint32_t i = 1; i + t <= k; ++i) {
    IndexSet window_complement = range_set(0, k);
    for (std::uint32_t j = i; j < i + t; ++j) window_complement.erase(j);
    out.push_back(MagnusPair::from_indices(spec, window_complement, m_0));
    out.push_back(MagnusPair::from_indices(spec, window_complement, m_k));
  }
  return out;
}

bool PurityCandidate::pure() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.positive(); });
}

PurityReport analyze_purity(const OneRelatorSpec& spec, const std::vector<Assumption>& assumptions,
                            const SearchParams& params) {
  Checker checker(spec, assumptions, params);
  return purity(checker);
}

std::string Certificate::conclusion() const {
  if (!certified()) return "no rule applies; nothing is concluded about G_n(w)";
  const std::string n = std::to_string(*n_min);
  return "for all n >= " + n + ": each <x_i,...,x_{i+" + std::to_string(k) +
         "} | w theta^i> embeds in G_n(w); G_n(w) is infinite";
}

Certificate certify(const OneRelatorSpec& input, const std::vector<Assumption>& assumptions,
                    const SearchParams& params) {
  const OneRelatorSpec spec = canonical_spec(input);
  Checker checker(spec, assumptions, params);
  const std::uint32_t k = spec.k();

  const CheckRecord main = checker.record(endpoint_pair(spec));
  const PurityReport report = purity(checker);

  std::vector<Certificate> found;
  if (spec.involves_all() && main.positive()) {
    found.push_back(make_certificate(spec, Theorem::kAllInvolvedPair, std::nullopt, {main}, assumptions));
  }
  if (report.certified_t) {
    const auto& cand = *std::find_if(report.candidates.begin(), report.candidates.end(),
                                     [&](const PurityCandidate& c) { return c.t == *report.certified_t; });
    found.push_back(make_certificate(spec, Theorem::kPurity, cand.t, cand.checks, assumptions));
  }
  if (main.positive()) {
    found.push_back(make_certificate(spec, Theorem::kEndpointPair, std::nullopt, {main}, assumptions));
  }
  const auto triple = std::find_if(assumptions.begin(), assumptions.end(), [&](const Assumption& a) {
    return a.kind == Assumption::Kind::kTripleIntersectionTrivial && a.applies_to(spec);
  });
  if (triple != assumptions.end()) {
    CheckRecord info = main;
    info.assumed_by.reset();
    Certificate c = make_certificate(spec, Theorem::kAssumedTriviality, std::nullopt, {info}, assumptions);
    c.assumptions.insert(c.assumptions.begin(), *triple);
    found.push_back(std::move(c));
  }

  if (!found.empty()) {
    // Stable: ties keep rule order.
    auto best = std::min_element(found.begin(), found.end(),
                                 [](const Certificate& a, const Certificate& b) { return *a.n_min < *b.n_min; });
    return std::move(*best);
  }

  Certificate none;
  none.word = spec.relator();
  none.k = k;
  none.theorem = Theorem::kNone;
  none.checks.push_back(main);
  for (const PurityCandidate& cand : report.candidates) {
    for (const CheckRecord& r : cand.checks) {
      const bool seen = std::any_of(none.checks.begin(), none.checks.end(), [&](const CheckRecord& x) {
        return x.first == r.first && x.second == r.second;
      });
      if (!seen) none.checks.push_back(r);
    }
  }
  // Nothing was used, so no assumption is listed.
  for (CheckRecord& r : none.checks) r.assumed_by.reset();
  if (any_searched(none.checks)) none.notes.push_back(kSearchNote);
  return none;
}

std::optional<Certificate> certify_t_pure(const OneRelatorSpec& input, std::uint32_t t,
                                          const std::vector<Assumption>& assumptions, const SearchParams& params) {
  const OneRelatorSpec spec = canonical_spec(input);
  Checker checker(spec, assumptions, params);
  std::vector<CheckRecord> checks;
  for (const MagnusPair& p : required_pairs(spec, t)) checks.push_back(checker.record(p));
  const bool pure = std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.positive(); });
  if (!pure) return std::nullopt;
  return make_certificate(spec, Theorem::kPurity, t, std::move(checks), assumptions);
}

}  // namespace cpg
