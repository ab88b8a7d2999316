#include "cpg/formcheck.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cpg/error.hpp"
#include "cpg/word_text.hpp"
#include "formcheck_common.hpp"

namespace cpg {

SearchParams SearchParams::resolved(std::size_t relator_length) const {
  if (max_exponent < 0 || cancellation_budget < 0) {
    throw Error(ErrorCode::kInvalidArgument, "search parameters must be non-negative");
  }
  SearchParams out = *this;
  if (out.max_exponent == 0) {
    out.max_exponent = static_cast<int>(relator_length) + cancellation_budget;
  }
  return out;
}

MagnusPair::MagnusPair(OneRelatorSpec spec, MagnusSubset first, MagnusSubset second)
    : spec_(std::move(spec)), first_(std::move(first)), second_(std::move(second)) {
  if (first_ == second_) {
    throw Error(ErrorCode::kInvalidPair, "the two Magnus subsets coincide: " + format_index_set(first_.indices()));
  }
  if (first_.alphabet_k() != spec_.k() || second_.alphabet_k() != spec_.k()) {
    throw Error(ErrorCode::kInvalidPair, "Magnus subsets belong to a different alphabet");
  }
}

MagnusPair MagnusPair::from_indices(const OneRelatorSpec& spec, IndexSet first, IndexSet second) {
  return MagnusPair(spec, magnus_subset(spec, std::move(first)), magnus_subset(spec, std::move(second)));
}

IndexSet MagnusPair::shared() const {
  IndexSet out;
  std::set_intersection(first_.indices().begin(), first_.indices().end(), second_.indices().begin(),
                        second_.indices().end(), std::inserter(out, out.end()));
  return out;
}

MagnusPair MagnusPair::with_relator(const CyclicWord& relator) const {
  return from_indices(OneRelatorSpec(relator), first_.indices(), second_.indices());
}

bool MagnusPair::same_subsets(const MagnusPair& other) const {
  return (first_.indices() == other.first_.indices() && second_.indices() == other.second_.indices()) ||
         (first_.indices() == other.second_.indices() && second_.indices() == other.first_.indices());
}

std::string format_pair(const IndexSet& first, const IndexSet& second) {
  auto join = [](const IndexSet& s) {
    std::string out;
    for (GenIndex i : s) {
      if (!out.empty()) out += ',';
      out += std::to_string(i);
    }
    return out;
  };
  return join(first) + "|" + join(second);
}

std::string format_pair(const MagnusPair& pair) {
  return format_pair(pair.first().indices(), pair.second().indices());
}

// ---------------------------------------------------------------------------
// Witnesses

std::size_t FormWitness::component_length() const {
  if (const auto* p = std::get_if<FormIParts>(&parts)) return p->w1.size() + p->w2.size();
  const auto& q = std::get<FormIIParts>(parts);
  return q.w3.size() + q.v1.size() + q.v2.size();
}

std::vector<Word> FormWitness::factors() const {
  Word first;
  Word second;
  if (const auto* p = std::get_if<FormIParts>(&parts)) {
    first = p->w1;
    second = p->w2;
  } else {
    const auto& q = std::get<FormIIParts>(parts);
    first = q.w3;
    second = multiply(q.v1, q.v2);
  }
  std::vector<Word> out;
  for (auto [a, b] : exponents) {
    out.push_back(power(first, a));
    out.push_back(power(second, b));
  }
  return out;
}

Word FormWitness::expand() const {
  std::vector<Letter> raw;
  for (const Word& f : factors()) raw.insert(raw.end(), f.begin(), f.end());
  return reduce(raw);
}

Word FormWitness::designated(const CyclicWord& relator) const {
  const CyclicWord oriented = inverted ? relator.inverse() : relator;
  return oriented.rotated(rotation_offset).base();
}

bool witness_precedes(const FormWitness& a, const FormWitness& b) {
  auto key = [](const FormWitness& w) {
    return std::make_tuple(w.form() == Form::kII, w.component_length(), w.rotation_offset, w.inverted);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  if (a.parts != b.parts) {
    if (const auto* p = std::get_if<FormIParts>(&a.parts)) {
      const auto& q = std::get<FormIParts>(b.parts);
      return std::tie(p->w1, p->w2) < std::tie(q.w1, q.w2);
    }
    const auto& p = std::get<FormIIParts>(a.parts);
    const auto& q = std::get<FormIIParts>(b.parts);
    return std::tie(p.w3, p.v1, p.v2) < std::tie(q.w3, q.v1, q.v2);
  }
  return a.exponents < b.exponents;
}

std::string describe_witness(const FormWitness& w) {
  std::ostringstream out;
  if (const auto* p = std::get_if<FormIParts>(&w.parts)) {
    out << "form I: w1 = " << format_word(p->w1) << ", w2 = " << format_word(p->w2);
  } else {
    const auto& q = std::get<FormIIParts>(w.parts);
    out << "form II: w3 = " << format_word(q.w3) << ", v1 = " << format_word(q.v1)
        << ", v2 = " << format_word(q.v2);
  }
  out << ", exponents (";
  for (std::size_t i = 0; i < w.exponents.size(); ++i) {
    if (i) out << ", ";
    out << "(" << w.exponents[i].first << "," << w.exponents[i].second << ")";
  }
  out << "), rotation " << w.rotation_offset << (w.inverted ? " of the inverse" : "");
  return out.str();
}

std::string explain_witness(const FormWitness& w, const CyclicWord& relator) {
  std::ostringstream out;
  out << describe_witness(w) << "\n";
  const bool form_i = w.form() == Form::kI;
  const auto factors = w.factors();
  for (std::size_t j = 0; j < w.exponents.size(); ++j) {
    const auto [a, b] = w.exponents[j];
    out << "  " << (form_i ? "w1" : "w3") << "^" << a << " = " << format_word(factors[2 * j]) << "\n";
    out << "  " << (form_i ? "w2" : "(v1 v2)") << "^" << b << " = " << format_word(factors[2 * j + 1]) << "\n";
  }
  out << "  product    = ";
  bool first = true;
  for (const Word& f : factors) {
    if (f.empty()) continue;
    out << (first ? "" : " . ") << format_word(f);
    first = false;
  }
  out << "\n  reduced    = " << format_word(w.expand()) << "\n";
  out << "  designated = " << format_word(w.designated(relator)) << (w.inverted ? " (inverse relator)" : "")
      << "\n";
  out << "  " << (w.reproduces(relator) ? "match" : "MISMATCH") << "\n";
  return out.str();
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kCertifiedNonExceptional: return "CertifiedNonExceptional";
    case Outcome::kFormMatch: return "FormMatch";
    case Outcome::kInconclusive: return "Inconclusive";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Skeleton

std::string AlternationSkeleton::pattern() const {
  std::string out;
  for (const auto& b : blocks) {
    out += b.side == LetterClass::kFirst ? 'A' : b.side == LetterClass::kSecond ? 'B' : 'X';
  }
  return out;
}

namespace detail {

LetterClass classify(Letter l, const MagnusPair& pair) {
  const bool in1 = pair.first().contains(l.index);
  const bool in2 = pair.second().contains(l.index);
  if (in1 && in2) return LetterClass::kShared;
  if (in1) return LetterClass::kFirst;
  if (in2) return LetterClass::kSecond;
  return LetterClass::kForeign;
}

bool is_degenerate(const MagnusPair& pair) {
  bool inside_first = true;
  bool inside_second = true;
  for (Letter l : pair.spec().relator().base()) {
    inside_first = inside_first && pair.first().contains(l.index);
    inside_second = inside_second && pair.second().contains(l.index);
  }
  return inside_first || inside_second;
}

const char* const kInsideOneSubgroup = "relator inside one subgroup";
const char* const kExponentBound = "exponent bound reached before the search was exhausted";

}  // namespace detail

AlternationSkeleton syllable_factorize(const MagnusPair& pair) {
  if (detail::is_degenerate(pair)) {
    throw Error(ErrorCode::kDegeneratePair, "relator lies inside <" + format_index_set(pair.first().indices()) +
                                                "> or <" + format_index_set(pair.second().indices()) + ">");
  }
  const Word& r = pair.spec().relator().base();
  const std::size_t n = r.size();
  AlternationSkeleton sk;
  for (Letter l : r) sk.classes.push_back(detail::classify(l, pair));

  std::vector<std::size_t> anchors;
  for (std::size_t i = 0; i < n; ++i) {
    if (sk.classes[i] != LetterClass::kShared) anchors.push_back(i);
  }
  // Start at an anchor whose cyclic predecessor anchor is on another side,
  // so blocks never straddle the starting point.
  const std::size_t m = anchors.size();
  std::size_t first = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (sk.classes[anchors[j]] != sk.classes[anchors[(j + m - 1) % m]]) {
      first = j;
      break;
    }
  }
  for (std::size_t step = 0; step < m;) {
    const std::size_t j = (first + step) % m;
    const LetterClass side = sk.classes[anchors[j]];
    std::size_t last = j;
    ++step;
    while (step < m && sk.classes[anchors[(first + step) % m]] == side) {
      last = (first + step) % m;
      ++step;
    }
    const std::size_t start = anchors[j];
    const std::size_t end = anchors[last];
    sk.blocks.push_back({side, start, (end + n - start) % n + 1});
    const std::size_t next = anchors[(first + step) % m];
    sk.flexible_between.push_back((next + n - end - 1) % n);
  }
  return sk;
}

// ---------------------------------------------------------------------------
// Structured search: cuts are only placed where the anchors allow them, and
// common roots come from cyclic reduction plus primitive roots.

namespace {

struct Oriented {
  std::vector<Letter> s;
  std::vector<LetterClass> cls;
  bool inverted = false;
};

std::vector<Oriented> orientations(const MagnusPair& pair) {
  std::vector<Oriented> out;
  for (bool inverted : {false, true}) {
    const Word w = inverted ? invert(pair.spec().relator().base()) : pair.spec().relator().base();
    Oriented o{{w.begin(), w.end()}, {}, inverted};
    for (Letter l : o.s) o.cls.push_back(detail::classify(l, pair));
    out.push_back(std::move(o));
  }
  return out;
}

// All blocks are conj . root^(power_j) . conj^-1 with a single primitive,
// cyclically reduced root.
struct RootFamily {
  Word conj;
  Word root;
  std::vector<long> powers;  // signed
  long gcd = 0;
};

std::optional<RootFamily> common_root(const std::vector<Word>& blocks) {
  RootFamily fam;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto [core, g] = cyclically_reduce(blocks[j]);
    const PrimitiveRoot pr = primitive_root(core.base());
    if (j == 0) {
      fam.conj = g;
      fam.root = pr.root;
      fam.powers.push_back(pr.power);
    } else {
      if (g != fam.conj) return std::nullopt;
      if (pr.root == fam.root) {
        fam.powers.push_back(pr.power);
      } else if (pr.root == invert(fam.root)) {
        fam.powers.push_back(-pr.power);
      } else {
        return std::nullopt;
      }
    }
    fam.gcd = std::gcd(fam.gcd, static_cast<long>(pr.power));
  }
  return fam;
}

struct Candidate {
  Word component;
  std::vector<long> exponents;
};

struct Candidates {
  std::vector<Candidate> within;
  bool beyond = false;  // some accepted candidate exists, none within bounds
};

// Every component x with block_j == reduce(x^e_j), restricted by `accept`.
Candidates components_of(const RootFamily& fam, int max_exponent,
                         const std::function<bool(const Word&)>& accept) {
  Candidates out;
  bool any = false;
  const Word conj_inv = invert(fam.conj);
  for (long d = 1; d <= fam.gcd; ++d) {
    if (fam.gcd % d != 0) continue;
    for (int sign : {1, -1}) {
      Candidate c;
      c.component = multiply(multiply(fam.conj, power(fam.root, sign * d)), conj_inv);
      if (!accept(c.component)) continue;
      any = true;
      bool ok = true;
      for (long p : fam.powers) {
        const long e = sign * p / d;
        ok = ok && (e < 0 ? -e : e) <= max_exponent;
        c.exponents.push_back(e);
      }
      if (ok) out.within.push_back(std::move(c));
    }
  }
  out.beyond = any && out.within.empty();
  return out;
}

bool accept_any(const Word&) { return true; }

struct SearchState {
  const MagnusPair& pair;
  SearchParams params;
  std::vector<Word> pads;  // reduced words over shared letters, length 1..budget
  std::optional<FormWitness> best;
  bool exhaustive = true;

  void offer(FormWitness w) {
    if (!best || witness_precedes(w, *best)) best = std::move(w);
  }
};

std::vector<Word> shared_pads(const MagnusPair& pair, int budget) {
  std::vector<Word> out;
  if (budget <= 0) return out;
  std::vector<Letter> letters;
  for (GenIndex i : pair.shared()) {
    letters.push_back(gen(i));
    letters.push_back(inv(i));
  }
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= budget; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter l : letters) {
        if (!w.empty() && w.back().is_inverse_of(l)) continue;
        std::vector<Letter> raw(w.begin(), w.end());
        raw.push_back(l);
        next.push_back(Word(raw));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Literal concatenation; nullopt if it is not freely reduced.
std::optional<Word> join_reduced(const Word& a, const Word& b, const Word& c) {
  std::vector<Letter> raw(a.begin(), a.end());
  raw.insert(raw.end(), b.begin(), b.end());
  raw.insert(raw.end(), c.begin(), c.end());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i].is_inverse_of(raw[i - 1])) return std::nullopt;
  }
  return Word(raw);
}

// Calls `visit` with each padded version of `segments`. Pads sit between
// consecutive segments only, never across the wrap.
void for_each_padding(const SearchState& st, const std::vector<Word>& segments,
                      const std::function<void(const std::vector<Word>&)>& visit) {
  if (st.params.cancellation_budget == 0 || segments.size() < 2) {
    visit(segments);
    return;
  }
  const std::size_t boundaries = segments.size() - 1;
  std::vector<const Word*> chosen(boundaries, nullptr);
  const Word empty;
  std::function<void(std::size_t, int)> rec = [&](std::size_t b, int budget) {
    if (b == boundaries) {
      std::vector<Word> padded;
      padded.reserve(segments.size());
      for (std::size_t j = 0; j < segments.size(); ++j) {
        const Word left = j == 0 ? Word{} : invert(*chosen[j - 1]);
        const Word& right = j == boundaries ? empty : *chosen[j];
        auto p = join_reduced(left, segments[j], right);
        if (!p) return;
        padded.push_back(std::move(*p));
      }
      visit(padded);
      return;
    }
    chosen[b] = &empty;
    rec(b + 1, budget);
    for (const Word& pad : st.pads) {
      if (static_cast<int>(pad.size()) > budget) break;
      chosen[b] = &pad;
      rec(b + 1, budget - static_cast<int>(pad.size()));
    }
  };
  rec(0, st.params.cancellation_budget);
}

// Splits u as v1 v2 with v1 over the first subset and v2 over the second,
// taking v1 as long as possible.
std::optional<std::pair<Word, Word>> split_product(const Word& u, const MagnusPair& pair) {
  std::size_t cut = 0;
  while (cut < u.size() && pair.first().contains(u[cut].index)) ++cut;
  for (std::size_t i = cut; i < u.size(); ++i) {
    if (!pair.second().contains(u[i].index)) return std::nullopt;
  }
  return std::make_pair(u.subword(0, cut), u.subword(cut, u.size() - cut));
}

// Blocks in written order, alternating first-kind / second-kind starting at
// a first-kind block. Offers every witness the blocks admit.
void evaluate_blocks(SearchState& st, const std::vector<Word>& blocks, std::size_t offset, bool inverted,
                     Form form) {
  std::vector<Word> odd;
  std::vector<Word> even;
  for (std::size_t j = 0; j < blocks.size(); ++j) (j % 2 == 0 ? odd : even).push_back(blocks[j]);
  const auto fam1 = common_root(odd);
  if (!fam1) return;
  const auto fam2 = common_root(even);
  if (!fam2) return;
  const int bound = st.params.max_exponent;
  const Candidates c1 = components_of(*fam1, bound, accept_any);
  const Candidates c2 =
      form == Form::kI ? components_of(*fam2, bound, accept_any)
                       : components_of(*fam2, bound, [&](const Word& u) { return split_product(u, st.pair).has_value(); });
  if (c1.within.empty() || c2.within.empty()) {
    if ((c1.beyond || !c1.within.empty()) && (c2.beyond || !c2.within.empty())) st.exhaustive = false;
    return;
  }
  for (const Candidate& a : c1.within) {
    for (const Candidate& b : c2.within) {
      FormWitness w;
      w.rotation_offset = offset;
      w.inverted = inverted;
      if (form == Form::kI) {
        w.parts = FormIParts{a.component, b.component};
      } else {
        auto [v1, v2] = *split_product(b.component, st.pair);
        w.parts = FormIIParts{a.component, v1, v2};
      }
      for (std::size_t j = 0; j < a.exponents.size(); ++j) w.exponents.emplace_back(a.exponents[j], b.exponents[j]);
      st.offer(std::move(w));
    }
  }
}

// A cyclic configuration: sorted block starts and, for each block, whether
// it is a first-kind block (w1 or w3 blocks).
void evaluate_configuration(SearchState& st, const Oriented& o, const std::vector<std::size_t>& starts,
                            const std::vector<bool>& first_kind, Form form) {
  const std::size_t n = o.s.size();
  const std::size_t m = starts.size();
  const Word whole(o.s);
  auto segment = [&](std::size_t j) {
    const std::size_t a = starts[j];
    const std::size_t b = starts[(j + 1) % m];
    const std::size_t len = (b + n - a) % n == 0 ? n : (b + n - a) % n;
    std::vector<Letter> raw;
    for (std::size_t i = 0; i < len; ++i) raw.push_back(o.s[(a + i) % n]);
    return Word(raw);
  };
  std::vector<Word> segs;
  for (std::size_t j = 0; j < m; ++j) segs.push_back(segment(j));

  for (std::size_t wrap = 0; wrap < m; ++wrap) {
    if (!first_kind[wrap]) continue;
    std::vector<Word> ordered;
    for (std::size_t j = 0; j < m; ++j) ordered.push_back(segs[(wrap + j) % m]);
    for_each_padding(st, ordered, [&](const std::vector<Word>& blocks) {
      evaluate_blocks(st, blocks, starts[wrap], o.inverted, form);
    });
    // Without padding every wrap point yields the same components; the
    // first-kind block with the smallest start gives the preferred offset.
    if (st.params.cancellation_budget == 0) break;
  }
}

// Form I: between consecutive anchors the number of cuts is odd when the
// anchors lie on different sides and even otherwise.
void search_form_i(SearchState& st, const Oriented& o) {
  const std::size_t n = o.s.size();
  std::vector<std::size_t> anchors;
  for (std::size_t i = 0; i < n; ++i) {
    if (o.cls[i] != LetterClass::kShared) anchors.push_back(i);
  }
  const std::size_t m = anchors.size();
  std::vector<std::size_t> cuts;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == m) {
      std::vector<std::size_t> starts = cuts;
      std::sort(starts.begin(), starts.end());
      // Side of each block: walk from the first anchor, toggling at cuts.
      std::vector<bool> is_cut(n, false);
      for (std::size_t c : starts) is_cut[c] = true;
      std::vector<bool> side_at(n);
      bool side = o.cls[anchors[0]] == LetterClass::kFirst;
      for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = (anchors[0] + step) % n;
        if (step > 0 && is_cut[i]) side = !side;
        side_at[i] = side;
      }
      std::vector<bool> first_kind;
      for (std::size_t s : starts) first_kind.push_back(side_at[s]);
      evaluate_configuration(st, o, starts, first_kind, Form::kI);
      return;
    }
    const std::size_t a = anchors[g];
    const std::size_t b = anchors[(g + 1) % m];
    const std::size_t slots = (b + n - a - 1) % n + 1;  // cut positions a+1 .. b
    const bool change = o.cls[a] != o.cls[b];
    // Choose a subset of the slots with the right parity.
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t slot, std::size_t count) {
      if (slot == slots) {
        if ((count % 2 == 1) == change) rec(g + 1);
        return;
      }
      pick(slot + 1, count);
      cuts.push_back((a + 1 + slot) % n);
      pick(slot + 1, count + 1);
      cuts.pop_back();
    };
    pick(0, 0);
  };
  rec(0);
}

// Form II with w3 = 1: the whole rotation is a power of v1 v2.
void search_form_ii_single(SearchState& st, const Oriented& o) {
  const std::size_t n = o.s.size();
  for (std::size_t off = 0; off < n; ++off) {
    std::vector<Letter> raw(o.s.begin() + static_cast<std::ptrdiff_t>(off), o.s.end());
    raw.insert(raw.end(), o.s.begin(), o.s.begin() + static_cast<std::ptrdiff_t>(off));
    const auto fam = common_root({Word(raw)});
    const Candidates c = components_of(*fam, st.params.max_exponent,
                                       [&](const Word& u) { return split_product(u, st.pair).has_value(); });
    if (c.beyond) st.exhaustive = false;
    for (const Candidate& cand : c.within) {
      auto [v1, v2] = *split_product(cand.component, st.pair);
      FormWitness w;
      w.rotation_offset = off;
      w.inverted = o.inverted;
      w.parts = FormIIParts{Word{}, v1, v2};
      w.exponents.emplace_back(0, cand.exponents[0]);
      st.offer(std::move(w));
    }
  }
}

// Form II with w3 != 1: w3 blocks sit inside maximal runs of shared letters.
void search_form_ii_blocks(SearchState& st, const Oriented& o) {
  const std::size_t n = o.s.size();
  // Maximal cyclic runs of shared letters (a non-shared letter exists).
  std::size_t pivot = 0;
  while (o.cls[pivot] == LetterClass::kShared) ++pivot;
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t i = (pivot + step) % n;
    if (o.cls[i] != LetterClass::kShared) continue;
    const std::size_t prev = (i + n - 1) % n;
    if (o.cls[prev] == LetterClass::kShared) {
      ++runs.back().second;
    } else {
      runs.emplace_back(i, 1);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> chosen;  // w3 intervals (start, length)
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == runs.size()) {
      if (chosen.empty()) return;
      auto intervals = chosen;
      std::sort(intervals.begin(), intervals.end());
      std::vector<std::size_t> starts;
      std::vector<bool> first_kind;
      for (auto [s, len] : intervals) {
        starts.push_back(s);
        first_kind.push_back(true);
        starts.push_back((s + len) % n);
        first_kind.push_back(false);
      }
      // Interval ends may wrap below later starts; keep starts sorted.
      std::vector<std::size_t> idx(starts.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return starts[a] < starts[b]; });
      std::vector<std::size_t> s2;
      std::vector<bool> k2;
      for (std::size_t i : idx) {
        s2.push_back(starts[i]);
        k2.push_back(first_kind[i]);
      }
      evaluate_configuration(st, o, s2, k2, Form::kII);
      return;
    }
    const auto [run_start, run_len] = runs[r];
    // Disjoint, non-adjacent subintervals of this run.
    std::function<void(std::size_t)> place = [&](std::size_t from) {
      rec(r + 1);
      for (std::size_t a = from; a < run_len; ++a) {
        for (std::size_t len = 1; a + len <= run_len; ++len) {
          chosen.emplace_back((run_start + a) % n, len);
          place(a + len + 1);
          chosen.pop_back();
        }
      }
    };
    place(0);
  };
  rec(0);
}

bool has_foreign(const MagnusPair& pair) {
  for (Letter l : pair.spec().relator().base()) {
    if (detail::classify(l, pair) == LetterClass::kForeign) return true;
  }
  return false;
}

FormSearch run_search(const MagnusPair& pair, const SearchParams& params, Form form) {
  SearchState st{pair, params.resolved(pair.spec().relator().size()), {}, std::nullopt, true};
  // Degenerate pairs admit no alternation; a letter outside both subsets
  // fits no block.
  if (detail::is_degenerate(pair) || has_foreign(pair)) return {};
  st.pads = shared_pads(pair, st.params.cancellation_budget);
  for (const Oriented& o : orientations(pair)) {
    if (form == Form::kI) {
      search_form_i(st, o);
    } else {
      search_form_ii_single(st, o);
      search_form_ii_blocks(st, o);
    }
  }
  return {st.best, st.best.has_value() || st.exhaustive};
}

}  // namespace

FormSearch match_form_i(const MagnusPair& pair, const SearchParams& params) {
  return run_search(pair, params, Form::kI);
}

FormSearch match_form_ii(const MagnusPair& pair, const SearchParams& params) {
  return run_search(pair, params, Form::kII);
}

PairVerdict check_pair(const MagnusPair& pair, const SearchParams& params) {
  PairVerdict v;
  v.search_params = params.resolved(pair.spec().relator().size());
  if (detail::is_degenerate(pair)) {
    v.outcome = Outcome::kInconclusive;
    v.reason = detail::kInsideOneSubgroup;
    return v;
  }
  const FormSearch one = match_form_i(pair, params);
  const FormSearch two = match_form_ii(pair, params);
  if (one.witness || two.witness) {
    v.outcome = Outcome::kFormMatch;
    v.witness = one.witness ? one.witness : two.witness;
  } else if (one.exhaustive && two.exhaustive) {
    v.outcome = Outcome::kCertifiedNonExceptional;
  } else {
    v.outcome = Outcome::kInconclusive;
    v.reason = detail::kExponentBound;
  }
  return v;
}

}  // namespace cpg
