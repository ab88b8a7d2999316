// Exhaustive reference for check_pair. Every rotation of the relator and of
// its inverse is cut at every subset of interior positions; roots of each
// block are found by trial (prefix . suffix candidates raised to every
// exponent by plain concatenation), never via cyclic reduction or
// primitive roots.

#include <functional>
#include <map>
#include <string>

#include "cpg/error.hpp"
#include "cpg/formcheck.hpp"
#include "formcheck_common.hpp"

namespace cpg {
namespace {

using Letters = std::vector<Letter>;

bool all_in(const Letters& s, const MagnusSubset& y) {
  for (Letter l : s) {
    if (!y.contains(l.index)) return false;
  }
  return true;
}

bool all_shared(const Letters& s, const MagnusPair& pair) {
  return all_in(s, pair.first()) && all_in(s, pair.second());
}

Word naive_power(const Word& x, long e) {
  Letters raw;
  for (long i = 0; i < e; ++i) raw.insert(raw.end(), x.begin(), x.end());
  return reduce(raw);
}

// x -> e with reduce(x^e) == block, over all nonzero e.
using RootTable = std::map<Word, long>;

class RootCache {
 public:
  const RootTable& roots(const Word& block) {
    auto it = cache_.find(block);
    if (it != cache_.end()) return it->second;
    RootTable table;
    const std::size_t n = block.size();
    for (std::size_t a = 1; a <= n; ++a) {
      for (std::size_t b = 0; a + b <= n; ++b) {
        Letters raw(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(a));
        raw.insert(raw.end(), block.end() - static_cast<std::ptrdiff_t>(b), block.end());
        const Word x = reduce(raw);
        if (x.empty() || table.count(x)) continue;
        for (long e = 1; e <= static_cast<long>(n); ++e) {
          const Word y = naive_power(x, e);
          if (y == block) {
            table[x] = e;
            table[invert(x)] = -e;
            break;
          }
          if (y.size() > n) break;
        }
      }
    }
    return cache_.emplace(block, std::move(table)).first->second;
  }

 private:
  std::map<Word, RootTable> cache_;
};

struct Common {
  Word x;
  std::vector<long> exponents;
  bool within = false;
};

std::vector<Common> common_roots(RootCache& cache, const std::vector<Word>& blocks, int bound) {
  std::vector<Common> out;
  for (const auto& [x, e0] : cache.roots(blocks[0])) {
    Common c{x, {}, true};
    bool shared = true;
    for (const Word& b : blocks) {
      const RootTable& t = cache.roots(b);
      auto it = t.find(x);
      if (it == t.end()) {
        shared = false;
        break;
      }
      c.exponents.push_back(it->second);
      c.within = c.within && (it->second < 0 ? -it->second : it->second) <= bound;
    }
    if (shared) out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::pair<Word, Word>> longest_split(const Word& u, const MagnusPair& pair) {
  for (std::size_t cut = u.size() + 1; cut-- > 0;) {
    const Word v1 = u.subword(0, cut);
    const Word v2 = u.subword(cut, u.size() - cut);
    const Letters l1(v1.begin(), v1.end());
    const Letters l2(v2.begin(), v2.end());
    if (all_in(l1, pair.first()) && all_in(l2, pair.second())) return std::make_pair(v1, v2);
  }
  return std::nullopt;
}

struct Oracle {
  const MagnusPair& pair;
  SearchParams params;
  RootCache cache;
  std::vector<Letters> pads;
  std::optional<FormWitness> best;
  bool exhaustive = true;

  void offer(FormWitness w) {
    if (!best || witness_precedes(w, *best)) best = std::move(w);
  }

  void build_pads() {
    std::vector<Letter> letters;
    for (GenIndex i = 0; i <= pair.spec().k(); ++i) {
      if (pair.first().contains(i) && pair.second().contains(i)) {
        letters.push_back({i, 1});
        letters.push_back({i, -1});
      }
    }
    std::function<void(Letters&)> grow = [&](Letters& cur) {
      if (!cur.empty()) pads.push_back(cur);
      if (static_cast<int>(cur.size()) == params.cancellation_budget) return;
      for (Letter l : letters) {
        if (!cur.empty() && cur.back().is_inverse_of(l)) continue;
        cur.push_back(l);
        grow(cur);
        cur.pop_back();
      }
    };
    Letters start;
    grow(start);
  }

  // Each padded block pad_{j-1}^-1 . seg_j . pad_j must be reduced as written.
  void with_pads(const std::vector<Letters>& segs, const std::function<void(const std::vector<Word>&)>& visit) {
    const std::size_t cuts = segs.size() - 1;
    std::vector<Letters> chosen(cuts);
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
      if (c == cuts) {
        std::vector<Word> blocks;
        for (std::size_t j = 0; j < segs.size(); ++j) {
          Letters raw;
          if (j > 0) {
            for (auto it = chosen[j - 1].rbegin(); it != chosen[j - 1].rend(); ++it) raw.push_back(it->inverse());
          }
          raw.insert(raw.end(), segs[j].begin(), segs[j].end());
          if (j < cuts) raw.insert(raw.end(), chosen[j].begin(), chosen[j].end());
          const Word w = reduce(raw);
          if (w.size() != raw.size()) return;
          blocks.push_back(w);
        }
        visit(blocks);
        return;
      }
      chosen[c].clear();
      rec(c + 1, left);
      for (const Letters& p : pads) {
        if (static_cast<int>(p.size()) > left) continue;
        chosen[c] = p;
        rec(c + 1, left - static_cast<int>(p.size()));
      }
    };
    rec(0, params.cancellation_budget);
  }

  void form_i(const std::vector<Word>& blocks, std::size_t offset, bool inverted) {
    std::vector<Word> odd;
    std::vector<Word> even;
    for (std::size_t j = 0; j < blocks.size(); ++j) (j % 2 ? even : odd).push_back(blocks[j]);
    const auto one = common_roots(cache, odd, params.max_exponent);
    const auto two = common_roots(cache, even, params.max_exponent);
    combine(one, two, offset, inverted, Form::kI);
  }

  void form_ii(const std::vector<Word>& blocks, std::size_t offset, bool inverted) {
    std::vector<Word> w3_blocks;
    std::vector<Word> u_blocks;
    for (std::size_t j = 0; j < blocks.size(); ++j) (j % 2 ? u_blocks : w3_blocks).push_back(blocks[j]);
    const auto one = common_roots(cache, w3_blocks, params.max_exponent);
    auto two = common_roots(cache, u_blocks, params.max_exponent);
    std::erase_if(two, [&](const Common& c) { return !longest_split(c.x, pair); });
    combine(one, two, offset, inverted, Form::kII);
  }

  void form_ii_single(const Word& whole, std::size_t offset, bool inverted) {
    auto roots = common_roots(cache, {whole}, params.max_exponent);
    std::erase_if(roots, [&](const Common& c) { return !longest_split(c.x, pair); });
    bool any_within = false;
    for (const Common& c : roots) {
      if (!c.within) continue;
      any_within = true;
      auto [v1, v2] = *longest_split(c.x, pair);
      FormWitness w;
      w.rotation_offset = offset;
      w.inverted = inverted;
      w.parts = FormIIParts{Word{}, v1, v2};
      w.exponents.emplace_back(0, c.exponents[0]);
      offer(std::move(w));
    }
    if (!roots.empty() && !any_within) exhaustive = false;
  }

  void combine(const std::vector<Common>& one, const std::vector<Common>& two, std::size_t offset, bool inverted,
               Form form) {
    if (one.empty() || two.empty()) return;
    bool matched = false;
    for (const Common& a : one) {
      if (!a.within) continue;
      for (const Common& b : two) {
        if (!b.within) continue;
        matched = true;
        FormWitness w;
        w.rotation_offset = offset;
        w.inverted = inverted;
        if (form == Form::kI) {
          w.parts = FormIParts{a.x, b.x};
        } else {
          auto [v1, v2] = *longest_split(b.x, pair);
          w.parts = FormIIParts{a.x, v1, v2};
        }
        for (std::size_t j = 0; j < a.exponents.size(); ++j) w.exponents.emplace_back(a.exponents[j], b.exponents[j]);
        offer(std::move(w));
      }
    }
    if (!matched) exhaustive = false;
  }

  void run() {
    const Word base = pair.spec().relator().base();
    const std::size_t n = base.size();
    for (bool inverted : {false, true}) {
      const Word oriented = inverted ? invert(base) : base;
      for (std::size_t off = 0; off < n; ++off) {
        Letters rot;
        for (std::size_t i = 0; i < n; ++i) rot.push_back(oriented[(off + i) % n]);
        form_ii_single(Word(rot), off, inverted);
        for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
          std::vector<Letters> segs(1);
          for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && (mask >> (i - 1)) & 1UL) segs.emplace_back();
            segs.back().push_back(rot[i]);
          }
          if (segs.size() % 2 != 0) continue;
          bool fits_i = true;
          bool fits_ii = true;
          for (std::size_t j = 0; j < segs.size(); ++j) {
            fits_i = fits_i && all_in(segs[j], j % 2 == 0 ? pair.first() : pair.second());
            if (j % 2 == 0) fits_ii = fits_ii && all_shared(segs[j], pair);
          }
          if (fits_i) with_pads(segs, [&](const std::vector<Word>& b) { form_i(b, off, inverted); });
          if (fits_ii) with_pads(segs, [&](const std::vector<Word>& b) { form_ii(b, off, inverted); });
        }
      }
    }
  }
};

}  // namespace

PairVerdict brute_force_oracle(const MagnusPair& pair, const SearchParams& params, std::size_t max_len) {
  const std::size_t n = pair.spec().relator().size();
  if (n > max_len) {
    throw Error(ErrorCode::kTooLong,
                "relator has " + std::to_string(n) + " letters; the oracle accepts at most " + std::to_string(max_len));
  }
  PairVerdict v;
  v.search_params = params.resolved(n);
  if (detail::is_degenerate(pair)) {
    v.reason = detail::kInsideOneSubgroup;
    return v;
  }
  Oracle o{pair, v.search_params, {}, {}, std::nullopt, true};
  o.build_pads();
  o.run();
  if (o.best) {
    v.outcome = Outcome::kFormMatch;
    v.witness = o.best;
  } else if (o.exhaustive) {
    v.outcome = Outcome::kCertifiedNonExceptional;
  } else {
    v.reason = detail::kExponentBound;
  }
  return v;
}

}  // namespace cpg
