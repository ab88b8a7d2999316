#include <gtest/gtest.h>

#include <random>

#include "cpg/certificate_json.hpp"
#include "cpg/certify.hpp"
#include "cpg/error.hpp"
#include "cpg/word_text.hpp"
#include "random_words.hpp"
#include "test_seed.hpp"

using namespace cpg;

namespace {

const char* const kFirstExample = "x1^-1 x0^-1 x2 x0 x1 x2^-2";
const char* const kThirdExample = "x2^-1 x0^-1 x1 x0 x2 x1^-2";
const char* const kFiveBlock = "x0 x2 x0 x1 x0 x2";

OneRelatorSpec S(const char* s) { return OneRelatorSpec(CyclicWord(parse_word(s))); }

std::string higman(std::uint32_t k) {
  const std::string xk = "x" + std::to_string(k);
  return "x0^-1 " + xk + " x0 " + xk + "^-2";
}

using PairList = std::vector<std::pair<IndexSet, IndexSet>>;

PairList as_sets(const std::vector<MagnusPair>& pairs) {
  PairList out;
  for (const MagnusPair& p : pairs) out.emplace_back(p.first().indices(), p.second().indices());
  return out;
}

std::vector<Assumption> assume_all(const OneRelatorSpec& spec, std::uint32_t t) {
  std::vector<Assumption> out;
  for (const MagnusPair& p : required_pairs(spec, t)) {
    out.push_back(Assumption::non_exceptional(p.first().indices(), p.second().indices(), "test"));
  }
  return out;
}

}  // namespace

TEST(Bounds, Formulas) {
  EXPECT_EQ(bound_for(Theorem::kAllInvolvedPair, 2), 6U);
  EXPECT_EQ(bound_for(Theorem::kEndpointPair, 2), 8U);
  EXPECT_EQ(bound_for(Theorem::kAssumedTriviality, 3), 12U);
  EXPECT_EQ(bound_for(Theorem::kPurity, 3, 1), 8U);
  for (std::uint32_t k = 1; k < 10; ++k) {
    EXPECT_EQ(bound_for(Theorem::kPurity, k, k), bound_for(Theorem::kEndpointPair, k));
    for (std::uint32_t t = 1; t < k; ++t) EXPECT_LT(bound_for(Theorem::kPurity, k, t), bound_for(Theorem::kPurity, k, t + 1));
  }
  EXPECT_THROW(bound_for(Theorem::kNone, 2), Error);
}

TEST(Theorem, WireNames) {
  EXPECT_EQ(to_string(Theorem::kAllInvolvedPair), "Cor1_4");
  EXPECT_EQ(to_string(Theorem::kPurity), "Thm1_3");
  EXPECT_EQ(to_string(Theorem::kEndpointPair), "Cor1_2");
  EXPECT_EQ(to_string(Theorem::kAssumedTriviality), "Thm1_1_manual");
  for (Theorem t : {Theorem::kNone, Theorem::kAllInvolvedPair, Theorem::kPurity, Theorem::kEndpointPair,
                    Theorem::kAssumedTriviality}) {
    EXPECT_EQ(theorem_from_string(to_string(t)), t);
  }
  EXPECT_THROW(theorem_from_string("Cor9"), Error);
}

TEST(RequiredPairs, Examples) {
  EXPECT_EQ(as_sets(required_pairs(S(kFirstExample), 2)), (PairList{{{0, 1}, {1, 2}}}));
  EXPECT_EQ(as_sets(required_pairs(S(kFirstExample), 1)),
            (PairList{{{0, 1}, {1, 2}}, {{0, 2}, {1, 2}}, {{0, 2}, {0, 1}}}));
  EXPECT_EQ(as_sets(required_pairs(S("x0 x1 x3"), 2)),
            (PairList{{{0, 1, 2}, {1, 2, 3}}, {{0, 3}, {1, 2, 3}}, {{0, 3}, {0, 1, 2}}}));
}

TEST(RequiredPairs, Errors) {
  try {
    required_pairs(S(higman(2).c_str()), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCondition3Violated);
  }
  EXPECT_THROW(required_pairs(S(kFirstExample), 0), Error);
  EXPECT_THROW(required_pairs(S(kFirstExample), 3), Error);
}

TEST(AnalyzePurity, HigmanWord) {
  const PurityReport r = analyze_purity(S(higman(2).c_str()), {});
  EXPECT_EQ(r.k, 2U);
  EXPECT_EQ(r.t_min_syntactic, 2U);
  ASSERT_EQ(r.candidates.size(), 1U);
  EXPECT_EQ(r.candidates[0].t, 2U);
  EXPECT_EQ(r.candidates[0].checks[0].verdict.outcome, Outcome::kFormMatch);
  EXPECT_FALSE(r.certified_t);
}

TEST(AnalyzePurity, FiveBlockWord) {
  // At t = 1 the pair 0,2|1,2 matches form I, so purity first holds at t = 2.
  const PurityReport r = analyze_purity(S(kFiveBlock), {});
  ASSERT_EQ(r.candidates.size(), 2U);
  EXPECT_EQ(r.candidates[0].checks.size(), 3U);
  EXPECT_EQ(r.candidates[0].checks[0].verdict.outcome, Outcome::kCertifiedNonExceptional);
  EXPECT_EQ(r.candidates[0].checks[1].verdict.outcome, Outcome::kFormMatch);
  EXPECT_FALSE(r.candidates[0].pure());
  EXPECT_TRUE(r.candidates[1].pure());
  EXPECT_EQ(r.certified_t, 2U);
}

TEST(AnalyzePurity, AssumptionsDischargeEveryPair) {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 40; ++trial) {
    const OneRelatorSpec spec(cli::random_relator(rng, 3, 2, 8));
    const PurityReport r = analyze_purity(spec, assume_all(spec, spec.k()));
    ASSERT_TRUE(r.certified_t) << format_word(spec.relator());
    EXPECT_LE(*r.certified_t, spec.k());
  }
}

TEST(Certify, FirstExampleWithAssumption) {
  const auto a = Assumption::non_exceptional({0, 1}, {1, 2}, "hand computation");
  const Certificate c = certify(S(kFirstExample), {a});
  EXPECT_EQ(c.theorem, Theorem::kAllInvolvedPair);
  EXPECT_EQ(c.n_min, 6U);
  EXPECT_FALSE(c.t);
  ASSERT_EQ(c.assumptions.size(), 1U);
  EXPECT_EQ(c.assumptions[0], a);
  ASSERT_EQ(c.checks.size(), 1U);
  EXPECT_EQ(c.checks[0].verdict.outcome, Outcome::kFormMatch);
  EXPECT_EQ(c.checks[0].assumed_by, 0U);
  EXPECT_EQ(c.word, CyclicWord(parse_word(kFirstExample)).canonical());
  EXPECT_EQ(c.conclusion(),
            "for all n >= 6: each <x_i,...,x_{i+2} | w theta^i> embeds in G_n(w); G_n(w) is infinite");
}

TEST(Certify, FirstExampleWithoutAssumption) {
  const Certificate c = certify(S(kFirstExample));
  EXPECT_EQ(c.theorem, Theorem::kNone);
  EXPECT_FALSE(c.n_min);
  EXPECT_TRUE(c.assumptions.empty());
  EXPECT_EQ(c.checks.size(), 3U);
}

TEST(Certify, ThirdExampleWithTripleAssumption) {
  const auto a = Assumption::triple_trivial("k-fold intersection trivial", "hand computation");
  const Certificate c = certify(S(kThirdExample), {a});
  EXPECT_EQ(c.theorem, Theorem::kAssumedTriviality);
  EXPECT_EQ(c.n_min, 8U);
  ASSERT_EQ(c.assumptions.size(), 1U);
  EXPECT_EQ(c.assumptions[0], a);
}

TEST(Certify, HigmanWordsGetNoCertificate) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const Certificate c = certify(S(higman(k).c_str()));
    EXPECT_EQ(c.theorem, Theorem::kNone) << higman(k);
    EXPECT_FALSE(c.certified());
  }
}

TEST(Certify, FiveBlockWordPrefersAllInvolvedRule) {
  const Certificate c = certify(S(kFiveBlock));
  EXPECT_EQ(c.theorem, Theorem::kAllInvolvedPair);
  EXPECT_EQ(c.n_min, 6U);
  EXPECT_TRUE(c.assumptions.empty());
}

TEST(Certify, PurityAtTopEqualsEndpointBound) {
  std::mt19937_64 rng(test_seed() + 1);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 5; ++trial) {
    const OneRelatorSpec spec(cli::random_relator(rng, 3, 3, 9));
    const Certificate c = certify(spec);
    if (c.theorem != Theorem::kPurity || *c.t != spec.k()) continue;
    ++seen;
    EXPECT_EQ(*c.n_min, 4 * spec.k());
    EXPECT_EQ(*c.n_min, bound_for(Theorem::kEndpointPair, spec.k()));
  }
  EXPECT_GT(seen, 0);
}

TEST(Certify, ListedAssumptionsAreLoadBearing) {
  std::mt19937_64 rng(test_seed() + 2);
  for (int trial = 0; trial < 40; ++trial) {
    const OneRelatorSpec spec(cli::random_relator(rng, 3, 2, 8));
    std::vector<Assumption> all = assume_all(spec, spec.k());
    all.push_back(Assumption::triple_trivial("trivial", "test"));
    const Certificate c = certify(spec, all);
    for (std::size_t i = 0; i < c.assumptions.size(); ++i) {
      std::vector<Assumption> fewer;
      for (const Assumption& a : all) {
        if (!(a == c.assumptions[i])) fewer.push_back(a);
      }
      const Certificate d = certify(spec, fewer);
      EXPECT_NE(to_json(c), to_json(d)) << format_word(spec.relator());
      EXPECT_TRUE(!d.certified() || *d.n_min >= *c.n_min);
    }
  }
}

TEST(Certify, UnusedAssumptionsAreNotListed) {
  const auto extra = Assumption::non_exceptional({0}, {2}, "irrelevant");
  const Certificate c = certify(S(kFiveBlock), {extra});
  EXPECT_TRUE(c.assumptions.empty());
}

TEST(Certify, RelatorBoundAssumptionOnlyAppliesToItsRelator) {
  auto a = Assumption::non_exceptional({0, 1}, {1, 2}, "hand computation");
  a.relator = CyclicWord(parse_word(kThirdExample));
  EXPECT_FALSE(certify(S(kFirstExample), {a}).certified());
  a.relator = CyclicWord(parse_word(kFirstExample)).inverse().rotated(2);
  EXPECT_TRUE(certify(S(kFirstExample), {a}).certified());
}

TEST(Certify, Deterministic) {
  std::mt19937_64 rng(test_seed() + 3);
  for (int trial = 0; trial < 20; ++trial) {
    const OneRelatorSpec spec(cli::random_relator(rng, 3, 2, 10));
    EXPECT_EQ(to_json(certify(spec)), to_json(certify(spec)));
    // Rotations and inversion name the same relator.
    EXPECT_EQ(to_json(certify(spec)), to_json(certify(OneRelatorSpec(spec.relator().rotated(1)))));
  }
}

TEST(CertifyTPure, FixedT) {
  const auto c = certify_t_pure(S(kFiveBlock), 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->n_min, 8U);
  EXPECT_EQ(c->t, 2U);
  EXPECT_FALSE(certify_t_pure(S(kFiveBlock), 1));
}
