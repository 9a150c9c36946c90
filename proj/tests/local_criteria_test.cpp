#include "arith/local_criteria.hpp"

#include <gtest/gtest.h>

#include "arith/errors.hpp"
#include "arith/functions.hpp"
#include "arith/prop_check.hpp"
#include "oracles.hpp"

namespace arith {
namespace {

const Registry& reg() { return Registry::builtin(); }

const std::vector<std::string>& multiplicative_names() {
  static const std::vector<std::string> names = {"phi",          "d",           "sigma",      "identity",
                                                 "constant-1",   "sigma_over_phi", "sigma_over_d",
                                                 "phi_over_d",   "n_times_phi", "n_over_phi"};
  return names;
}

std::vector<LocalCriterion> all_criteria(int k) {
  std::vector<LocalCriterion> out;
  for (const Direction dir : {Direction::kSub, Direction::kSup}) {
    out.push_back(LocalCriterion::make(LocalFamily::kEq14, dir));
    out.push_back(LocalCriterion::make(LocalFamily::kEq18, dir, k));
    out.push_back(LocalCriterion::make(LocalFamily::kEq21, dir));
    out.push_back(LocalCriterion::make(LocalFamily::kEq22, dir, k));
  }
  return out;
}

Value expand_value(const Side& s) {
  Value v = 1;
  for (const auto& t : s) v = v * pow(t.base, t.exponent);
  return v;
}

TEST(LocalCriteriaTest, DivisorCountSatisfiesTheSubMultCriterion) {
  const Report r = check_local_submult(reg().get("d"), Direction::kSub, LocalConfig{});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.kind, "local");
  EXPECT_EQ(r.check, "eq14");
  EXPECT_EQ(r.coordinates, (std::vector<std::string>{"p", "a", "b"}));
  // 15 primes up to 50, 11 x 11 exponent pairs each.
  EXPECT_EQ(r.checked, 15u * 121u);
}

TEST(LocalCriteriaTest, TotientFailsTheSubMultCriterion) {
  const Report r = check_local_submult(reg().get("phi"), Direction::kSub, LocalConfig{});
  ASSERT_FALSE(r.holds());
  const Counterexample& c = r.counterexamples.front();
  EXPECT_EQ(c.point, (std::vector<std::uint64_t>{2, 1, 1}));
  EXPECT_EQ(expand_value(c.lhs), Value(2));
  EXPECT_EQ(expand_value(c.rhs), Value(1));
}

TEST(LocalCriteriaTest, SigmaSatisfiesTheSuperHomogeneousCriterion) {
  EXPECT_TRUE(check_local_subhom(reg().get("sigma"), Direction::kSup, LocalConfig{}).holds());
  EXPECT_TRUE(check_local_k_subhom(reg().get("sigma"), 2, Direction::kSup, LocalConfig{}).holds());
  EXPECT_TRUE(check_local_k_submult(reg().get("d"), 2, Direction::kSup, LocalConfig{}).holds());
}

TEST(LocalCriteriaTest, DivisorCountAgainstClosedForm) {
  // For d the criteria reduce to statements about exponents alone.
  LocalConfig cfg;
  cfg.max_prime = 7;
  cfg.counterexample_cap = 100000;
  for (const int k : {2, 3, 4}) {
    const Report r = check_local_k_submult(reg().get("d"), k, Direction::kSub, cfg);
    std::size_t expected = 0;
    for (std::uint64_t a = 0; a <= 10; ++a)
      for (std::uint64_t b = 0; b <= 10; ++b) {
        const mpz_class lhs = oracle::big_pow(oracle::big(a + b + 1), k);
        const mpz_class rhs = oracle::big(k * a + 1) * oracle::big(k * b + 1);
        expected += lhs > rhs;
      }
    EXPECT_EQ(r.counterexamples.size(), expected * 4) << k;  // 4 primes up to 7
  }
}

TEST(LocalCriteriaTest, CriterionValidation) {
  EXPECT_THROW(LocalCriterion::make(LocalFamily::kEq18, Direction::kSub), UsageError);
  EXPECT_THROW(LocalCriterion::make(LocalFamily::kEq22, Direction::kSub, 1), UsageError);
  EXPECT_THROW(LocalCriterion::make(LocalFamily::kEq14, Direction::kSub, 2), UsageError);
  EXPECT_THROW(parse_local_family("eq15"), UsageError);
  EXPECT_EQ(implied_property(LocalCriterion::make(LocalFamily::kEq22, Direction::kSup, 3)),
            PropertySpec::make(Family::kKSupHom, 3));
  EXPECT_EQ(implied_property(LocalCriterion::make(LocalFamily::kEq21, Direction::kSub)),
            PropertySpec::make(Family::kSubHom));
}

TEST(LocalCriteriaTest, NonMultiplicativeIsRejected) {
  EXPECT_THROW(check_local_submult(reg().get("n_plus_d"), Direction::kSub, LocalConfig{}), UsageError);
  EXPECT_THROW(check_local_submult(reg().resolve("sum(phi,d)"), Direction::kSub, LocalConfig{}), UsageError);
}

TEST(LocalCriteriaTest, CounterexamplesAreSound) {
  LocalConfig cfg;
  cfg.max_prime = 13;
  cfg.max_exp = 6;
  for (const auto& name : multiplicative_names()) {
    for (const auto& c : all_criteria(2)) {
      const Report r = check_local(reg().get(name), c, cfg);
      for (const auto& cx : r.counterexamples) {
        EXPECT_FALSE(satisfies(expand_value(cx.lhs) <=> expand_value(cx.rhs), r.relation)) << name;
      }
    }
  }
}

TEST(LocalCriteriaTest, ThreadCountDoesNotChangeTheReport) {
  LocalConfig one;
  one.counterexample_cap = 50;
  LocalConfig many = one;
  many.threads = 5;
  for (const auto& c : all_criteria(3)) {
    Report a = check_local(reg().get("phi_over_d"), c, one);
    Report b = check_local(reg().get("phi_over_d"), c, many);
    a.elapsed_ms = b.elapsed_ms = 0;
    EXPECT_EQ(a, b);
  }
}

TEST(BridgeTest, SigmaSuperHomogeneousIsConsistent) {
  const auto c = LocalCriterion::make(LocalFamily::kEq21, Direction::kSup);
  const Report local = check_local(reg().get("sigma"), c, LocalConfig{});
  CheckConfig g;
  g.max_m = g.max_n = 30;
  const Report global = check_property(reg().get("sigma"), implied_property(c), g, SpfTable(30));
  const BridgeResult b = bridge_consistency(reg().get("sigma"), c, local, global);
  EXPECT_TRUE(b.consistent) << b.detail;
  EXPECT_TRUE(b.full_coverage);
  EXPECT_NO_THROW(require_consistent(b));
}

TEST(BridgeTest, EveryRegisteredPairIsConsistent) {
  CheckConfig g;
  g.max_m = g.max_n = 30;
  g.counterexample_cap = 1000;
  const SpfTable t(30);
  LocalConfig lc;
  lc.counterexample_cap = 1000;
  for (const auto& name : multiplicative_names()) {
    for (const auto& c : all_criteria(2)) {
      const Report local = check_local(reg().get(name), c, lc);
      const Report global = check_property(reg().get(name), implied_property(c), g, t);
      const BridgeResult b = bridge_consistency(reg().get(name), c, local, global);
      EXPECT_TRUE(b.consistent) << b.detail;
    }
  }
}

TEST(BridgeTest, PartialCoverage) {
  const auto c = LocalCriterion::make(LocalFamily::kEq14, Direction::kSup);
  LocalConfig lc;
  lc.max_prime = 7;
  const Report local = check_local(reg().get("phi"), c, lc);
  CheckConfig g;
  g.max_m = g.max_n = 30;
  const Report global = check_property(reg().get("phi"), implied_property(c), g, SpfTable(30));
  const BridgeResult b = bridge_consistency(reg().get("phi"), c, local, global);
  EXPECT_FALSE(b.full_coverage);
  EXPECT_TRUE(b.consistent);
}

TEST(BridgeTest, DetectsACoveredContradiction) {
  const auto c = LocalCriterion::make(LocalFamily::kEq14, Direction::kSub);
  const Report local = check_local(reg().get("d"), c, LocalConfig{});
  CheckConfig g;
  g.max_m = g.max_n = 12;
  Report global = check_property(reg().get("d"), implied_property(c), g, SpfTable(12));
  ASSERT_TRUE(global.holds());
  // Tamper with the global report as a broken checker would.
  global.verdict = Verdict::kRefuted;
  global.counterexamples.push_back(Counterexample{{6, 4}, {}, {}});
  const BridgeResult b = bridge_consistency(reg().get("d"), c, local, global);
  EXPECT_FALSE(b.consistent);
  EXPECT_THROW(require_consistent(b), InconsistencyError);
}

TEST(BridgeTest, DetectsAMissedGlobalCounterexample) {
  const auto c = LocalCriterion::make(LocalFamily::kEq14, Direction::kSub);
  const Report local = check_local(reg().get("phi"), c, LocalConfig{});
  CheckConfig g;
  g.max_m = g.max_n = 12;
  Report global = check_property(reg().get("phi"), implied_property(c), g, SpfTable(12));
  ASSERT_FALSE(global.holds());
  global.verdict = Verdict::kHoldsOnRange;
  global.counterexamples.clear();
  EXPECT_FALSE(bridge_consistency(reg().get("phi"), c, local, global).consistent);
}

TEST(BridgeTest, MismatchedReportsAreRejected) {
  const auto c = LocalCriterion::make(LocalFamily::kEq14, Direction::kSub);
  const Report local = check_local(reg().get("d"), c, LocalConfig{});
  CheckConfig g;
  g.max_m = g.max_n = 10;
  const SpfTable t(10);
  const Report wrong_fn = check_property(reg().get("sigma"), implied_property(c), g, t);
  EXPECT_THROW(bridge_consistency(reg().get("d"), c, local, wrong_fn), UsageError);
  const Report wrong_dir = check_submult(reg().get("d"), Direction::kSup, g, t);
  EXPECT_THROW(bridge_consistency(reg().get("d"), c, local, wrong_dir), UsageError);
  const Report wrong_family = check_subhom(reg().get("d"), Direction::kSub, g, t);
  EXPECT_THROW(bridge_consistency(reg().get("d"), c, local, wrong_family), UsageError);
  const auto other = LocalCriterion::make(LocalFamily::kEq21, Direction::kSub);
  EXPECT_THROW(bridge_consistency(reg().get("d"), other, local, wrong_family), UsageError);
}

}  // namespace
}  // namespace arith
