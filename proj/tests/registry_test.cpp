#include "arith/registry.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "arith/errors.hpp"
#include "arith/functions.hpp"
#include "arith/prop_check.hpp"

namespace arith {
namespace {

const Registry& reg() { return Registry::builtin(); }

const SpfTable& table() {
  static const SpfTable t(10000);
  return t;
}

bool has_tag(const std::vector<PropertyTag>& tags, const std::string& subject, Family fam,
             std::optional<int> k = std::nullopt) {
  return std::any_of(tags.begin(), tags.end(), [&](const PropertyTag& t) {
    return t.subject == subject && t.spec.family == fam && t.spec.k == k;
  });
}

TEST(RegistryTest, ShipsExactlyTheBuiltinVocabulary) {
  std::vector<std::string> names;
  for (const auto& f : reg().functions()) names.push_back(f.name());
  const std::vector<std::string> expected = {"phi",          "d",          "sigma",          "identity",
                                             "constant-1",   "sigma_over_phi", "sigma_over_d",
                                             "phi_over_d",   "n_plus_d",   "n_times_phi",    "n_over_phi"};
  EXPECT_EQ(names, expected);
  EXPECT_THROW(reg().get("tau"), UsageError);
}

TEST(RegistryTest, EvalExamples) {
  EXPECT_EQ(eval(reg().get("sigma_over_d"), 12, table()).str(), "14/3");
  EXPECT_EQ(eval(reg().get("n_plus_d"), 6, table()), Value(10));
  for (const char* name : {"phi", "d", "sigma", "identity", "constant-1"}) {
    EXPECT_EQ(eval(reg().get(name), 1, table()), Value(1)) << name;
  }
  EXPECT_EQ(eval(reg().get("n_over_phi"), 6, table()), Value(3));
  EXPECT_EQ(eval(reg().get("n_times_phi"), 6, table()), Value(12));
}

TEST(RegistryTest, RegisteredFunctionsAreNonNegative) {
  for (const auto& f : reg().functions()) {
    for (std::uint64_t n = 1; n <= 500; ++n) ASSERT_GE(eval(f, n, table()).sign(), 0) << f.name();
  }
}

TEST(RegistryTest, MultiplicativeStructure) {
  EXPECT_TRUE(reg().get("phi").is_multiplicative());
  EXPECT_TRUE(reg().get("sigma_over_d").is_multiplicative());
  EXPECT_TRUE(reg().get("n_times_phi").is_multiplicative());
  EXPECT_FALSE(reg().get("n_plus_d").is_multiplicative());
  EXPECT_FALSE(reg().resolve("power(sigma,phi)").is_multiplicative());
}

TEST(PrimePowerFnTest, ClonesAgreeWithBuiltins) {
  const ArithFn d_clone = make_prime_power_fn("d_pp", [](std::uint64_t, std::uint32_t a) {
    return Value(static_cast<long>(a) + 1);
  });
  const ArithFn phi_clone = make_prime_power_fn("phi_pp", [](std::uint64_t p, std::uint32_t a) {
    return Value(phi_prime_power(p, a));
  });
  const ArithFn sigma_clone = make_prime_power_fn("sigma_pp", [](std::uint64_t p, std::uint32_t a) {
    Value s = 0;
    for (std::uint32_t i = 0; i <= a; ++i) s = s + Value(pow_u64(p, i));
    return s;
  });
  EXPECT_TRUE(d_clone.is_multiplicative());
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    ASSERT_EQ(eval(d_clone, n, table()), eval(reg().get("d"), n, table())) << n;
    ASSERT_EQ(eval(phi_clone, n, table()), eval(reg().get("phi"), n, table())) << n;
    ASSERT_EQ(eval(sigma_clone, n, table()), eval(reg().get("sigma"), n, table())) << n;
  }
}

TEST(PrimePowerFnTest, ConstantAndIdentityRules) {
  const ArithFn one = make_prime_power_fn("one_pp", [](std::uint64_t, std::uint32_t) { return Value(1); });
  const ArithFn id = make_prime_power_fn("id_pp", [](std::uint64_t p, std::uint32_t a) {
    return Value(pow_u64(p, a));
  });
  CheckConfig cfg;
  cfg.max_m = cfg.max_n = 30;
  const SpfTable t(30);
  for (const Direction dir : {Direction::kSub, Direction::kSup}) {
    EXPECT_TRUE(check_submult(one, dir, cfg, t).holds());
    EXPECT_TRUE(check_subhom(id, dir, cfg, t).holds());
  }
  EXPECT_TRUE(check_multiplicative(one, cfg, t).holds());
}

TEST(PrimePowerFnTest, RuleMustBeOneAtExponentZero) {
  EXPECT_THROW(make_prime_power_fn("bad", [](std::uint64_t p, std::uint32_t) {
                 return Value::from_u64(p);
               }),
               InvariantError);
}

TEST(CombineTest, BuildsNamedQuotientsAndSums) {
  const ArithFn q = combine(FnKind::kQuotient, {reg().get("sigma"), reg().get("phi")});
  EXPECT_EQ(q.name(), "quotient(sigma,phi)");
  for (std::uint64_t n = 1; n <= 200; ++n) {
    ASSERT_EQ(eval(q, n, table()), eval(reg().get("sigma_over_phi"), n, table()));
  }
  const ArithFn s = combine(FnKind::kSum, {reg().get("identity"), reg().get("d")});
  EXPECT_EQ(eval(s, 6, table()), Value(10));

  const ArithFn h = combine(FnKind::kPower, {reg().get("sigma"), reg().get("phi")});
  EXPECT_EQ(h.children().size(), 2u);
  EXPECT_FALSE(h.is_evaluable());
  EXPECT_THROW(eval(h, 6, table()), UnsupportedError);
}

TEST(CombineTest, ArityAndKindErrors) {
  EXPECT_THROW(combine(FnKind::kProduct, {reg().get("d")}), UsageError);
  EXPECT_THROW(combine(FnKind::kReciprocal, {reg().get("d"), reg().get("phi")}), UsageError);
  EXPECT_THROW(combine(FnKind::kBuiltin, {reg().get("d")}), UsageError);
  const ArithFn h = reg().resolve("power(sigma,phi)");
  EXPECT_THROW(combine(FnKind::kPower, {h, reg().get("d")}), UsageError);
}

TEST(CombineTest, ZeroDenominatorIsDomainError) {
  const ArithFn vanishing = make_prime_power_fn("vanish", [](std::uint64_t, std::uint32_t a) {
    return Value(a == 0 ? 1 : 0);
  });
  const ArithFn r = combine(FnKind::kReciprocal, {vanishing});
  EXPECT_EQ(eval(r, 1, table()), Value(1));
  EXPECT_THROW(eval(r, 2, table()), DomainError);
  EXPECT_THROW(eval(combine(FnKind::kQuotient, {reg().get("d"), vanishing}), 6, table()), DomainError);
}

TEST(ResolveTest, Expressions) {
  EXPECT_EQ(reg().resolve("sigma_over_d").name(), "sigma_over_d");
  const ArithFn f = reg().resolve("quotient(identity, reciprocal(d))");
  EXPECT_EQ(f.name(), "quotient(identity,reciprocal(d))");
  EXPECT_EQ(eval(f, 12, table()), Value(72));
  EXPECT_THROW(reg().resolve("quotient(d"), UsageError);
  EXPECT_THROW(reg().resolve("frob(d)"), UsageError);
  EXPECT_THROW(reg().resolve("sum(d)"), UsageError);
}

TEST(PropertySpecTest, Validation) {
  EXPECT_THROW(PropertySpec::make(Family::kKSubMult), UsageError);
  EXPECT_THROW(PropertySpec::make(Family::kKSubMult, 1), UsageError);
  EXPECT_THROW(PropertySpec::make(Family::kSubMult, 2), UsageError);
  EXPECT_EQ(PropertySpec::make(Family::kKSupHom, 3).label(), "3-sup-hom");
  EXPECT_EQ(PropertySpec::make(Family::kSubMult).label(), "sub-mult");
  EXPECT_EQ(parse_family("super-mult"), Family::kSupMult);
  EXPECT_THROW(parse_family("mult"), UsageError);
}

TEST(InferTest, BoundedSubMultIsSubHom) {
  const std::vector<PropertyTag> known = {
      {"d", PropertySpec::make(Family::kSubMult), TagStatus::kAsserted, "", {}},
      {"d", PropertySpec::make(Family::kLeIdentity), TagStatus::kAsserted, "", {}},
  };
  const auto tags = infer_properties(reg().get("d"), known);
  EXPECT_TRUE(has_tag(tags, "d", Family::kSubHom));
  // Super-homogeneity is not derivable from these hypotheses.
  EXPECT_FALSE(has_tag(tags, "d", Family::kSupHom));
}

TEST(InferTest, PowerCombinatorClosure) {
  const std::vector<PropertyTag> known = {
      {"sigma", PropertySpec::make(Family::kSubMult), TagStatus::kAsserted, "", {}},
      {"phi", PropertySpec::make(Family::kSubHom), TagStatus::kAsserted, "", {}},
  };
  const ArithFn h = reg().resolve("power(sigma,phi)");
  const auto tags = infer_properties(h, known);
  EXPECT_TRUE(has_tag(tags, "power(sigma,phi)", Family::kSubMult));
  EXPECT_FALSE(has_tag(tags, "power(sigma,phi)", Family::kSupMult));
}

TEST(InferTest, ReciprocalOfConstantKeepsBothDirections) {
  const std::vector<PropertyTag> known = {
      {"constant-1", PropertySpec::make(Family::kSubMult), TagStatus::kAsserted, "", {}},
      {"constant-1", PropertySpec::make(Family::kSupMult), TagStatus::kAsserted, "", {}},
  };
  const auto tags = infer_properties(reg().resolve("reciprocal(constant-1)"), known);
  EXPECT_TRUE(has_tag(tags, "reciprocal(constant-1)", Family::kSubMult));
  EXPECT_TRUE(has_tag(tags, "reciprocal(constant-1)", Family::kSupMult));
}

TEST(InferTest, QuotientProductAndSumRules) {
  const auto& known = reg().asserted_tags();
  EXPECT_TRUE(has_tag(infer_properties(reg().resolve("quotient(sigma,phi)"), known),
                      "quotient(sigma,phi)", Family::kSubMult));
  EXPECT_TRUE(has_tag(infer_properties(reg().resolve("quotient(phi,d)"), known), "quotient(phi,d)",
                      Family::kSupMult));
  EXPECT_TRUE(has_tag(infer_properties(reg().resolve("sum(identity,d)"), known), "sum(identity,d)",
                      Family::kSubMult));
  EXPECT_TRUE(has_tag(infer_properties(reg().resolve("product(identity,phi)"), known),
                      "product(identity,phi)", Family::kSupMult));
}

TEST(InferTest, KFamilyRules) {
  const auto& known = reg().asserted_tags();
  // sub-mult and super-homogeneous gives k-super-homogeneous.
  auto sigma_tags = infer_properties(reg().get("sigma"), known, std::vector<int>{2, 3, 4});
  EXPECT_TRUE(has_tag(sigma_tags, "sigma", Family::kKSupHom, 4));
  // k-sub-mult and f <= n gives k-sub-hom.
  const std::vector<PropertyTag> k_known = {
      {"f", PropertySpec::make(Family::kKSubMult, 5), TagStatus::kAsserted, "", {}},
      {"f", PropertySpec::make(Family::kLeIdentity), TagStatus::kAsserted, "", {}},
  };
  const auto tags = infer_properties(reg().get("phi").renamed("f"), k_known);
  EXPECT_TRUE(has_tag(tags, "f", Family::kKSubHom, 5));
}

TEST(InferTest, RefutedTagsAreNotHypotheses) {
  const std::vector<PropertyTag> known = {
      {"d", PropertySpec::make(Family::kSubMult), TagStatus::kRefuted, "", std::string("(2,2)")},
      {"d", PropertySpec::make(Family::kLeIdentity), TagStatus::kAsserted, "", {}},
  };
  const auto tags = infer_properties(reg().get("d"), known);
  EXPECT_FALSE(has_tag(tags, "d", Family::kSubHom));
}

TEST(InferTest, UnknownHypothesesYieldNothing) {
  const auto tags = infer_properties(reg().resolve("sum(phi,d)"), {});
  EXPECT_TRUE(tags.empty());
}

TEST(InferTest, ClosureIsSoundOn200Grid) {
  CheckConfig cfg;
  cfg.max_m = cfg.max_n = 200;
  cfg.stop_at_first = true;
  const SpfTable t(required_sieve_limit(cfg));
  for (const auto& f : reg().functions()) {
    for (const auto& tag : infer_properties(f, reg().asserted_tags())) {
      if (tag.subject != f.name()) continue;
      const Report r = check_property(f, tag.spec, cfg, t);
      EXPECT_TRUE(r.holds()) << f.name() << " " << tag.spec.label() << " (" << tag.provenance << ")";
    }
  }
}

}  // namespace
}  // namespace arith
