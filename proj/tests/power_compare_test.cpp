#include "arith/power_compare.hpp"

#include <random>

#include <gtest/gtest.h>

#include "arith/errors.hpp"
#include "oracles.hpp"

namespace arith {
namespace {

TEST(CmpValuesTest, Examples) {
  EXPECT_EQ(cmp_values(Value::parse("7/3"), Value::parse("9/4")), std::strong_ordering::greater);
  EXPECT_EQ(cmp_values(Value(1), Value(1)), std::strong_ordering::equal);
  EXPECT_EQ(cmp_values(Value::parse("3/2"), Value(2)), std::strong_ordering::less);
  EXPECT_EQ(cmp_values(Value::parse("-1/2"), Value::parse("-1/3")), std::strong_ordering::less);
}

TEST(CmpPowersTest, Examples) {
  EXPECT_EQ(cmp_powers(Value(3), 1, Value(2), 2), std::strong_ordering::less);
  EXPECT_EQ(cmp_powers(Value(5), 0, Value(7), 0), std::strong_ordering::equal);
  // 144 vs 46656
  EXPECT_EQ(cmp_powers(Value(12), 2, Value(6), 6), std::strong_ordering::less);
}

TEST(CmpPowersTest, NonPositiveBasesAreDomainErrors) {
  EXPECT_THROW(cmp_powers(Value(0), 1, Value(2), 1), DomainError);
  EXPECT_THROW(cmp_powers(Value(2), 1, Value(-3), 1), DomainError);
}

TEST(CmpPowersTest, ExactTiesGoToExactPath) {
  PowerCompareStats stats;
  EXPECT_EQ(cmp_powers(Value(4), 3, Value(8), 2, {}, &stats), std::strong_ordering::equal);
  EXPECT_EQ(cmp_powers(Value(1000), 2, Value(100), 3, {}, &stats), std::strong_ordering::equal);
  EXPECT_EQ(cmp_powers(Value::parse("4/9"), 3, Value::parse("8/27"), 2, {}, &stats),
            std::strong_ordering::equal);
  EXPECT_EQ(stats.filter_decisions, 0u);
  EXPECT_EQ(stats.exact_comparisons, 3u);
}

TEST(CmpPowersTest, FilterDecidesClearCases) {
  PowerCompareStats stats;
  EXPECT_EQ(cmp_powers(Value(3), 1000, Value(2), 1000, {}, &stats), std::strong_ordering::greater);
  EXPECT_EQ(stats.filter_decisions, 1u);
  EXPECT_EQ(stats.exact_comparisons, 0u);

  PowerCompareOptions exact;
  exact.mode = PowerCompareMode::kExactOnly;
  EXPECT_EQ(cmp_powers(Value(3), 1000, Value(2), 1000, exact, &stats), std::strong_ordering::greater);
  EXPECT_EQ(stats.exact_comparisons, 1u);
}

TEST(CmpPowersTest, NearTieBeyondDoublePrecision) {
  // (2^53 + 1)^2 vs (2^53 + 1)^2 - 1: differ by 1 in 107 bits.
  const mpz_class big = oracle::big_pow(2, 53) + 1;
  const Value a(big);
  const Value b(mpz_class(big * big - 1));
  EXPECT_EQ(cmp_powers(a, 2, b, 1), std::strong_ordering::greater);
  EXPECT_EQ(cmp_powers(b, 1, a, 2), std::strong_ordering::less);
}

TEST(CmpPowersTest, BudgetExceededIsResourceError) {
  PowerCompareOptions opts;
  opts.max_digits = 1000;
  // 2^3000000 == 8^1000000: the filter cannot separate an exact tie.
  EXPECT_THROW(cmp_powers(Value(2), 3'000'000, Value(8), 1'000'000, opts), ResourceError);
}

TEST(CmpPowersTest, AgreesWithDirectPowersOnSpotGrid) {
  // Integer bases up to 1000 and exponents up to 64, every combination of a
  // representative base set; powers come from an independent table.
  const std::vector<unsigned long> bases = {1,  2,  3,  4,  5,  6,  7,   8,   9,   10,  11,  12,  13,
                                            14, 15, 16, 27, 32, 64, 97,  100, 125, 243, 256, 343,
                                            499, 500, 512, 729, 997, 999, 1000};
  std::vector<std::vector<mpz_class>> pw(bases.size(), std::vector<mpz_class>(65));
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (unsigned e = 0; e <= 64; ++e) pw[i][e] = oracle::big_pow(bases[i], e);
  }
  std::uint64_t exact_paths = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = 0; j < bases.size(); ++j) {
      for (unsigned e1 = 0; e1 <= 64; ++e1) {
        for (unsigned e2 = 0; e2 <= 64; ++e2) {
          PowerCompareStats stats;
          const auto got = cmp_powers(Value(static_cast<long>(bases[i])), e1,
                                      Value(static_cast<long>(bases[j])), e2, {}, &stats);
          const auto want = cmp(pw[i][e1], pw[j][e2]) <=> 0;
          ASSERT_EQ(got, want) << bases[i] << "^" << e1 << " vs " << bases[j] << "^" << e2;
          exact_paths += stats.exact_comparisons;
        }
      }
    }
  }
  EXPECT_GT(exact_paths, 0u);
}

TEST(CmpSidesTest, RandomRationalProductsMatchExpansion) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long> val(1, 5000);
  std::uniform_int_distribution<std::uint64_t> ex(0, 40);
  std::uniform_int_distribution<int> len(1, 3);
  auto side = [&] {
    Side s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back({Value(mpz_class(val(rng)), mpz_class(val(rng))), ex(rng)});
    return s;
  };
  for (int iter = 0; iter < 3000; ++iter) {
    Side l = side();
    Side r = side();
    if (iter % 5 == 0) r = l;  // force ties
    const auto want = cmp_values(expand(l, 1'000'000), expand(r, 1'000'000));
    ASSERT_EQ(cmp_sides(l, r), want) << side_str(l) << " vs " << side_str(r);
    PowerCompareOptions exact;
    exact.mode = PowerCompareMode::kExactOnly;
    ASSERT_EQ(cmp_sides(l, r, exact), want);
  }
}

TEST(CmpSidesTest, ZeroBasesSkipFilter) {
  PowerCompareStats stats;
  const Side zero{{Value(0), 3}};
  const Side one{{Value(1), 1}};
  EXPECT_EQ(cmp_sides(zero, one, {}, &stats), std::strong_ordering::less);
  EXPECT_EQ(stats.exact_comparisons, 1u);
}

TEST(SideStrTest, Formatting) {
  EXPECT_EQ(side_str({}), "1");
  EXPECT_EQ(side_str({{Value(12), 2}}), "12^2");
  EXPECT_EQ(side_str({{Value(3), 3}, {Value(4), 1}}), "3^3 * 4");
  EXPECT_EQ(side_str({{Value::parse("3/2"), 2}}), "(3/2)^2");
}

}  // namespace
}  // namespace arith
