#include "arith/sweep.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

namespace arith {
namespace {

// Row r marks columns c with (r * c) % 7 == 3 as hits.
RowOutcome mod_row(std::size_t row, const RowLimits& limits) {
  RowOutcome out;
  for (std::uint64_t c = 0; c < 50; ++c) {
    ++out.checked;
    if ((row * c) % 7 == 3) {
      if (record(out, limits, Counterexample{{row, c}, {}, {}})) break;
    }
  }
  return out;
}

TEST(SweepTest, MergedOutcomeIsIndependentOfThreadCount) {
  SweepOptions base;
  base.counterexample_cap = 1000;
  base.threads = 1;
  const SweepOutcome ref = run_sweep(200, mod_row, base);
  ASSERT_FALSE(ref.counterexamples.empty());
  for (const unsigned threads : {2u, 3u, 8u, 17u}) {
    SweepOptions o = base;
    o.threads = threads;
    const SweepOutcome got = run_sweep(200, mod_row, o);
    EXPECT_EQ(got.checked, ref.checked) << threads;
    EXPECT_EQ(got.counterexamples, ref.counterexamples) << threads;
  }
}

TEST(SweepTest, CounterexamplesComeInRowOrder) {
  const SweepOutcome out = run_sweep(40, mod_row, SweepOptions{4, false, 1000});
  for (std::size_t i = 1; i < out.counterexamples.size(); ++i) {
    EXPECT_LT(out.counterexamples[i - 1].point, out.counterexamples[i].point);
  }
}

TEST(SweepTest, CapTruncatesButKeepsCounting) {
  const SweepOutcome out = run_sweep(40, mod_row, SweepOptions{3, false, 5});
  EXPECT_EQ(out.counterexamples.size(), 5u);
  EXPECT_EQ(out.checked, 40u * 50u);
  const SweepOutcome full = run_sweep(40, mod_row, SweepOptions{1, false, 1000});
  EXPECT_TRUE(std::equal(out.counterexamples.begin(), out.counterexamples.end(), full.counterexamples.begin()));
}

TEST(SweepTest, StopAtFirstReturnsTheSmallestHit) {
  for (const unsigned threads : {1u, 4u}) {
    const SweepOutcome out = run_sweep(40, mod_row, SweepOptions{threads, true, 10});
    ASSERT_EQ(out.counterexamples.size(), 1u);
    // Row 0 never hits; row 1 first hits at c = 3.
    EXPECT_EQ(out.counterexamples[0].point, (std::vector<std::uint64_t>{1, 3}));
  }
}

TEST(SweepTest, NoHitsMeansEmpty) {
  const SweepOutcome out = run_sweep(
      10, [](std::size_t, const RowLimits&) { return RowOutcome{3, {}, {}}; }, SweepOptions{2, false, 10});
  EXPECT_TRUE(out.counterexamples.empty());
  EXPECT_EQ(out.checked, 30u);
}

TEST(SweepTest, LowestThrowingRowWins) {
  auto fn = [](std::size_t row, const RowLimits&) -> RowOutcome {
    if (row == 7 || row == 13) throw std::runtime_error("row " + std::to_string(row));
    return {};
  };
  for (const unsigned threads : {1u, 4u}) {
    try {
      run_sweep(20, fn, SweepOptions{threads, false, 10});
      FAIL() << "expected a throw";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "row 7");
    }
  }
}

TEST(SweepTest, ZeroRows) {
  const SweepOutcome out = run_sweep(0, mod_row, SweepOptions{});
  EXPECT_EQ(out.checked, 0u);
}

}  // namespace
}  // namespace arith
