#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "arith/power_compare.hpp"
#include "arith/report.hpp"

namespace arith {

struct SweepOptions {
  unsigned threads = 1;
  bool stop_at_first = false;
  std::size_t counterexample_cap = 10;
};

/// What a single row of a grid sweep produced. Rows enumerate their points
/// in ascending order, so per-row counterexamples are already sorted.
struct RowOutcome {
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  PowerCompareStats stats;
};

/// Per-row limits handed to the row callback.
struct RowLimits {
  bool stop_at_first = false;
  std::size_t counterexample_cap = 10;
};

struct SweepOutcome {
  std::uint64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  PowerCompareStats stats;
};

using RowFn = std::function<RowOutcome(std::size_t row, const RowLimits& limits)>;

/// Runs `row_fn` over rows [0, rows) on up to `opts.threads` workers and
/// merges in row order. The outcome (including counters and the order of
/// counterexamples) does not depend on the worker count. An exception thrown
/// by a row is rethrown after all workers join; when several rows throw, the
/// lowest one wins.
SweepOutcome run_sweep(std::size_t rows, const RowFn& row_fn, const SweepOptions& opts);

/// Convenience: records a counterexample unless the row's cap is reached.
/// Returns true when the row should stop (stop_at_first mode).
bool record(RowOutcome& row, const RowLimits& limits, Counterexample c);

}  // namespace arith
