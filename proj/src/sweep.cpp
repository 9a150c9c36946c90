#include "arith/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

namespace arith {

bool record(RowOutcome& row, const RowLimits& limits, Counterexample c) {
  if (row.counterexamples.size() < limits.counterexample_cap) row.counterexamples.push_back(std::move(c));
  return limits.stop_at_first;
}

SweepOutcome run_sweep(std::size_t rows, const RowFn& row_fn, const SweepOptions& opts) {
  const RowLimits limits{opts.stop_at_first, std::max<std::size_t>(opts.counterexample_cap, 1)};
  std::vector<RowOutcome> outcomes(rows);
  std::vector<std::exception_ptr> errors(rows);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  // Lowest row known to have a counterexample or error; in stop_at_first mode
  // rows above it cannot affect the merged outcome and are skipped.
  std::atomic<std::size_t> first_hit{kNone};

  auto worker = [&] {
    for (;;) {
      const std::size_t row = next.fetch_add(1);
      if (row >= rows) return;
      if (opts.stop_at_first && row > first_hit.load()) continue;
      try {
        outcomes[row] = row_fn(row, limits);
        if (!outcomes[row].counterexamples.empty()) {
          std::size_t cur = first_hit.load();
          while (row < cur && !first_hit.compare_exchange_weak(cur, row)) {
          }
        }
      } catch (...) {
        errors[row] = std::current_exception();
        std::size_t cur = first_hit.load();
        while (row < cur && !first_hit.compare_exchange_weak(cur, row)) {
        }
      }
    }
  };

  const std::size_t wanted = std::min<std::size_t>(std::max(opts.threads, 1u), std::max<std::size_t>(rows, 1));
  const auto workers = static_cast<unsigned>(wanted);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  SweepOutcome out;
  for (std::size_t row = 0; row < rows; ++row) {
    if (errors[row]) std::rethrow_exception(errors[row]);
    auto& o = outcomes[row];
    out.checked += o.checked;
    out.stats += o.stats;
    for (auto& c : o.counterexamples) {
      if (out.counterexamples.size() < limits.counterexample_cap) out.counterexamples.push_back(std::move(c));
    }
    if (opts.stop_at_first && !out.counterexamples.empty()) break;
  }
  return out;
}

}  // namespace arith
