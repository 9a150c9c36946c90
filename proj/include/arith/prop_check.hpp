#pragma once

#include <cstdint>
#include <vector>

#include "arith/power_compare.hpp"
#include "arith/registry.hpp"
#include "arith/report.hpp"
#include "arith/sieve.hpp"

namespace arith {

/// Grid and execution settings for a global property sweep over
/// 1 <= m <= max_m, 1 <= n <= max_n.
struct CheckConfig {
  std::uint64_t max_m = 100;
  std::uint64_t max_n = 100;
  std::vector<int> k_set{2};
  bool stop_at_first = false;
  std::size_t counterexample_cap = 10;
  unsigned threads = 1;
  PowerCompareOptions power;

  /// Throws UsageError when the grid is smaller than 2x2, the cap is zero,
  /// or (with needs_k) k_set is empty or holds k < 2.
  void validate(bool needs_k = false) const;
};

/// Largest integer the sweeps factorize. Products mn and powers m^k are
/// built by merging and scaling factorizations, so only the grid edge needs
/// to be covered by the sieve.
std::uint64_t required_sieve_limit(const CheckConfig& cfg);

// Every check throws ResourceError before sweeping when table.limit() is
// below required_sieve_limit(cfg), and propagates evaluation errors
// (DomainError names the offending n).

/// f(mn) == f(m) f(n) over coprime pairs.
Report check_multiplicative(const ArithFn& f, const CheckConfig& cfg, const SpfTable& table);
/// f(mn) <= f(m) f(n) (sub) or >= (sup) over the full rectangle.
Report check_submult(const ArithFn& f, Direction dir, const CheckConfig& cfg, const SpfTable& table);
/// f(mn) <= m f(n) (sub) or >= (sup).
Report check_subhom(const ArithFn& f, Direction dir, const CheckConfig& cfg, const SpfTable& table);
/// f(mn)^k <= f(m^k) f(n^k) (sub) or >= (sup).
Report check_k_submult(const ArithFn& f, int k, Direction dir, const CheckConfig& cfg,
                       const SpfTable& table);
/// f(mn)^k <= m^k f(n^k) (sub) or >= (sup).
Report check_k_subhom(const ArithFn& f, int k, Direction dir, const CheckConfig& cfg,
                      const SpfTable& table);
/// f(n) <= n (sub) or f(n) >= n (sup) for 1 <= n <= max(max_m, max_n).
Report check_identity_bound(const ArithFn& f, Direction dir, const CheckConfig& cfg,
                            const SpfTable& table);

/// Sub/super-multiplicativity of h(n) = f(n)^(g(n)/n), decided exactly as
///   f(mn)^g(mn)  vs  f(m)^(n g(m)) * f(n)^(m g(n))
/// (both sides of h(mn) vs h(m)h(n) raised to the mn-th power).
/// Requires f > 0 (DomainError) and g a nonnegative integer on the grid
/// (UnsupportedError otherwise).
Report check_power_submult(const ArithFn& f, const ArithFn& g, Direction dir, const CheckConfig& cfg,
                           const SpfTable& table);

/// Dispatches on the spec. Power combinators accept only sub-mult/sup-mult.
Report check_property(const ArithFn& f, const PropertySpec& spec, const CheckConfig& cfg,
                      const SpfTable& table);

/// The properties classify() sweeps, in report order.
std::vector<PropertySpec> classification_specs(const ArithFn& f, const CheckConfig& cfg);

/// One report per property family (k-families over cfg.k_set).
std::vector<Report> classify(const ArithFn& f, const CheckConfig& cfg, const SpfTable& table);

}  // namespace arith
