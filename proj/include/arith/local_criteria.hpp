#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "arith/registry.hpp"
#include "arith/report.hpp"

namespace arith {

// Prime-power conditions that, for a multiplicative f with f(1) = 1, imply
// the corresponding global property:
//   eq14  f(p^(a+b))     vs  f(p^a) f(p^b)          -> sub/sup-mult
//   eq18  f(p^(a+b))^k   vs  f(p^(ka)) f(p^(kb))    -> k-sub/sup-mult
//   eq21  f(p^(a+b))     vs  p^a f(p^b)             -> sub/sup-hom
//   eq22  f(p^(a+b))^k   vs  p^(ka) f(p^(kb))       -> k-sub/sup-hom
// with "<=" for sub and ">=" for sup. For eq14 the converse also holds.
enum class LocalFamily { kEq14, kEq18, kEq21, kEq22 };

std::string_view local_family_name(LocalFamily f);
/// Throws UsageError for unknown names.
LocalFamily parse_local_family(std::string_view name);

struct LocalCriterion {
  LocalFamily family = LocalFamily::kEq14;
  Direction direction = Direction::kSub;
  std::optional<int> k;

  /// k must be present (>= 2) exactly for eq18 and eq22.
  static LocalCriterion make(LocalFamily family, Direction direction, std::optional<int> k = std::nullopt);

  friend bool operator==(const LocalCriterion&, const LocalCriterion&) = default;
};

/// The global property a criterion implies.
PropertySpec implied_property(const LocalCriterion& c);

struct LocalConfig {
  std::uint64_t max_prime = 50;
  std::uint32_t max_exp = 10;
  bool stop_at_first = false;
  std::size_t counterexample_cap = 10;
  unsigned threads = 1;
};

/// Sweeps every prime p <= max_prime and 0 <= a, b <= max_exp.
/// Throws UsageError when f is not multiplicative or the grid is empty.
Report check_local(const ArithFn& f, const LocalCriterion& c, const LocalConfig& cfg);

Report check_local_submult(const ArithFn& f, Direction dir, const LocalConfig& cfg);
Report check_local_k_submult(const ArithFn& f, int k, Direction dir, const LocalConfig& cfg);
Report check_local_subhom(const ArithFn& f, Direction dir, const LocalConfig& cfg);
Report check_local_k_subhom(const ArithFn& f, int k, Direction dir, const LocalConfig& cfg);

/// Cross-checks a local verdict against a global sweep of the implied
/// property, treating the implications as oracles:
///  - local holds => no global counterexample whose prime powers all lie in
///    the local grid (and no global counterexample at all when the local
///    grid covers the whole global grid);
///  - eq14 only: global holds => no local counterexample (p, a, b) with
///    p^a <= max_m and p^b <= max_n.
/// Throws UsageError when the reports do not describe the same function,
/// criterion, direction and k.
BridgeResult bridge_consistency(const ArithFn& f, const LocalCriterion& c, const Report& local,
                                const Report& global);

/// Throws InconsistencyError when `b` is inconsistent.
void require_consistent(const BridgeResult& b);

}  // namespace arith
