#include "arith/local_criteria.hpp"

#include <chrono>
#include <sstream>

#include "arith/errors.hpp"
#include "arith/functions.hpp"
#include "arith/sieve.hpp"
#include "arith/sweep.hpp"

namespace arith {

std::string_view local_family_name(LocalFamily f) {
  switch (f) {
    case LocalFamily::kEq14: return "eq14";
    case LocalFamily::kEq18: return "eq18";
    case LocalFamily::kEq21: return "eq21";
    case LocalFamily::kEq22: return "eq22";
  }
  return "?";
}

LocalFamily parse_local_family(std::string_view name) {
  if (name == "eq14") return LocalFamily::kEq14;
  if (name == "eq18") return LocalFamily::kEq18;
  if (name == "eq21") return LocalFamily::kEq21;
  if (name == "eq22") return LocalFamily::kEq22;
  throw UsageError("unknown local criterion '" + std::string(name) + "' (expected eq14, eq18, eq21, eq22)");
}

namespace {

bool has_k(LocalFamily f) { return f == LocalFamily::kEq18 || f == LocalFamily::kEq22; }

}  // namespace

LocalCriterion LocalCriterion::make(LocalFamily family, Direction direction, std::optional<int> k) {
  if (has_k(family)) {
    if (!k) throw UsageError(std::string(local_family_name(family)) + " needs k >= 2");
    if (*k < 2) throw UsageError("k must be >= 2, got " + std::to_string(*k));
  } else if (k) {
    throw UsageError(std::string(local_family_name(family)) + " does not take k");
  }
  return LocalCriterion{family, direction, k};
}

PropertySpec implied_property(const LocalCriterion& c) {
  const bool sub = c.direction == Direction::kSub;
  switch (c.family) {
    case LocalFamily::kEq14: return PropertySpec::make(sub ? Family::kSubMult : Family::kSupMult);
    case LocalFamily::kEq18: return PropertySpec::make(sub ? Family::kKSubMult : Family::kKSupMult, c.k);
    case LocalFamily::kEq21: return PropertySpec::make(sub ? Family::kSubHom : Family::kSupHom);
    case LocalFamily::kEq22: return PropertySpec::make(sub ? Family::kKSubHom : Family::kKSupHom, c.k);
  }
  throw UsageError("unknown local criterion");
}

Report check_local(const ArithFn& f, const LocalCriterion& crit, const LocalConfig& cfg) {
  const LocalCriterion c = LocalCriterion::make(crit.family, crit.direction, crit.k);
  if (!f.is_multiplicative()) {
    throw UsageError(f.name() + " is not multiplicative; prime-power criteria do not apply");
  }
  if (cfg.max_prime < 2) throw UsageError("max_prime must be >= 2");
  if (cfg.counterexample_cap == 0) throw UsageError("counterexample cap must be positive");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::uint64_t> primes = SpfTable(cfg.max_prime).primes_up_to(cfg.max_prime);
  const std::uint32_t k = c.k ? static_cast<std::uint32_t>(*c.k) : 1;

  Report r;
  r.kind = "local";
  r.subject = f.name();
  r.check = std::string(local_family_name(c.family));
  r.direction = std::string(direction_name(c.direction));
  r.k = c.k;
  r.relation = c.direction == Direction::kSub ? Relation::kLe : Relation::kGe;
  r.coordinates = {"p", "a", "b"};
  r.range = {{"max_prime", cfg.max_prime}, {"max_exp", cfg.max_exp}};

  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t p = primes[row];
    // f(p^e) for every exponent the criterion touches.
    const std::uint32_t top = std::max(2 * cfg.max_exp, k * cfg.max_exp);
    std::vector<Value> fp(top + 1);
    for (std::uint32_t e = 0; e <= top; ++e) fp[e] = eval(f, Factorization::prime_power(p, e));
    const Value pv = Value::from_u64(p);

    for (std::uint32_t a = 0; a <= cfg.max_exp; ++a) {
      for (std::uint32_t b = 0; b <= cfg.max_exp; ++b) {
        Side lhs{{fp[a + b], k}};
        Side rhs;
        switch (c.family) {
          case LocalFamily::kEq14:
          case LocalFamily::kEq18:
            rhs = {{fp[k * a], 1}, {fp[k * b], 1}};
            break;
          case LocalFamily::kEq21:
          case LocalFamily::kEq22:
            rhs = {{pv, static_cast<std::uint64_t>(k) * a}, {fp[k * b], 1}};
            break;
        }
        ++out.checked;
        const auto ord = cmp_values(expand(lhs, 1'000'000), expand(rhs, 1'000'000));
        if (!satisfies(ord, r.relation)) {
          if (record(out, limits, Counterexample{{p, a, b}, std::move(lhs), std::move(rhs)})) return out;
        }
      }
    }
    return out;
  };

  auto out = run_sweep(primes.size(), row_fn,
                       SweepOptions{cfg.threads, cfg.stop_at_first, cfg.counterexample_cap});
  r.checked = out.checked;
  r.counterexamples = std::move(out.counterexamples);
  r.verdict = r.counterexamples.empty() ? Verdict::kHoldsOnRange : Verdict::kRefuted;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report check_local_submult(const ArithFn& f, Direction dir, const LocalConfig& cfg) {
  return check_local(f, LocalCriterion::make(LocalFamily::kEq14, dir), cfg);
}

Report check_local_k_submult(const ArithFn& f, int k, Direction dir, const LocalConfig& cfg) {
  return check_local(f, LocalCriterion::make(LocalFamily::kEq18, dir, k), cfg);
}

Report check_local_subhom(const ArithFn& f, Direction dir, const LocalConfig& cfg) {
  return check_local(f, LocalCriterion::make(LocalFamily::kEq21, dir), cfg);
}

Report check_local_k_subhom(const ArithFn& f, int k, Direction dir, const LocalConfig& cfg) {
  return check_local(f, LocalCriterion::make(LocalFamily::kEq22, dir, k), cfg);
}

namespace {

std::uint32_t floor_log(std::uint64_t base, std::uint64_t x) {
  std::uint32_t e = 0;
  for (std::uint64_t v = base; v <= x; v *= base) {
    ++e;
    if (v > x / base) break;
  }
  return e;
}

std::uint64_t largest_prime_at_most(std::uint64_t x) {
  while (x >= 2 && !is_prime_trial(x)) --x;
  return x;
}

bool within(std::uint64_t base, std::uint32_t exp, std::uint64_t bound) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (v > bound / base) return false;
    v *= base;
  }
  return v <= bound;
}

}  // namespace

BridgeResult bridge_consistency(const ArithFn& f, const LocalCriterion& c, const Report& local,
                                const Report& global) {
  const PropertySpec implied = implied_property(c);
  const std::string dir(direction_name(c.direction));
  if (local.kind != "local" || local.subject != f.name() ||
      local.check != local_family_name(c.family) || local.direction != dir || local.k != c.k) {
    throw UsageError("local report does not match " + f.name() + " " +
                     std::string(local_family_name(c.family)) + " " + dir);
  }
  if (global.kind != "property" || global.subject != f.name() ||
      global.check != family_name(implied.family) || global.direction != dir || global.k != implied.k) {
    throw UsageError("global report does not match implied property " + implied.label() + " of " +
                     f.name());
  }

  const std::uint64_t max_prime = local.range_value("max_prime").value_or(0);
  const std::uint64_t max_exp = local.range_value("max_exp").value_or(0);
  const std::uint64_t max_m = global.range_value("max_m").value_or(0);
  const std::uint64_t max_n = global.range_value("max_n").value_or(0);
  const std::uint64_t edge = std::max(max_m, max_n);

  BridgeResult out;
  out.full_coverage = max_prime >= largest_prime_at_most(edge) && max_exp >= floor_log(2, edge);

  std::ostringstream detail;
  detail << f.name() << ' ' << local_family_name(c.family) << ' ' << dir;
  if (c.k) detail << " k=" << *c.k;
  detail << ": local " << verdict_name(local.verdict) << ", global " << implied.label() << ' '
         << verdict_name(global.verdict) << (out.full_coverage ? " (full coverage)" : " (partial coverage)");

  if (local.holds()) {
    if (out.full_coverage && !global.holds()) {
      out.consistent = false;
      detail << "; local criterion holds on a covering grid but the global sweep is refuted";
    }
    for (const auto& cx : global.counterexamples) {
      if (cx.point.size() != 2) continue;
      bool covered = true;
      for (const std::uint64_t v : cx.point) {
        for (const auto& [p, a] : factorize_trial(v).pairs) {
          if (p > max_prime || a > max_exp) covered = false;
        }
      }
      if (covered) {
        out.consistent = false;
        detail << "; global counterexample (" << cx.point[0] << ',' << cx.point[1]
               << ") lies inside the local grid";
        break;
      }
    }
  }

  if (c.family == LocalFamily::kEq14 && global.holds()) {
    for (const auto& cx : local.counterexamples) {
      const std::uint64_t p = cx.point[0];
      const auto a = static_cast<std::uint32_t>(cx.point[1]);
      const auto b = static_cast<std::uint32_t>(cx.point[2]);
      if (within(p, a, max_m) && within(p, b, max_n)) {
        out.consistent = false;
        detail << "; local counterexample (" << p << ',' << a << ',' << b
               << ") maps to a global pair that the sweep reports as holding";
        break;
      }
    }
  }

  detail << (out.consistent ? "; consistent" : "; INCONSISTENT");
  out.detail = detail.str();
  return out;
}

void require_consistent(const BridgeResult& b) {
  if (!b.consistent) throw InconsistencyError(b.detail);
}

}  // namespace arith
