#include "arith/prop_check.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "arith/errors.hpp"
#include "arith/sweep.hpp"

namespace arith {

void CheckConfig::validate(bool needs_k) const {
  if (max_m < 2 || max_n < 2) {
    throw UsageError("grid must be at least 2x2, got max_m=" + std::to_string(max_m) +
                     ", max_n=" + std::to_string(max_n));
  }
  if (counterexample_cap == 0) throw UsageError("counterexample cap must be positive");
  if (needs_k) {
    if (k_set.empty()) throw UsageError("k-family check needs a nonempty k set");
    for (const int k : k_set) {
      if (k < 2) throw UsageError("k must be >= 2, got " + std::to_string(k));
    }
  }
}

std::uint64_t required_sieve_limit(const CheckConfig& cfg) {
  return std::max<std::uint64_t>({cfg.max_m, cfg.max_n, 2});
}

namespace {

using Clock = std::chrono::steady_clock;

// Factorizations and values of f on [1, L], shared read-only by all rows.
struct GridCache {
  std::vector<Factorization> facts;  // index i holds i; index 0 unused
  std::vector<Value> values;

  GridCache(const ArithFn& f, std::uint64_t limit, const SpfTable& table, bool with_values = true) {
    facts.resize(limit + 1);
    for (std::uint64_t i = 1; i <= limit; ++i) facts[i] = factorize(i, table);
    if (with_values) {
      values.resize(limit + 1);
      for (std::uint64_t i = 1; i <= limit; ++i) values[i] = eval(f, facts[i]);
    }
  }

  // f at i^k.
  std::vector<Value> powered_values(const ArithFn& f, int k) const {
    std::vector<Value> out(facts.size());
    for (std::size_t i = 1; i < facts.size(); ++i) out[i] = eval(f, facts[i].scaled(static_cast<std::uint32_t>(k)));
    return out;
  }
};

void require_table(const CheckConfig& cfg, const SpfTable& table) {
  const std::uint64_t need = required_sieve_limit(cfg);
  if (table.limit() < need) {
    throw ResourceError("sieve limit " + std::to_string(table.limit()) + " is too small; need " +
                        std::to_string(need));
  }
}

void require_evaluable(const ArithFn& f) {
  if (!f.is_evaluable()) {
    throw UnsupportedError(f.name() + " contains a power combinator and cannot be evaluated");
  }
}

Relation relation_for(Direction dir) { return dir == Direction::kSub ? Relation::kLe : Relation::kGe; }

Report base_report(const std::string& subject, const PropertySpec& spec, std::optional<Direction> dir,
                   const CheckConfig& cfg) {
  Report r;
  r.kind = "property";
  r.subject = subject;
  r.check = std::string(family_name(spec.family));
  if (dir) r.direction = std::string(direction_name(*dir));
  r.k = spec.k;
  r.relation = dir ? relation_for(*dir) : Relation::kEq;
  r.coordinates = {"m", "n"};
  r.range = {{"max_m", cfg.max_m}, {"max_n", cfg.max_n}};
  return r;
}

SweepOptions sweep_options(const CheckConfig& cfg) {
  return SweepOptions{cfg.threads, cfg.stop_at_first, cfg.counterexample_cap};
}

void finish(Report& r, SweepOutcome out, Clock::time_point start) {
  r.checked = out.checked;
  r.counterexamples = std::move(out.counterexamples);
  r.stats = out.stats;
  r.verdict = r.counterexamples.empty() ? Verdict::kHoldsOnRange : Verdict::kRefuted;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Sides of one grid point; `include` false skips the point (coprimality).
struct PairSides {
  bool include = true;
  Side lhs;
  Side rhs;
};

using PairFn = std::function<PairSides(std::uint64_t m, std::uint64_t n)>;

// Generic m x n sweep where both sides are small enough to expand exactly.
Report sweep_pairs(Report r, const CheckConfig& cfg, const PairFn& sides) {
  const auto start = Clock::now();
  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t m = row + 1;
    for (std::uint64_t n = 1; n <= cfg.max_n; ++n) {
      PairSides s = sides(m, n);
      if (!s.include) continue;
      ++out.checked;
      const Value l = expand(s.lhs, cfg.power.max_digits);
      const Value rv = expand(s.rhs, cfg.power.max_digits);
      if (!satisfies(cmp_values(l, rv), r.relation)) {
        if (record(out, limits, Counterexample{{m, n}, std::move(s.lhs), std::move(s.rhs)})) break;
      }
    }
    return out;
  };
  finish(r, run_sweep(cfg.max_m, row_fn, sweep_options(cfg)), start);
  return r;
}

Value u64(std::uint64_t v) { return Value::from_u64(v); }

}  // namespace

Report check_multiplicative(const ArithFn& f, const CheckConfig& cfg, const SpfTable& table) {
  cfg.validate();
  require_evaluable(f);
  require_table(cfg, table);
  const GridCache cache(f, required_sieve_limit(cfg), table);
  Report r = base_report(f.name(), PropertySpec::make(Family::kMultiplicative), std::nullopt, cfg);
  return sweep_pairs(std::move(r), cfg, [&](std::uint64_t m, std::uint64_t n) {
    if (std::gcd(m, n) != 1) return PairSides{false, {}, {}};
    const Value fmn = eval(f, cache.facts[m].merged(cache.facts[n]));
    return PairSides{true, {{fmn, 1}}, {{cache.values[m], 1}, {cache.values[n], 1}}};
  });
}

Report check_submult(const ArithFn& f, Direction dir, const CheckConfig& cfg, const SpfTable& table) {
  cfg.validate();
  require_evaluable(f);
  require_table(cfg, table);
  const GridCache cache(f, required_sieve_limit(cfg), table);
  const Family fam = dir == Direction::kSub ? Family::kSubMult : Family::kSupMult;
  Report r = base_report(f.name(), PropertySpec::make(fam), dir, cfg);
  return sweep_pairs(std::move(r), cfg, [&](std::uint64_t m, std::uint64_t n) {
    const Value fmn = eval(f, cache.facts[m].merged(cache.facts[n]));
    return PairSides{true, {{fmn, 1}}, {{cache.values[m], 1}, {cache.values[n], 1}}};
  });
}

Report check_subhom(const ArithFn& f, Direction dir, const CheckConfig& cfg, const SpfTable& table) {
  cfg.validate();
  require_evaluable(f);
  require_table(cfg, table);
  const GridCache cache(f, required_sieve_limit(cfg), table);
  const Family fam = dir == Direction::kSub ? Family::kSubHom : Family::kSupHom;
  Report r = base_report(f.name(), PropertySpec::make(fam), dir, cfg);
  return sweep_pairs(std::move(r), cfg, [&](std::uint64_t m, std::uint64_t n) {
    const Value fmn = eval(f, cache.facts[m].merged(cache.facts[n]));
    return PairSides{true, {{fmn, 1}}, {{u64(m), 1}, {cache.values[n], 1}}};
  });
}

Report check_k_submult(const ArithFn& f, int k, Direction dir, const CheckConfig& cfg,
                       const SpfTable& table) {
  cfg.validate();
  const Family fam = dir == Direction::kSub ? Family::kKSubMult : Family::kKSupMult;
  const PropertySpec spec = PropertySpec::make(fam, k);
  require_evaluable(f);
  require_table(cfg, table);
  const GridCache cache(f, required_sieve_limit(cfg), table, false);
  const std::vector<Value> fk = cache.powered_values(f, k);
  const auto uk = static_cast<std::uint64_t>(k);
  Report r = base_report(f.name(), spec, dir, cfg);
  return sweep_pairs(std::move(r), cfg, [&](std::uint64_t m, std::uint64_t n) {
    const Value fmn = eval(f, cache.facts[m].merged(cache.facts[n]));
    return PairSides{true, {{fmn, uk}}, {{fk[m], 1}, {fk[n], 1}}};
  });
}

Report check_k_subhom(const ArithFn& f, int k, Direction dir, const CheckConfig& cfg,
                      const SpfTable& table) {
  cfg.validate();
  const Family fam = dir == Direction::kSub ? Family::kKSubHom : Family::kKSupHom;
  const PropertySpec spec = PropertySpec::make(fam, k);
  require_evaluable(f);
  require_table(cfg, table);
  const GridCache cache(f, required_sieve_limit(cfg), table, false);
  const std::vector<Value> fk = cache.powered_values(f, k);
  const auto uk = static_cast<std::uint64_t>(k);
  Report r = base_report(f.name(), spec, dir, cfg);
  return sweep_pairs(std::move(r), cfg, [&](std::uint64_t m, std::uint64_t n) {
    const Value fmn = eval(f, cache.facts[m].merged(cache.facts[n]));
    return PairSides{true, {{fmn, uk}}, {{u64(m), uk}, {fk[n], 1}}};
  });
}

Report check_identity_bound(const ArithFn& f, Direction dir, const CheckConfig& cfg,
                            const SpfTable& table) {
  cfg.validate();
  require_evaluable(f);
  require_table(cfg, table);
  const auto start = Clock::now();
  const std::uint64_t limit = required_sieve_limit(cfg);
  const Family fam = dir == Direction::kSub ? Family::kLeIdentity : Family::kGeIdentity;
  Report r = base_report(f.name(), PropertySpec::make(fam), dir, cfg);
  r.coordinates = {"n"};
  r.range = {{"max_n", limit}};
  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t n = row + 1;
    const Value fn = eval(f, factorize(n, table));
    ++out.checked;
    if (!satisfies(cmp_values(fn, u64(n)), r.relation)) {
      record(out, limits, Counterexample{{n}, {{fn, 1}}, {{u64(n), 1}}});
    }
    return out;
  };
  finish(r, run_sweep(limit, row_fn, sweep_options(cfg)), start);
  return r;
}

Report check_power_submult(const ArithFn& f, const ArithFn& g, Direction dir, const CheckConfig& cfg,
                           const SpfTable& table) {
  cfg.validate();
  require_evaluable(f);
  require_evaluable(g);
  require_table(cfg, table);
  const auto start = Clock::now();
  const GridCache fc(f, required_sieve_limit(cfg), table);
  const GridCache gc(g, required_sieve_limit(cfg), table);

  auto exponent_of = [&](const Value& gv, const std::string& where) {
    if (!gv.is_integer() || gv.sign() < 0) {
      throw UnsupportedError(g.name() + " takes the non-integer value " + gv.str() + " at " + where +
                             "; cross-power comparison needs integer exponents");
    }
    return to_u64(gv.num());
  };
  auto positive_base = [&](const Value& fv, const std::string& where) {
    if (fv.sign() <= 0) {
      throw DomainError(f.name() + " is not positive at " + where + " (value " + fv.str() + ")");
    }
  };
  for (std::uint64_t i = 1; i < fc.values.size(); ++i) {
    positive_base(fc.values[i], "n = " + std::to_string(i));
    exponent_of(gc.values[i], "n = " + std::to_string(i));
  }

  const Family fam = dir == Direction::kSub ? Family::kSubMult : Family::kSupMult;
  Report r = base_report(combine(FnKind::kPower, {f, g}).name(), PropertySpec::make(fam), dir, cfg);

  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t m = row + 1;
    const std::uint64_t gm = to_u64(gc.values[m].num());
    for (std::uint64_t n = 1; n <= cfg.max_n; ++n) {
      const Factorization mn = fc.facts[m].merged(fc.facts[n]);
      const std::string where = "mn = " + std::to_string(m * n);
      const Value fmn = eval(f, mn);
      positive_base(fmn, where);
      const std::uint64_t gmn = exponent_of(eval(g, mn), where);
      const std::uint64_t gn = to_u64(gc.values[n].num());
      Side lhs{{fmn, gmn}};
      Side rhs{{fc.values[m], gm * n}, {fc.values[n], gn * m}};
      ++out.checked;
      const auto ord = cmp_sides(lhs, rhs, cfg.power, &out.stats);
      if (!satisfies(ord, r.relation)) {
        if (record(out, limits, Counterexample{{m, n}, std::move(lhs), std::move(rhs)})) break;
      }
    }
    return out;
  };
  finish(r, run_sweep(cfg.max_m, row_fn, sweep_options(cfg)), start);
  return r;
}

Report check_property(const ArithFn& f, const PropertySpec& spec, const CheckConfig& cfg,
                      const SpfTable& table) {
  const PropertySpec s = PropertySpec::make(spec.family, spec.k);
  if (f.kind() == FnKind::kPower) {
    if (s.family != Family::kSubMult && s.family != Family::kSupMult) {
      throw UnsupportedError("power combinators support only sub-mult and sup-mult checks");
    }
    const Direction dir = s.family == Family::kSubMult ? Direction::kSub : Direction::kSup;
    return check_power_submult(f.children()[0], f.children()[1], dir, cfg, table);
  }
  switch (s.family) {
    case Family::kMultiplicative: return check_multiplicative(f, cfg, table);
    case Family::kSubMult: return check_submult(f, Direction::kSub, cfg, table);
    case Family::kSupMult: return check_submult(f, Direction::kSup, cfg, table);
    case Family::kSubHom: return check_subhom(f, Direction::kSub, cfg, table);
    case Family::kSupHom: return check_subhom(f, Direction::kSup, cfg, table);
    case Family::kKSubMult: return check_k_submult(f, *s.k, Direction::kSub, cfg, table);
    case Family::kKSupMult: return check_k_submult(f, *s.k, Direction::kSup, cfg, table);
    case Family::kKSubHom: return check_k_subhom(f, *s.k, Direction::kSub, cfg, table);
    case Family::kKSupHom: return check_k_subhom(f, *s.k, Direction::kSup, cfg, table);
    case Family::kLeIdentity: return check_identity_bound(f, Direction::kSub, cfg, table);
    case Family::kGeIdentity: return check_identity_bound(f, Direction::kSup, cfg, table);
  }
  throw UsageError("unknown property");
}

std::vector<PropertySpec> classification_specs(const ArithFn& f, const CheckConfig& cfg) {
  if (f.kind() == FnKind::kPower) {
    return {PropertySpec::make(Family::kSubMult), PropertySpec::make(Family::kSupMult)};
  }
  std::vector<PropertySpec> specs;
  for (const Family fam : {Family::kMultiplicative, Family::kSubMult, Family::kSupMult,
                           Family::kSubHom, Family::kSupHom}) {
    specs.push_back(PropertySpec::make(fam));
  }
  for (const int k : cfg.k_set) {
    for (const Family fam : {Family::kKSubMult, Family::kKSupMult, Family::kKSubHom, Family::kKSupHom}) {
      specs.push_back(PropertySpec::make(fam, k));
    }
  }
  specs.push_back(PropertySpec::make(Family::kLeIdentity));
  specs.push_back(PropertySpec::make(Family::kGeIdentity));
  return specs;
}

std::vector<Report> classify(const ArithFn& f, const CheckConfig& cfg, const SpfTable& table) {
  cfg.validate(true);
  std::vector<Report> out;
  for (const auto& spec : classification_specs(f, cfg)) out.push_back(check_property(f, spec, cfg, table));
  return out;
}

}  // namespace arith
