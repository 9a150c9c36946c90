#include "arith/inequalities.hpp"

#include <algorithm>
#include <chrono>

#include "arith/errors.hpp"
#include "arith/functions.hpp"
#include "arith/sieve.hpp"
#include "arith/sweep.hpp"

namespace arith {

std::string_view inequality_name(InequalityId id) {
  switch (id) {
    case InequalityId::kEq12: return "eq12";
    case InequalityId::kEq13: return "eq13";
    case InequalityId::kEq16: return "eq16";
    case InequalityId::kEq20: return "eq20";
    case InequalityId::kEq23: return "eq23";
    case InequalityId::kCorollary1: return "corollary1";
  }
  return "?";
}

InequalityId parse_inequality(std::string_view name) {
  for (const auto id : {InequalityId::kEq12, InequalityId::kEq13, InequalityId::kEq16,
                        InequalityId::kEq20, InequalityId::kEq23, InequalityId::kCorollary1}) {
    if (inequality_name(id) == name) return id;
  }
  throw UsageError("unknown inequality '" + std::string(name) +
                   "' (expected eq12, eq13, eq16, eq20, eq23, corollary1)");
}

namespace {

using Clock = std::chrono::steady_clock;

Value u64(std::uint64_t v) { return Value::from_u64(v); }

Report base(std::string_view id, Relation rel, std::vector<std::string> coords,
            std::vector<std::pair<std::string, std::uint64_t>> range) {
  Report r;
  r.kind = "inequality";
  r.subject = std::string(id);
  r.check = std::string(id);
  r.relation = rel;
  r.coordinates = std::move(coords);
  r.range = std::move(range);
  return r;
}

SweepOptions sweep_opts(const InequalityOptions& o) {
  return SweepOptions{o.threads, o.stop_at_first, o.counterexample_cap};
}

// Rows of single points: each row is one point whose sides come from `sides`.
template <typename SidesFn>
Report sweep_points(Report r, const std::vector<std::uint64_t>& points, const InequalityOptions& opts,
                    SidesFn sides) {
  const auto start = Clock::now();
  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t x = points[row];
    auto [lhs, rhs] = sides(x);
    ++out.checked;
    const auto ord = cmp_sides(lhs, rhs, opts.power, &out.stats);
    if (!satisfies(ord, r.relation)) record(out, limits, Counterexample{{x}, std::move(lhs), std::move(rhs)});
    return out;
  };
  auto out = run_sweep(points.size(), row_fn, sweep_opts(opts));
  r.checked = out.checked;
  r.counterexamples = std::move(out.counterexamples);
  r.stats = out.stats;
  r.verdict = r.counterexamples.empty() ? Verdict::kHoldsOnRange : Verdict::kRefuted;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

// Rows of (a, b) grids per outer coordinate, compared by exact expansion.
template <typename SidesFn>
Report sweep_triples(Report r, const std::vector<std::uint64_t>& outer, std::uint64_t lo, std::uint64_t hi,
                     const InequalityOptions& opts, SidesFn sides) {
  const auto start = Clock::now();
  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t x = outer[row];
    for (std::uint64_t a = lo; a <= hi; ++a) {
      for (std::uint64_t b = lo; b <= hi; ++b) {
        auto [lhs, rhs] = sides(x, a, b);
        ++out.checked;
        const auto ord = cmp_values(expand(lhs, opts.power.max_digits), expand(rhs, opts.power.max_digits));
        if (!satisfies(ord, r.relation)) {
          if (record(out, limits, Counterexample{{x, a, b}, std::move(lhs), std::move(rhs)})) return out;
        }
      }
    }
    return out;
  };
  auto out = run_sweep(outer.size(), row_fn, sweep_opts(opts));
  r.checked = out.checked;
  r.counterexamples = std::move(out.counterexamples);
  r.verdict = r.counterexamples.empty() ? Verdict::kHoldsOnRange : Verdict::kRefuted;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

std::vector<std::uint64_t> primes_to(std::uint64_t max_prime) {
  if (max_prime < 2) throw UsageError("max_prime must be >= 2, got " + std::to_string(max_prime));
  return SpfTable(max_prime).primes_up_to(max_prime);
}

std::vector<std::uint64_t> range_from(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

}  // namespace

Report verify_eq12(std::uint64_t max_prime, const InequalityOptions& opts) {
  const auto primes = primes_to(max_prime);
  Report r = base("eq12", Relation::kLt, {"p"}, {{"max_prime", max_prime}});
  return sweep_points(std::move(r), primes, opts, [](std::uint64_t p) {
    return std::pair<Side, Side>{{{u64(p + 1), p - 1}}, {{u64(p), p}}};
  });
}

Report verify_eq12_rewritten(std::uint64_t max_prime, const InequalityOptions& opts) {
  const auto primes = primes_to(max_prime);
  Report r = base("eq12", Relation::kLt, {"p"}, {{"max_prime", max_prime}});
  r.check = "eq12-rewritten";
  return sweep_points(std::move(r), primes, opts, [](std::uint64_t p) {
    return std::pair<Side, Side>{{{Value(to_mpz(p + 1), to_mpz(p)), p}}, {{u64(p + 1), 1}}};
  });
}

Report verify_eq13(std::uint64_t max_n, const InequalityOptions& opts) {
  if (max_n < 2) throw UsageError("max_n must be >= 2, got " + std::to_string(max_n));
  const SpfTable table(max_n);
  Report r = base("eq13", Relation::kLt, {"n"}, {{"max_n", max_n}});
  return sweep_points(std::move(r), range_from(2, max_n), opts, [&table](std::uint64_t n) {
    const Factorization f = factorize(n, table);
    const std::uint64_t phi = to_u64(eval_phi(f).num());
    return std::pair<Side, Side>{{{eval_sigma(f), phi}}, {{u64(n), n}}};
  });
}

Report verify_eq16(std::uint64_t max_prime, std::uint32_t max_exp, const InequalityOptions& opts) {
  if (max_exp < 1) throw UsageError("max_exp must be >= 1");
  const auto primes = primes_to(max_prime);
  Report r = base("eq16", Relation::kGe, {"p", "a", "b"}, {{"max_prime", max_prime}, {"max_exp", max_exp}});
  // (p^(e+1) - 1) / ((p - 1)(e + 1))
  auto term = [](std::uint64_t p, std::uint64_t e) {
    return Value(pow_u64(p, e + 1) - 1, (to_mpz(p) - 1) * to_mpz(e + 1));
  };
  return sweep_triples(std::move(r), primes, 1, max_exp, opts, [&](std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    return std::pair<Side, Side>{{{term(p, a + b), 1}}, {{term(p, a), 1}, {term(p, b), 1}}};
  });
}

Report verify_eq20(std::uint64_t max_ab, int max_k, const InequalityOptions& opts) {
  if (max_k < 2) throw UsageError("max_k must be >= 2, got " + std::to_string(max_k));
  const auto start = Clock::now();
  Report r = base("eq20", Relation::kGe, {"a", "b", "k"},
                  {{"max_ab", max_ab}, {"max_k", static_cast<std::uint64_t>(max_k)}});
  auto row_fn = [&](std::size_t row, const RowLimits& limits) {
    RowOutcome out;
    const std::uint64_t a = row;
    for (std::uint64_t b = 0; b <= max_ab; ++b) {
      for (std::uint64_t k = 2; k <= static_cast<std::uint64_t>(max_k); ++k) {
        Side lhs{{u64(a + b + 1), k}};
        Side rhs{{u64(k * a + 1), 1}, {u64(k * b + 1), 1}};
        ++out.checked;
        if (!satisfies(cmp_values(expand(lhs, opts.power.max_digits), expand(rhs, opts.power.max_digits)),
                       r.relation)) {
          if (record(out, limits, Counterexample{{a, b, k}, std::move(lhs), std::move(rhs)})) return out;
        }
      }
    }
    return out;
  };
  auto out = run_sweep(max_ab + 1, row_fn, sweep_opts(opts));
  r.checked = out.checked;
  r.counterexamples = std::move(out.counterexamples);
  r.verdict = r.counterexamples.empty() ? Verdict::kHoldsOnRange : Verdict::kRefuted;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

Report verify_eq23(std::uint64_t max_prime, std::uint32_t max_exp, int k, const InequalityOptions& opts) {
  if (k < 2) throw UsageError("k must be >= 2, got " + std::to_string(k));
  const auto primes = primes_to(max_prime);
  Report r = base("eq23", Relation::kLe, {"p", "a", "b"}, {{"max_prime", max_prime}, {"max_exp", max_exp}});
  r.k = k;
  const auto uk = static_cast<std::uint64_t>(k);
  return sweep_triples(std::move(r), primes, 0, max_exp, opts, [&](std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    const auto ab = static_cast<std::uint32_t>(a + b);
    const auto kb = static_cast<std::uint32_t>(uk * b);
    return std::pair<Side, Side>{{{Value(phi_prime_power(p, ab)), uk}},
                                 {{u64(p), uk * a}, {Value(phi_prime_power(p, kb)), 1}}};
  });
}

std::pair<Report, Report> verify_corollary1(const ArithFn& f, const ArithFn& g, std::uint64_t max_prime,
                                            std::uint64_t max_n, std::span<const PropertyTag> known,
                                            const InequalityOptions& opts) {
  const ArithFn h = combine(FnKind::kPower, {f, g});
  const auto tags = infer_properties(h, known);
  auto has = [&](const std::string& subject, Family fam) {
    return std::any_of(tags.begin(), tags.end(), [&](const PropertyTag& t) {
      return t.subject == subject && t.spec.family == fam && t.status != TagStatus::kRefuted;
    });
  };
  if (!has(f.name(), Family::kSubMult)) {
    throw UsageError("hypothesis missing: " + f.name() + " is not tagged sub-mult");
  }
  if (!has(g.name(), Family::kSubHom)) {
    throw UsageError("hypothesis missing: " + g.name() + " is not tagged sub-hom");
  }
  if (max_n < 2) throw UsageError("max_n must be >= 2, got " + std::to_string(max_n));

  const SpfTable table(std::max(max_prime, max_n));
  auto sides = [&](std::uint64_t n) {
    const Factorization fact = factorize(n, table);
    const Value fv = eval(f, fact);
    const Value gv = eval(g, fact);
    if (fv.sign() <= 0) {
      throw DomainError(f.name() + " is not positive at n = " + std::to_string(n));
    }
    if (!gv.is_integer() || gv.sign() < 0) {
      throw UnsupportedError(g.name() + " takes the non-integer value " + gv.str() + " at n = " +
                             std::to_string(n) + "; cross-power comparison needs integer exponents");
    }
    return std::pair<Side, Side>{{{fv, to_u64(gv.num())}}, {{u64(n), n}}};
  };

  Report at_primes = base("corollary1", Relation::kLt, {"p"}, {{"max_prime", max_prime}});
  at_primes.subject = h.name();
  at_primes.check = "at-primes";
  Report at_all = base("corollary1", Relation::kLt, {"n"}, {{"max_n", max_n}});
  at_all.subject = h.name();
  at_all.check = "at-all-n";
  return {sweep_points(std::move(at_primes), primes_to(max_prime), opts, sides),
          sweep_points(std::move(at_all), range_from(2, max_n), opts, sides)};
}

}  // namespace arith
