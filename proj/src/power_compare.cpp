#include "arith/power_compare.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "arith/errors.hpp"

namespace arith {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
  return x;
}
double up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
  return x;
}

// Closed interval with outward rounding after every operation.
struct Interval {
  double lo = 0;
  double hi = 0;

  Interval operator+(const Interval& o) const { return {down(lo + o.lo), up(hi + o.hi)}; }
  Interval operator-(const Interval& o) const { return {down(lo - o.hi), up(hi - o.lo)}; }
  // Scale by a nonnegative exactly representable factor.
  Interval scaled(double k) const { return {down(lo * k), up(hi * k)}; }
};

const Interval kLn2{down(0.6931471805599453), up(0.6931471805599453)};

// Enclosure of ln(z) for z >= 1.
Interval log_enclosure(const mpz_class& z) {
  long exp2 = 0;
  // z = m * 2^exp2 with m in [0.5, 1); m is truncated so the true mantissa
  // lies in [m, m (1 + 2^-52)].
  const double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  const double lm = std::log(m);
  const Interval mant{down(lm, 2), up(lm + 0x1p-51, 2)};
  const Interval scale = kLn2.scaled(static_cast<double>(exp2));
  return mant + scale;
}

std::uint64_t bit_estimate(std::span<const PowerTerm> side) {
  std::uint64_t bits = 0;
  for (const auto& t : side) {
    const std::uint64_t b = mpz_sizeinbase(t.base.num().get_mpz_t(), 2) +
                            mpz_sizeinbase(t.base.den().get_mpz_t(), 2);
    if (t.exponent != 0 && b > std::numeric_limits<std::uint64_t>::max() / t.exponent) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    bits += b * t.exponent;
  }
  return bits;
}

void check_budget(std::span<const PowerTerm> side, std::uint64_t max_digits) {
  const std::uint64_t bits = bit_estimate(side);
  const double digits = static_cast<double>(bits) * 0.30102999566398120;
  if (digits > static_cast<double>(max_digits)) {
    std::ostringstream os;
    os << "exact power comparison needs about " << static_cast<std::uint64_t>(digits)
       << " decimal digits, budget is " << max_digits;
    throw ResourceError(os.str());
  }
}

std::optional<Interval> log_sum(std::span<const PowerTerm> side) {
  Interval acc{0, 0};
  for (const auto& t : side) {
    if (t.exponent == 0) continue;
    if (t.base.sign() <= 0) return std::nullopt;
    if (t.exponent > (std::uint64_t{1} << 53)) return std::nullopt;
    const Interval l = log_enclosure(t.base.num()) - log_enclosure(t.base.den());
    acc = acc + l.scaled(static_cast<double>(t.exponent));
  }
  return acc;
}

}  // namespace

std::string side_str(const Side& side) {
  if (side.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i) os << " * ";
    const auto& t = side[i];
    const bool paren = !t.base.is_integer() && t.exponent != 1;
    if (paren) os << '(';
    os << t.base.str();
    if (paren) os << ')';
    if (t.exponent != 1) os << '^' << t.exponent;
  }
  return os.str();
}

Value expand(const Side& side, std::uint64_t max_digits) {
  check_budget(side, max_digits);
  Value out = 1;
  for (const auto& t : side) out = out * pow(t.base, t.exponent);
  return out;
}

std::strong_ordering cmp_values(const Value& x, const Value& y) {
  // x.num * y.den vs y.num * x.den, both denominators positive.
  const mpz_class l = x.num() * y.den();
  const mpz_class r = y.num() * x.den();
  return cmp(l, r) <=> 0;
}

std::strong_ordering cmp_sides(std::span<const PowerTerm> lhs, std::span<const PowerTerm> rhs,
                               const PowerCompareOptions& opts, PowerCompareStats* stats) {
  if (opts.mode == PowerCompareMode::kFilterThenExact) {
    const auto l = log_sum(lhs);
    const auto r = log_sum(rhs);
    if (l && r) {
      if (l->hi < r->lo) {
        if (stats) ++stats->filter_decisions;
        return std::strong_ordering::less;
      }
      if (l->lo > r->hi) {
        if (stats) ++stats->filter_decisions;
        return std::strong_ordering::greater;
      }
    }
  }
  if (stats) ++stats->exact_comparisons;
  check_budget(lhs, opts.max_digits);
  check_budget(rhs, opts.max_digits);
  // Compare N_l * D_r against N_r * D_l with every factor expanded.
  mpz_class left = 1;
  mpz_class right = 1;
  mpz_class t;
  auto accumulate = [&t](const PowerTerm& term, mpz_class& numer_side, mpz_class& denom_side) {
    if (term.exponent > static_cast<std::uint64_t>(~0UL)) throw ResourceError("exponent too large");
    const auto e = static_cast<unsigned long>(term.exponent);
    mpz_pow_ui(t.get_mpz_t(), term.base.num().get_mpz_t(), e);
    numer_side *= t;
    mpz_pow_ui(t.get_mpz_t(), term.base.den().get_mpz_t(), e);
    denom_side *= t;
  };
  for (const auto& term : lhs) accumulate(term, left, right);
  for (const auto& term : rhs) accumulate(term, right, left);
  return cmp(left, right) <=> 0;
}

std::strong_ordering cmp_powers(const Value& a, std::uint64_t e1, const Value& b, std::uint64_t e2,
                                const PowerCompareOptions& opts, PowerCompareStats* stats) {
  if (a.sign() <= 0 || b.sign() <= 0) {
    throw DomainError("power comparison needs positive bases, got " + a.str() + " and " + b.str());
  }
  const PowerTerm l{a, e1};
  const PowerTerm r{b, e2};
  return cmp_sides(std::span(&l, 1), std::span(&r, 1), opts, stats);
}

}  // namespace arith
