#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "arith/power_compare.hpp"
#include "arith/registry.hpp"
#include "arith/report.hpp"

namespace arith {

/// Closed vocabulary of named inequalities; the names are CLI-stable.
enum class InequalityId { kEq12, kEq13, kEq16, kEq20, kEq23, kCorollary1 };

std::string_view inequality_name(InequalityId id);
InequalityId parse_inequality(std::string_view name);

struct InequalityOptions {
  unsigned threads = 1;
  bool stop_at_first = false;
  std::size_t counterexample_cap = 10;
  PowerCompareOptions power;
};

/// (p+1)^(p-1) < p^p for every prime p <= max_prime.
Report verify_eq12(std::uint64_t max_prime, const InequalityOptions& opts = {});
/// The same statement written as (1 + 1/p)^p < p + 1.
Report verify_eq12_rewritten(std::uint64_t max_prime, const InequalityOptions& opts = {});
/// sigma(n)^phi(n) < n^n for 2 <= n <= max_n.
Report verify_eq13(std::uint64_t max_n, const InequalityOptions& opts = {});
/// (p^(a+b+1)-1)/((p-1)(a+b+1)) >= (p^(a+1)-1)/((p-1)(a+1)) * (p^(b+1)-1)/((p-1)(b+1))
/// for primes p <= max_prime and 1 <= a, b <= max_exp.
Report verify_eq16(std::uint64_t max_prime, std::uint32_t max_exp, const InequalityOptions& opts = {});
/// (a+b+1)^k >= (ka+1)(kb+1) for 0 <= a, b <= max_ab and 2 <= k <= max_k.
Report verify_eq20(std::uint64_t max_ab, int max_k, const InequalityOptions& opts = {});
/// phi(p^(a+b))^k <= p^(ka) phi(p^(kb)) for p <= max_prime, 0 <= a, b <= max_exp.
Report verify_eq23(std::uint64_t max_prime, std::uint32_t max_exp, int k,
                   const InequalityOptions& opts = {});

/// Checks both ends of the prime-to-all-n power scheme for h = f^(g/n):
///   first:  f(p)^g(p) < p^p for primes p <= max_prime
///   second: f(n)^g(n) < n^n for 2 <= n <= max_n
/// `known` must (after inference) tag f sub-mult and g sub-hom, otherwise
/// UsageError. g must be a nonnegative integer wherever it is evaluated
/// (UnsupportedError) and f positive (DomainError).
std::pair<Report, Report> verify_corollary1(const ArithFn& f, const ArithFn& g, std::uint64_t max_prime,
                                            std::uint64_t max_n, std::span<const PropertyTag> known,
                                            const InequalityOptions& opts = {});

}  // namespace arith
