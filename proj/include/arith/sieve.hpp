#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arith {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime factorization: primes strictly ascending, exponents >= 1.
/// The empty list is n = 1.
struct Factorization {
  std::vector<PrimePower> pairs;

  /// Product of p^a over all pairs.
  mpz_class reconstruct() const;
  /// Factorization of this * other.
  Factorization merged(const Factorization& other) const;
  /// Factorization of this^k.
  Factorization scaled(std::uint32_t k) const;
  /// Checks ordering and exponent invariants (primality by trial division).
  bool valid() const;
  std::string str() const;

  static Factorization prime_power(std::uint64_t p, std::uint32_t a);

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Smallest-prime-factor table for 2 <= i <= limit, built with a linear sieve.
/// Immutable after construction; safe to share across threads.
class SpfTable {
 public:
  /// Throws UsageError when limit < 2.
  explicit SpfTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint64_t spf(std::uint64_t i) const;
  bool is_prime(std::uint64_t i) const { return i >= 2 && i <= limit_ && spf_[i] == i; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  /// Primes p <= bound (bound must not exceed limit).
  std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

SpfTable build_spf_table(std::uint64_t limit);

/// Errors: n = 0 -> DomainError; n > table.limit() -> UsageError.
Factorization factorize(std::uint64_t n, const SpfTable& table);
/// Trial division; any n >= 1.
Factorization factorize_trial(std::uint64_t n);
/// Uses the table when n is covered, trial division otherwise.
Factorization factorize_any(std::uint64_t n, const SpfTable& table);

bool is_prime_trial(std::uint64_t n);

}  // namespace arith
