#pragma once

#include <cstdint>

#include "arith/sieve.hpp"
#include "arith/value.hpp"

namespace arith {

// Classical multiplicative functions, evaluated from a factorization.
// Each returns 1 on the empty factorization (n = 1).

/// Euler's totient: prod p^(a-1) (p-1).
Value eval_phi(const Factorization& f);
/// Number of divisors: prod (a+1).
Value eval_d(const Factorization& f);
/// Sum of divisors: prod (p^(a+1) - 1) / (p - 1).
Value eval_sigma(const Factorization& f);
/// n itself.
Value eval_identity(const Factorization& f);

// Prime-power values; a = 0 gives 1.
mpz_class phi_prime_power(std::uint64_t p, std::uint32_t a);
mpz_class d_prime_power(std::uint64_t p, std::uint32_t a);
mpz_class sigma_prime_power(std::uint64_t p, std::uint32_t a);
mpz_class pow_u64(std::uint64_t p, std::uint64_t a);

}  // namespace arith
