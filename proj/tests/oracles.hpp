#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// goes through the sieve, the factorization merge, or the power filter.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::uint64_t sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

inline std::uint64_t num_divisors(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) ++c;
  }
  return c;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++c;
  }
  return c;
}

inline std::uint64_t smallest_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; n > 1; ++d) {
    std::uint32_t a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    if (a) out.emplace_back(d, a);
  }
  return out;
}

inline mpz_class big_pow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline mpz_class big(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

}  // namespace oracle
