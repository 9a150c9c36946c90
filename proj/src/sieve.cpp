#include "arith/sieve.hpp"

#include <limits>
#include <sstream>

#include "arith/errors.hpp"
#include "arith/value.hpp"

namespace arith {

mpz_class Factorization::reconstruct() const {
  mpz_class out = 1;
  for (const auto& [p, a] : pairs) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), to_mpz(p).get_mpz_t(), a);
    out *= t;
  }
  return out;
}

Factorization Factorization::merged(const Factorization& other) const {
  Factorization out;
  out.pairs.reserve(pairs.size() + other.pairs.size());
  auto i = pairs.begin();
  auto j = other.pairs.begin();
  while (i != pairs.end() && j != other.pairs.end()) {
    if (i->prime < j->prime) {
      out.pairs.push_back(*i++);
    } else if (j->prime < i->prime) {
      out.pairs.push_back(*j++);
    } else {
      out.pairs.push_back({i->prime, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  out.pairs.insert(out.pairs.end(), i, pairs.end());
  out.pairs.insert(out.pairs.end(), j, other.pairs.end());
  return out;
}

Factorization Factorization::scaled(std::uint32_t k) const {
  if (k == 0) return {};
  Factorization out = *this;
  for (auto& pp : out.pairs) pp.exponent *= k;
  return out;
}

bool Factorization::valid() const {
  std::uint64_t prev = 0;
  for (const auto& [p, a] : pairs) {
    if (p <= prev || a == 0 || !is_prime_trial(p)) return false;
    prev = p;
  }
  return true;
}

std::string Factorization::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ',';
    os << '(' << pairs[i].prime << ',' << pairs[i].exponent << ')';
  }
  os << ']';
  return os.str();
}

Factorization Factorization::prime_power(std::uint64_t p, std::uint32_t a) {
  if (a == 0) return {};
  return Factorization{{{p, a}}};
}

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw UsageError("sieve limit must be >= 2, got " + std::to_string(limit));
  if (limit > std::numeric_limits<std::uint32_t>::max() - 1) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds 32-bit table range");
  }
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    // Each composite is written exactly once, by its smallest prime factor.
    for (const std::uint32_t p : primes_) {
      const std::uint64_t next = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || next > limit) break;
      spf_[next] = p;
    }
  }
}

std::uint64_t SpfTable::spf(std::uint64_t i) const {
  if (i < 2 || i > limit_) {
    throw UsageError("spf index " + std::to_string(i) + " outside [2, " + std::to_string(limit_) + "]");
  }
  return spf_[i];
}

std::vector<std::uint64_t> SpfTable::primes_up_to(std::uint64_t bound) const {
  if (bound > limit_) {
    throw ResourceError("prime bound " + std::to_string(bound) + " exceeds sieve limit " +
                        std::to_string(limit_));
  }
  std::vector<std::uint64_t> out;
  for (const std::uint32_t p : primes_) {
    if (p > bound) break;
    out.push_back(p);
  }
  return out;
}

SpfTable build_spf_table(std::uint64_t limit) { return SpfTable(limit); }

Factorization factorize(std::uint64_t n, const SpfTable& table) {
  if (n == 0) throw DomainError("cannot factorize 0");
  if (n > table.limit()) {
    throw UsageError("n = " + std::to_string(n) + " exceeds sieve limit " + std::to_string(table.limit()));
  }
  Factorization out;
  while (n > 1) {
    const std::uint64_t p = table.spf(n);
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.pairs.push_back({p, a});
  }
  return out;
}

Factorization factorize_trial(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  Factorization out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.pairs.push_back({p, a});
  }
  if (n > 1) out.pairs.push_back({n, 1});
  return out;
}

Factorization factorize_any(std::uint64_t n, const SpfTable& table) {
  return n <= table.limit() ? factorize(n, table) : factorize_trial(n);
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace arith
