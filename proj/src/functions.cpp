#include "arith/functions.hpp"

#include "arith/errors.hpp"

namespace arith {

mpz_class pow_u64(std::uint64_t p, std::uint64_t a) {
  if (a > static_cast<std::uint64_t>(~0UL)) throw ResourceError("exponent too large");
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), to_mpz(p).get_mpz_t(), static_cast<unsigned long>(a));
  return out;
}

mpz_class phi_prime_power(std::uint64_t p, std::uint32_t a) {
  if (a == 0) return 1;
  return pow_u64(p, a - 1) * (to_mpz(p) - 1);
}

mpz_class d_prime_power(std::uint64_t, std::uint32_t a) { return mpz_class(a) + 1; }

mpz_class sigma_prime_power(std::uint64_t p, std::uint32_t a) {
  // (p^(a+1) - 1) / (p - 1) is exact since p - 1 divides p^(a+1) - 1.
  mpz_class out = pow_u64(p, static_cast<std::uint64_t>(a) + 1) - 1;
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), mpz_class(to_mpz(p) - 1).get_mpz_t());
  return out;
}

namespace {

template <typename Local>
Value product_over(const Factorization& f, Local local) {
  mpz_class out = 1;
  for (const auto& [p, a] : f.pairs) out *= local(p, a);
  return Value(out);
}

}  // namespace

Value eval_phi(const Factorization& f) { return product_over(f, phi_prime_power); }
Value eval_d(const Factorization& f) { return product_over(f, d_prime_power); }
Value eval_sigma(const Factorization& f) { return product_over(f, sigma_prime_power); }
Value eval_identity(const Factorization& f) { return Value(f.reconstruct()); }

}  // namespace arith
