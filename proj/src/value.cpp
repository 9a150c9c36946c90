#include "arith/value.hpp"

#include <ostream>

#include "arith/errors.hpp"

namespace arith {

Value::Value(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Value Value::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Value(mpz_class(s, 10));
    return Value(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

Value Value::from_u64(std::uint64_t v) { return Value(to_mpz(v)); }

std::string Value::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Value operator/(const Value& a, const Value& b) {
  if (b.sign() == 0) throw DomainError("division by zero");
  return Value(mpq_class(a.q_ / b.q_));
}

Value pow(const Value& a, std::uint64_t e) {
  if (e > static_cast<std::uint64_t>(~0UL)) throw ResourceError("exponent too large");
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Value(n, d);
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

std::uint64_t to_u64(const mpz_class& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw UnsupportedError("integer " + v.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace arith
