#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arith {

/// Exact rational number in lowest terms with a positive denominator.
/// Every arithmetic function in the library evaluates to a Value.
class Value {
 public:
  Value() = default;
  Value(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Value(const mpz_class& v) : q_(v) {}
  /// Throws DomainError when `den` is zero.
  Value(const mpz_class& num, const mpz_class& den);

  /// Parses "a" or "a/b" (optionally signed).
  static Value parse(std::string_view text);
  static Value from_u64(std::uint64_t v);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Integers print bare, everything else as "num/den".
  std::string str() const;

  friend Value operator+(const Value& a, const Value& b) { return Value(mpq_class(a.q_ + b.q_)); }
  friend Value operator-(const Value& a, const Value& b) { return Value(mpq_class(a.q_ - b.q_)); }
  friend Value operator*(const Value& a, const Value& b) { return Value(mpq_class(a.q_ * b.q_)); }
  /// Throws DomainError on division by zero.
  friend Value operator/(const Value& a, const Value& b);

  friend bool operator==(const Value& a, const Value& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  explicit Value(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_{0};
};

/// a^e computed exactly.
Value pow(const Value& a, std::uint64_t e);

std::ostream& operator<<(std::ostream& os, const Value& v);

mpz_class to_mpz(std::uint64_t v);
/// Throws UnsupportedError when `v` does not fit.
std::uint64_t to_u64(const mpz_class& v);

}  // namespace arith
