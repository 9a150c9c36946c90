#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arith/value.hpp"

namespace arith {

/// One factor base^exponent of a product of powers.
struct PowerTerm {
  Value base;
  std::uint64_t exponent = 1;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// A product of powers. Used for both sides of every checked inequality, so
/// huge quantities like sigma(n)^phi(n) are stored as (base, exponent) pairs
/// and never expanded unless the exact comparison needs it.
using Side = std::vector<PowerTerm>;

std::string side_str(const Side& side);
/// Expands the product exactly. Throws ResourceError past the digit budget.
Value expand(const Side& side, std::uint64_t max_digits);

enum class PowerCompareMode {
  kFilterThenExact,  ///< interval log filter, exact on inconclusive
  kExactOnly,        ///< always expand exactly
};

struct PowerCompareOptions {
  PowerCompareMode mode = PowerCompareMode::kFilterThenExact;
  /// Upper bound on the decimal digits of any exact intermediate.
  std::uint64_t max_digits = 1'000'000;
};

struct PowerCompareStats {
  std::uint64_t filter_decisions = 0;
  std::uint64_t exact_comparisons = 0;

  PowerCompareStats& operator+=(const PowerCompareStats& o) {
    filter_decisions += o.filter_decisions;
    exact_comparisons += o.exact_comparisons;
    return *this;
  }
  friend bool operator==(const PowerCompareStats&, const PowerCompareStats&) = default;
};

/// Exact ordering of two rationals.
std::strong_ordering cmp_values(const Value& x, const Value& y);

/// Exact ordering of a^e1 versus b^e2 for a, b > 0.
/// Throws DomainError for nonpositive bases, ResourceError when the exact
/// fallback would exceed opts.max_digits.
std::strong_ordering cmp_powers(const Value& a, std::uint64_t e1, const Value& b, std::uint64_t e2,
                                const PowerCompareOptions& opts = {},
                                PowerCompareStats* stats = nullptr);

/// Exact ordering of two products of powers. Bases must be nonnegative; zero
/// bases skip the filter.
std::strong_ordering cmp_sides(std::span<const PowerTerm> lhs, std::span<const PowerTerm> rhs,
                               const PowerCompareOptions& opts = {},
                               PowerCompareStats* stats = nullptr);

}  // namespace arith
