#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arith/sieve.hpp"
#include "arith/value.hpp"

namespace arith {

enum class FnKind { kBuiltin, kPrimePower, kProduct, kQuotient, kSum, kReciprocal, kPower };

enum class Builtin { kPhi, kD, kSigma, kIdentity, kConstantOne };

/// Value of a multiplicative function at p^a. Must return 1 for a = 0.
using PrimePowerRule = std::function<Value(std::uint64_t p, std::uint32_t a)>;

/// A named arithmetic function: a builtin, a multiplicative function given
/// by its prime-power values, or a combinator over other functions.
/// Cheap to copy; the node tree is shared and immutable.
class ArithFn {
 public:
  const std::string& name() const;
  FnKind kind() const;
  const std::vector<ArithFn>& children() const;
  std::optional<Builtin> builtin() const;

  /// True for builtins, prime-power-defined functions, and products,
  /// quotients and reciprocals built only from those.
  bool is_multiplicative() const;
  /// False when a power combinator appears anywhere in the tree.
  bool is_evaluable() const;

  ArithFn renamed(std::string name) const;

 private:
  struct Node;
  explicit ArithFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend ArithFn builtin_fn(Builtin which);
  friend ArithFn make_prime_power_fn(std::string name, PrimePowerRule rule);
  friend ArithFn combine(FnKind kind, std::vector<ArithFn> parts, std::string name);
  friend Value eval(const ArithFn& f, const Factorization& n);
};

ArithFn builtin_fn(Builtin which);

/// Throws InvariantError when rule(p, 0) != 1 for some small prime p.
ArithFn make_prime_power_fn(std::string name, PrimePowerRule rule);

/// Builds product(f,g), quotient(f,g), sum(f,g), reciprocal(f) or power(f,g).
/// An empty name yields the expression form, e.g. "quotient(sigma,phi)".
/// Throws UsageError on arity mismatch or a non-combinator kind.
ArithFn combine(FnKind kind, std::vector<ArithFn> parts, std::string name = "");

/// Exact value at the integer with factorization `n`.
/// Throws DomainError on a zero denominator and UnsupportedError for power
/// combinators, which are only decidable through cross-power comparison.
Value eval(const ArithFn& f, const Factorization& n);
Value eval(const ArithFn& f, std::uint64_t n, const SpfTable& table);

std::string_view kind_name(FnKind kind);

// ---------------------------------------------------------------------------
// Properties and tags.

enum class Family {
  kMultiplicative,
  kSubMult,
  kSupMult,
  kSubHom,
  kSupHom,
  kKSubMult,
  kKSupMult,
  kKSubHom,
  kKSupHom,
  kLeIdentity,  ///< f(n) <= n for all n
  kGeIdentity,  ///< f(n) >= n for all n
};

enum class Direction { kSub, kSup };

std::string_view family_name(Family family);
/// Throws UsageError for unknown names.
Family parse_family(std::string_view name);
bool is_k_family(Family family);
std::string_view direction_name(Direction d);
Direction parse_direction(std::string_view name);

struct PropertySpec {
  Family family = Family::kMultiplicative;
  std::optional<int> k;

  /// Validates that k is present (and >= 2) exactly for k-families.
  static PropertySpec make(Family family, std::optional<int> k = std::nullopt);
  /// "sub-mult", "2-sub-mult", ...
  std::string label() const;

  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

enum class TagStatus { kAsserted, kInferred, kVerifiedOnRange, kRefuted };

std::string_view status_name(TagStatus status);

struct PropertyTag {
  std::string subject;
  PropertySpec spec;
  TagStatus status = TagStatus::kAsserted;
  std::string provenance;
  /// Present for refuted tags.
  std::optional<std::string> counterexample;

  friend bool operator==(const PropertyTag&, const PropertyTag&) = default;
};

inline constexpr int kDefaultInferenceKs[] = {2, 3};

/// Closure of `known` under the combinator and implication rules, restricted
/// to f and the nodes below it. Purely syntactic: values are never inspected.
/// Refuted tags are carried along but never used as hypotheses.
std::vector<PropertyTag> infer_properties(const ArithFn& f, std::span<const PropertyTag> known,
                                          std::span<const int> ks = kDefaultInferenceKs);

/// The shipped function vocabulary and its classical property tags.
class Registry {
 public:
  static const Registry& builtin();

  /// Throws UsageError for unknown names.
  const ArithFn& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  /// Accepts a registered name or a combinator expression such as
  /// "power(sigma,phi)" or "quotient(identity,reciprocal(d))".
  ArithFn resolve(std::string_view expr) const;

  const std::vector<ArithFn>& functions() const { return functions_; }
  const std::vector<PropertyTag>& asserted_tags() const { return tags_; }

 private:
  Registry();

  std::vector<ArithFn> functions_;
  std::vector<PropertyTag> tags_;
};

}  // namespace arith
