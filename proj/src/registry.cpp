#include "arith/registry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "arith/errors.hpp"
#include "arith/functions.hpp"

namespace arith {

struct ArithFn::Node {
  std::string name;
  FnKind kind = FnKind::kBuiltin;
  Builtin builtin = Builtin::kIdentity;
  std::vector<ArithFn> children;
  PrimePowerRule rule;
};

const std::string& ArithFn::name() const { return node_->name; }
FnKind ArithFn::kind() const { return node_->kind; }
const std::vector<ArithFn>& ArithFn::children() const { return node_->children; }

std::optional<Builtin> ArithFn::builtin() const {
  if (node_->kind != FnKind::kBuiltin) return std::nullopt;
  return node_->builtin;
}

bool ArithFn::is_multiplicative() const {
  switch (node_->kind) {
    case FnKind::kBuiltin:
    case FnKind::kPrimePower:
      return true;
    case FnKind::kProduct:
    case FnKind::kQuotient:
    case FnKind::kReciprocal:
      return std::all_of(node_->children.begin(), node_->children.end(),
                         [](const ArithFn& c) { return c.is_multiplicative(); });
    case FnKind::kSum:
    case FnKind::kPower:
      return false;
  }
  return false;
}

bool ArithFn::is_evaluable() const {
  if (node_->kind == FnKind::kPower) return false;
  return std::all_of(node_->children.begin(), node_->children.end(),
                     [](const ArithFn& c) { return c.is_evaluable(); });
}

ArithFn ArithFn::renamed(std::string name) const {
  auto copy = std::make_shared<Node>(*node_);
  copy->name = std::move(name);
  return ArithFn(std::move(copy));
}

ArithFn builtin_fn(Builtin which) {
  auto node = std::make_shared<ArithFn::Node>();
  node->kind = FnKind::kBuiltin;
  node->builtin = which;
  switch (which) {
    case Builtin::kPhi: node->name = "phi"; break;
    case Builtin::kD: node->name = "d"; break;
    case Builtin::kSigma: node->name = "sigma"; break;
    case Builtin::kIdentity: node->name = "identity"; break;
    case Builtin::kConstantOne: node->name = "constant-1"; break;
  }
  return ArithFn(std::move(node));
}

ArithFn make_prime_power_fn(std::string name, PrimePowerRule rule) {
  if (!rule) throw UsageError("prime-power function '" + name + "' has no rule");
  for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 97}) {
    const Value at_zero = rule(p, 0);
    if (at_zero != Value(1)) {
      throw InvariantError("prime-power rule '" + name + "' gives " + at_zero.str() + " at p=" +
                           std::to_string(p) + ", a=0; expected 1");
    }
  }
  auto node = std::make_shared<ArithFn::Node>();
  node->name = std::move(name);
  node->kind = FnKind::kPrimePower;
  node->rule = std::move(rule);
  return ArithFn(std::move(node));
}

std::string_view kind_name(FnKind kind) {
  switch (kind) {
    case FnKind::kBuiltin: return "builtin";
    case FnKind::kPrimePower: return "prime-power";
    case FnKind::kProduct: return "product";
    case FnKind::kQuotient: return "quotient";
    case FnKind::kSum: return "sum";
    case FnKind::kReciprocal: return "reciprocal";
    case FnKind::kPower: return "power";
  }
  return "?";
}

ArithFn combine(FnKind kind, std::vector<ArithFn> parts, std::string name) {
  std::size_t arity = 0;
  switch (kind) {
    case FnKind::kProduct:
    case FnKind::kQuotient:
    case FnKind::kSum:
    case FnKind::kPower:
      arity = 2;
      break;
    case FnKind::kReciprocal:
      arity = 1;
      break;
    case FnKind::kBuiltin:
    case FnKind::kPrimePower:
      throw UsageError(std::string(kind_name(kind)) + " is not a combinator");
  }
  if (parts.size() != arity) {
    throw UsageError(std::string(kind_name(kind)) + " takes " + std::to_string(arity) +
                     " argument(s), got " + std::to_string(parts.size()));
  }
  if (kind == FnKind::kPower) {
    // h(n) = f(n)^(g(n)/n) is compared only through cross powers, so both
    // parts must themselves be evaluable.
    for (const auto& p : parts) {
      if (!p.is_evaluable()) throw UsageError("power combinator arguments must be evaluable");
    }
  }
  if (name.empty()) {
    name = std::string(kind_name(kind)) + "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) name += ',';
      name += parts[i].name();
    }
    name += ')';
  }
  auto node = std::make_shared<ArithFn::Node>();
  node->name = std::move(name);
  node->kind = kind;
  node->children = std::move(parts);
  return ArithFn(std::move(node));
}

Value eval(const ArithFn& f, const Factorization& n) {
  const auto& node = *f.node_;
  switch (node.kind) {
    case FnKind::kBuiltin:
      switch (node.builtin) {
        case Builtin::kPhi: return eval_phi(n);
        case Builtin::kD: return eval_d(n);
        case Builtin::kSigma: return eval_sigma(n);
        case Builtin::kIdentity: return eval_identity(n);
        case Builtin::kConstantOne: return Value(1);
      }
      break;
    case FnKind::kPrimePower: {
      Value out = 1;
      for (const auto& [p, a] : n.pairs) out = out * node.rule(p, a);
      return out;
    }
    case FnKind::kProduct:
      return eval(node.children[0], n) * eval(node.children[1], n);
    case FnKind::kSum:
      return eval(node.children[0], n) + eval(node.children[1], n);
    case FnKind::kQuotient:
    case FnKind::kReciprocal: {
      const Value top = node.kind == FnKind::kQuotient ? eval(node.children[0], n) : Value(1);
      const Value bottom = eval(node.children.back(), n);
      if (bottom.sign() == 0) {
        throw DomainError(node.name + ": denominator " + node.children.back().name() +
                          " vanishes at n = " + n.reconstruct().get_str());
      }
      return top / bottom;
    }
    case FnKind::kPower:
      throw UnsupportedError(node.name +
                             " is a power combinator; use a cross-power comparison instead");
  }
  throw UsageError("corrupt function node");
}

Value eval(const ArithFn& f, std::uint64_t n, const SpfTable& table) {
  return eval(f, factorize_any(n, table));
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::kMultiplicative, "multiplicative"},
    {Family::kSubMult, "sub-mult"},
    {Family::kSupMult, "sup-mult"},
    {Family::kSubHom, "sub-hom"},
    {Family::kSupHom, "sup-hom"},
    {Family::kKSubMult, "k-sub-mult"},
    {Family::kKSupMult, "k-sup-mult"},
    {Family::kKSubHom, "k-sub-hom"},
    {Family::kKSupHom, "k-sup-hom"},
    {Family::kLeIdentity, "le-id"},
    {Family::kGeIdentity, "ge-id"},
}};

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  // Accept the "super" spelling too.
  if (name == "super-mult") return Family::kSupMult;
  if (name == "super-hom") return Family::kSupHom;
  throw UsageError("unknown property family '" + std::string(name) + "'");
}

bool is_k_family(Family family) {
  return family == Family::kKSubMult || family == Family::kKSupMult ||
         family == Family::kKSubHom || family == Family::kKSupHom;
}

std::string_view direction_name(Direction d) { return d == Direction::kSub ? "sub" : "sup"; }

Direction parse_direction(std::string_view name) {
  if (name == "sub") return Direction::kSub;
  if (name == "sup" || name == "super") return Direction::kSup;
  throw UsageError("direction must be 'sub' or 'sup', got '" + std::string(name) + "'");
}

PropertySpec PropertySpec::make(Family family, std::optional<int> k) {
  if (is_k_family(family)) {
    if (!k) throw UsageError(std::string(family_name(family)) + " needs k >= 2");
    if (*k < 2) throw UsageError("k must be >= 2, got " + std::to_string(*k));
  } else if (k) {
    throw UsageError(std::string(family_name(family)) + " does not take k");
  }
  return PropertySpec{family, k};
}

std::string PropertySpec::label() const {
  if (!k) return std::string(family_name(family));
  return std::to_string(*k) + std::string(family_name(family)).substr(1);
}

std::string_view status_name(TagStatus status) {
  switch (status) {
    case TagStatus::kAsserted: return "asserted";
    case TagStatus::kInferred: return "inferred";
    case TagStatus::kVerifiedOnRange: return "verified-on-range";
    case TagStatus::kRefuted: return "refuted";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Inference.

namespace {

class TagClosure {
 public:
  explicit TagClosure(std::span<const PropertyTag> known) {
    for (const auto& t : known) insert(t);
  }

  bool has(const std::string& subject, Family family, std::optional<int> k = std::nullopt) const {
    const auto it = index_.find(key(subject, family, k));
    return it != index_.end() && tags_[it->second].status != TagStatus::kRefuted;
  }

  // Returns true when the tag is new.
  bool add(const std::string& subject, Family family, std::optional<int> k, std::string rule) {
    if (index_.contains(key(subject, family, k))) return false;
    insert(PropertyTag{subject, PropertySpec::make(family, k), TagStatus::kInferred,
                       std::move(rule), std::nullopt});
    return true;
  }

  std::vector<int> ks_for(const std::string& subject, Family family) const {
    std::vector<int> out;
    for (const auto& t : tags_) {
      if (t.subject == subject && t.spec.family == family && t.spec.k &&
          t.status != TagStatus::kRefuted) {
        out.push_back(*t.spec.k);
      }
    }
    return out;
  }

  const std::vector<PropertyTag>& tags() const { return tags_; }

 private:
  using Key = std::tuple<std::string, Family, int>;
  static Key key(const std::string& s, Family f, std::optional<int> k) { return {s, f, k.value_or(0)}; }

  void insert(const PropertyTag& t) {
    const auto k = key(t.subject, t.spec.family, t.spec.k);
    if (index_.contains(k)) return;
    index_.emplace(k, tags_.size());
    tags_.push_back(t);
  }

  std::map<Key, std::size_t> index_;
  std::vector<PropertyTag> tags_;
};

bool apply_rules(const ArithFn& f, TagClosure& c, std::span<const int> ks) {
  const std::string& s = f.name();
  const auto& ch = f.children();
  bool changed = false;
  auto add = [&](Family fam, std::string rule, std::optional<int> k = std::nullopt) {
    changed |= c.add(s, fam, k, std::move(rule));
  };

  switch (f.kind()) {
    case FnKind::kProduct:
      if (c.has(ch[0].name(), Family::kSubMult) && c.has(ch[1].name(), Family::kSubMult))
        add(Family::kSubMult, "product of sub-multiplicative factors");
      if (c.has(ch[0].name(), Family::kSupMult) && c.has(ch[1].name(), Family::kSupMult))
        add(Family::kSupMult, "product of super-multiplicative factors");
      break;
    case FnKind::kReciprocal:
      if (c.has(ch[0].name(), Family::kSubMult)) add(Family::kSupMult, "reciprocal flips direction");
      if (c.has(ch[0].name(), Family::kSupMult)) add(Family::kSubMult, "reciprocal flips direction");
      break;
    case FnKind::kQuotient:
      if (c.has(ch[0].name(), Family::kSupMult) && c.has(ch[1].name(), Family::kSubMult))
        add(Family::kSupMult, "super-multiplicative over sub-multiplicative");
      if (c.has(ch[0].name(), Family::kSubMult) && c.has(ch[1].name(), Family::kSupMult))
        add(Family::kSubMult, "sub-multiplicative over super-multiplicative");
      break;
    case FnKind::kSum:
      if (c.has(ch[0].name(), Family::kSubMult) && c.has(ch[1].name(), Family::kSubMult))
        add(Family::kSubMult, "sum of sub-multiplicative terms");
      break;
    case FnKind::kPower:
      if (c.has(ch[0].name(), Family::kSubMult) && c.has(ch[1].name(), Family::kSubHom))
        add(Family::kSubMult, "power of sub-multiplicative base with sub-homogeneous exponent");
      if (c.has(ch[0].name(), Family::kSupMult) && c.has(ch[1].name(), Family::kSupHom))
        add(Family::kSupMult, "power of super-multiplicative base with super-homogeneous exponent");
      break;
    case FnKind::kBuiltin:
    case FnKind::kPrimePower:
      break;
  }

  if (c.has(s, Family::kSubMult) && c.has(s, Family::kLeIdentity))
    add(Family::kSubHom, "sub-multiplicative and bounded above by n");
  if (c.has(s, Family::kSupMult) && c.has(s, Family::kGeIdentity))
    add(Family::kSupHom, "super-multiplicative and bounded below by n");

  for (const int k : ks) {
    if (c.has(s, Family::kSubMult) && c.has(s, Family::kSupHom))
      add(Family::kKSupHom, "sub-multiplicative and super-homogeneous", k);
    if (c.has(s, Family::kSupMult) && c.has(s, Family::kSubHom))
      add(Family::kKSubHom, "super-multiplicative and sub-homogeneous", k);
  }

  if (c.has(s, Family::kLeIdentity)) {
    for (const int k : c.ks_for(s, Family::kKSubMult))
      add(Family::kKSubHom, "k-sub-multiplicative and bounded above by n", k);
  }
  if (c.has(s, Family::kGeIdentity)) {
    for (const int k : c.ks_for(s, Family::kKSupMult))
      add(Family::kKSupHom, "k-super-multiplicative and bounded below by n", k);
  }
  return changed;
}

void close_over(const ArithFn& f, TagClosure& c, std::span<const int> ks) {
  for (const auto& child : f.children()) close_over(child, c, ks);
  while (apply_rules(f, c, ks)) {
  }
}

void collect_names(const ArithFn& f, std::vector<std::string>& out) {
  if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
  for (const auto& c : f.children()) collect_names(c, out);
}

}  // namespace

std::vector<PropertyTag> infer_properties(const ArithFn& f, std::span<const PropertyTag> known,
                                          std::span<const int> ks) {
  for (const int k : ks) {
    if (k < 2) throw UsageError("k must be >= 2, got " + std::to_string(k));
  }
  TagClosure closure(known);
  close_over(f, closure, ks);

  std::vector<std::string> names;
  collect_names(f, names);
  std::vector<PropertyTag> out;
  for (const auto& name : names) {
    for (const auto& t : closure.tags()) {
      if (t.subject == name) out.push_back(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Registry.

namespace {

void assert_tag(std::vector<PropertyTag>& tags, const std::string& subject, Family family,
                std::string provenance, std::optional<int> k = std::nullopt) {
  tags.push_back(PropertyTag{subject, PropertySpec::make(family, k), TagStatus::kAsserted,
                             std::move(provenance), std::nullopt});
}

void assert_k_tags(std::vector<PropertyTag>& tags, const std::string& subject, Family family,
                   const std::string& provenance) {
  for (const int k : kDefaultInferenceKs) assert_tag(tags, subject, family, provenance, k);
}

}  // namespace

Registry::Registry() {
  const ArithFn phi = builtin_fn(Builtin::kPhi);
  const ArithFn d = builtin_fn(Builtin::kD);
  const ArithFn sigma = builtin_fn(Builtin::kSigma);
  const ArithFn id = builtin_fn(Builtin::kIdentity);
  const ArithFn one = builtin_fn(Builtin::kConstantOne);

  functions_ = {
      phi,
      d,
      sigma,
      id,
      one,
      combine(FnKind::kQuotient, {sigma, phi}, "sigma_over_phi"),
      combine(FnKind::kQuotient, {sigma, d}, "sigma_over_d"),
      combine(FnKind::kQuotient, {phi, d}, "phi_over_d"),
      combine(FnKind::kSum, {id, d}, "n_plus_d"),
      combine(FnKind::kProduct, {id, phi}, "n_times_phi"),
      combine(FnKind::kQuotient, {id, phi}, "n_over_phi"),
  };

  auto& t = tags_;
  for (const char* name : {"phi", "d", "sigma", "identity", "constant-1"}) {
    assert_tag(t, name, Family::kMultiplicative, "classical multiplicative function");
  }

  assert_tag(t, "phi", Family::kSupMult, "phi(p^(a+b)) >= phi(p^a) phi(p^b)");
  assert_tag(t, "phi", Family::kSubHom, "phi(p^(a+b)) <= p^a phi(p^b), equality for a,b >= 1");
  assert_tag(t, "phi", Family::kLeIdentity, "phi(n) <= n");
  assert_k_tags(t, "phi", Family::kKSubMult, "(1-1/p)^k <= (1-1/p)^2 at prime powers");
  assert_k_tags(t, "phi", Family::kKSubHom, "(phi(p^(a+b)))^k <= p^(ka) phi(p^(kb))");

  assert_tag(t, "d", Family::kSubMult, "d(p^a) = a+1 and a+b+1 <= (a+1)(b+1)");
  assert_tag(t, "d", Family::kLeIdentity, "d(n) <= n");
  assert_tag(t, "d", Family::kSubHom, "sub-multiplicative and d(n) <= n");
  assert_k_tags(t, "d", Family::kKSupMult, "(a+b+1)^k >= (ka+1)(kb+1)");

  assert_tag(t, "sigma", Family::kSubMult, "classical sub-multiplicative function");
  assert_tag(t, "sigma", Family::kSupHom, "1+p+...+p^(a+b) >= p^a (1+p+...+p^b)");
  assert_tag(t, "sigma", Family::kGeIdentity, "sigma(n) >= n");
  // Recorded as k-super-multiplicative; the super direction is what makes
  // the k-super-homogeneous conclusion follow from sigma(n) >= n.
  assert_k_tags(t, "sigma", Family::kKSupMult, "k-super-multiplicative divisor sum");
  assert_k_tags(t, "sigma", Family::kKSupHom, "k-super-homogeneous divisor sum");

  for (const Family f : {Family::kSubMult, Family::kSupMult, Family::kSubHom, Family::kSupHom,
                         Family::kLeIdentity, Family::kGeIdentity}) {
    assert_tag(t, "identity", f, "mn = m n");
  }
  assert_tag(t, "constant-1", Family::kSubMult, "1 = 1 * 1");
  assert_tag(t, "constant-1", Family::kSupMult, "1 = 1 * 1");
  assert_tag(t, "constant-1", Family::kLeIdentity, "1 <= n");

  assert_tag(t, "sigma_over_phi", Family::kSubMult, "sub-multiplicative over super-multiplicative");
  assert_tag(t, "phi_over_d", Family::kSupMult, "super-multiplicative over sub-multiplicative");
  assert_tag(t, "n_plus_d", Family::kSubMult, "sum of sub-multiplicative terms");
  assert_tag(t, "sigma_over_d", Family::kSupMult,
             "(p^(a+b+1)-1)/((p-1)(a+b+1)) >= product of the (a) and (b) terms");
  assert_tag(t, "sigma_over_d", Family::kSubHom, "classical sub-homogeneous quotient");
  assert_tag(t, "sigma_over_d", Family::kLeIdentity, "sigma(n)/d(n) <= n");
  assert_tag(t, "sigma_over_d", Family::kKSubMult, "2-sub-multiplicative quotient", 2);
  assert_tag(t, "n_times_phi", Family::kGeIdentity, "n phi(n) >= n since phi(n) >= 1");
  assert_tag(t, "n_times_phi", Family::kSupHom, "n g(n) with g >= 1 super-homogeneous");
  assert_tag(t, "n_over_phi", Family::kLeIdentity, "n/phi(n) <= n");
  assert_tag(t, "n_over_phi", Family::kSubHom, "sub-multiplicative and n/phi(n) <= n");
}

const Registry& Registry::builtin() {
  static const Registry registry;
  return registry;
}

bool Registry::contains(std::string_view name) const {
  return std::any_of(functions_.begin(), functions_.end(),
                     [&](const ArithFn& f) { return f.name() == name; });
}

const ArithFn& Registry::get(std::string_view name) const {
  for (const auto& f : functions_) {
    if (f.name() == name) return f;
  }
  throw UsageError("unknown function '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

ArithFn Registry::resolve(std::string_view expr) const {
  expr = trim(expr);
  const auto open = expr.find('(');
  if (open == std::string_view::npos) return get(expr);
  if (expr.back() != ')') throw UsageError("malformed function expression '" + std::string(expr) + "'");

  const std::string_view head = trim(expr.substr(0, open));
  const std::string_view body = expr.substr(open + 1, expr.size() - open - 2);
  FnKind kind;
  if (head == "product") kind = FnKind::kProduct;
  else if (head == "quotient") kind = FnKind::kQuotient;
  else if (head == "sum") kind = FnKind::kSum;
  else if (head == "reciprocal") kind = FnKind::kReciprocal;
  else if (head == "power") kind = FnKind::kPower;
  else throw UsageError("unknown combinator '" + std::string(head) + "'");

  // Split on top-level commas.
  std::vector<ArithFn> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      parts.push_back(resolve(body.substr(start, i - start)));
      start = i + 1;
    } else if (body[i] == '(') {
      ++depth;
    } else if (body[i] == ')') {
      if (--depth < 0) throw UsageError("unbalanced parentheses in '" + std::string(expr) + "'");
    }
  }
  if (depth != 0) throw UsageError("unbalanced parentheses in '" + std::string(expr) + "'");
  return combine(kind, std::move(parts));
}

}  // namespace arith
