#include "arith/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "arith/errors.hpp"

namespace arith {

using nlohmann::ordered_json;

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kGe: return ">=";
    case Relation::kEq: return "==";
    case Relation::kLt: return "<";
  }
  return "?";
}

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::kLe: return "le";
    case Relation::kGe: return "ge";
    case Relation::kEq: return "eq";
    case Relation::kLt: return "lt";
  }
  return "?";
}

namespace {

Relation parse_relation(std::string_view s) {
  if (s == "le") return Relation::kLe;
  if (s == "ge") return Relation::kGe;
  if (s == "eq") return Relation::kEq;
  if (s == "lt") return Relation::kLt;
  throw UsageError("unknown relation '" + std::string(s) + "'");
}

Verdict parse_verdict(std::string_view s) {
  if (s == "holds-on-range") return Verdict::kHoldsOnRange;
  if (s == "refuted") return Verdict::kRefuted;
  throw UsageError("unknown verdict '" + std::string(s) + "'");
}

}  // namespace

bool satisfies(std::strong_ordering ord, Relation r) {
  switch (r) {
    case Relation::kLe: return ord <= 0;
    case Relation::kGe: return ord >= 0;
    case Relation::kEq: return ord == 0;
    case Relation::kLt: return ord < 0;
  }
  return false;
}

std::string_view verdict_name(Verdict v) {
  return v == Verdict::kHoldsOnRange ? "holds-on-range" : "refuted";
}

std::optional<std::uint64_t> Report::range_value(std::string_view key) const {
  for (const auto& [k, v] : range) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void to_json(ordered_json& j, const PowerTerm& t) { j = ordered_json::array({t.base.str(), t.exponent}); }

void from_json(const ordered_json& j, PowerTerm& t) {
  t.base = Value::parse(j.at(0).get<std::string>());
  t.exponent = j.at(1).get<std::uint64_t>();
}

void to_json(ordered_json& j, const Counterexample& c) {
  j = ordered_json{{"point", c.point}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

void from_json(const ordered_json& j, Counterexample& c) {
  c.point = j.at("point").get<std::vector<std::uint64_t>>();
  c.lhs = j.at("lhs").get<Side>();
  c.rhs = j.at("rhs").get<Side>();
}

void to_json(ordered_json& j, const Report& r) {
  ordered_json range = ordered_json::object();
  for (const auto& [k, v] : r.range) range[k] = v;
  j = ordered_json{
      {"kind", r.kind},
      {"subject", r.subject},
      {"check", r.check},
      {"direction", r.direction ? ordered_json(*r.direction) : ordered_json(nullptr)},
      {"k", r.k ? ordered_json(*r.k) : ordered_json(nullptr)},
      {"relation", relation_name(r.relation)},
      {"coordinates", r.coordinates},
      {"range", range},
      {"verdict", verdict_name(r.verdict)},
      {"counterexamples", r.counterexamples},
      {"checked", r.checked},
      {"stats",
       {{"filter_decisions", r.stats.filter_decisions},
        {"exact_comparisons", r.stats.exact_comparisons}}},
      {"elapsed_ms", r.elapsed_ms},
  };
}

void from_json(const ordered_json& j, Report& r) {
  r.kind = j.at("kind").get<std::string>();
  r.subject = j.at("subject").get<std::string>();
  r.check = j.at("check").get<std::string>();
  r.direction = j.at("direction").is_null() ? std::nullopt
                                            : std::optional(j.at("direction").get<std::string>());
  r.k = j.at("k").is_null() ? std::nullopt : std::optional(j.at("k").get<int>());
  r.relation = parse_relation(j.at("relation").get<std::string>());
  r.coordinates = j.at("coordinates").get<std::vector<std::string>>();
  r.range.clear();
  for (const auto& [k, v] : j.at("range").items()) r.range.emplace_back(k, v.get<std::uint64_t>());
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.counterexamples = j.at("counterexamples").get<std::vector<Counterexample>>();
  r.checked = j.at("checked").get<std::uint64_t>();
  r.stats.filter_decisions = j.at("stats").at("filter_decisions").get<std::uint64_t>();
  r.stats.exact_comparisons = j.at("stats").at("exact_comparisons").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
}

void to_json(ordered_json& j, const BridgeResult& b) {
  j = ordered_json{{"consistent", b.consistent}, {"full_coverage", b.full_coverage}, {"detail", b.detail}};
}

void from_json(const ordered_json& j, BridgeResult& b) {
  b.consistent = j.at("consistent").get<bool>();
  b.full_coverage = j.at("full_coverage").get<bool>();
  b.detail = j.at("detail").get<std::string>();
}

void to_json(ordered_json& j, const ReportEnvelope& e) {
  j = ordered_json{
      {"schema_version", e.schema_version},
      {"command", e.command},
      {"inputs", e.inputs},
      {"reports", e.reports},
      {"consistency", e.consistency},
      {"generated_at", e.generated_at},
  };
}

void from_json(const ordered_json& j, ReportEnvelope& e) {
  e.schema_version = j.at("schema_version").get<std::string>();
  e.command = j.at("command").get<std::string>();
  e.inputs = j.at("inputs");
  e.reports = j.at("reports").get<std::vector<Report>>();
  e.consistency = j.at("consistency").get<std::vector<BridgeResult>>();
  e.generated_at = j.at("generated_at").get<std::string>();
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.subject;
  if (r.check != r.subject) {
    os << ' ';
    if (r.k && r.kind == "property") {
      os << *r.k << r.check.substr(1);
    } else {
      os << r.check;
      if (r.k) os << " k=" << *r.k;
    }
    if (r.direction && r.kind != "property") os << ' ' << *r.direction;
  }
  os << " [";
  for (std::size_t i = 0; i < r.range.size(); ++i) {
    if (i) os << ", ";
    os << r.range[i].first << '=' << r.range[i].second;
  }
  os << "]: " << verdict_name(r.verdict) << " (" << r.checked << " checked";
  if (r.stats.filter_decisions + r.stats.exact_comparisons > 0) {
    os << "; " << r.stats.filter_decisions << " by log filter, " << r.stats.exact_comparisons
       << " exact";
  }
  os << ")\n";
  for (const auto& c : r.counterexamples) {
    os << "  ";
    for (std::size_t i = 0; i < c.point.size(); ++i) {
      if (i) os << ' ';
      os << (i < r.coordinates.size() ? r.coordinates[i] : "x") << '=' << c.point[i];
    }
    os << ": " << side_str(c.lhs) << " vs " << side_str(c.rhs) << " violates "
       << relation_symbol(r.relation) << '\n';
  }
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string render_csv(const ReportEnvelope& e) {
  std::ostringstream os;
  os << "kind,subject,check,direction,k,point,lhs,rhs\n";
  for (const auto& r : e.reports) {
    for (const auto& c : r.counterexamples) {
      std::string point;
      for (std::size_t i = 0; i < c.point.size(); ++i) {
        if (i) point += ' ';
        point += std::to_string(c.point[i]);
      }
      os << r.kind << ',' << csv_field(r.subject) << ',' << r.check << ','
         << r.direction.value_or("") << ',' << (r.k ? std::to_string(*r.k) : "") << ','
         << point << ',' << csv_field(side_str(c.lhs)) << ',' << csv_field(side_str(c.rhs)) << '\n';
    }
  }
  return os.str();
}

}  // namespace arith
