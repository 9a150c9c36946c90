#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arith/power_compare.hpp"

namespace arith {

/// The relation a checked instance must satisfy: lhs REL rhs.
enum class Relation { kLe, kGe, kEq, kLt };

std::string_view relation_symbol(Relation r);
std::string_view relation_name(Relation r);
bool satisfies(std::strong_ordering ord, Relation r);

enum class Verdict { kHoldsOnRange, kRefuted };

std::string_view verdict_name(Verdict v);

/// A grid point where the relation fails, with both sides as products of
/// powers so they can be recomputed and printed without expansion.
struct Counterexample {
  std::vector<std::uint64_t> point;
  Side lhs;
  Side rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one exhaustive sweep: a global property check, a local
/// prime-power criterion, or a named inequality.
struct Report {
  std::string kind;     ///< "property", "local" or "inequality"
  std::string subject;  ///< function name or inequality id
  std::string check;    ///< family, criterion or inequality id
  std::optional<std::string> direction;
  std::optional<int> k;
  Relation relation = Relation::kLe;
  std::vector<std::string> coordinates;
  std::vector<std::pair<std::string, std::uint64_t>> range;
  Verdict verdict = Verdict::kHoldsOnRange;
  std::vector<Counterexample> counterexamples;
  std::uint64_t checked = 0;
  PowerCompareStats stats;
  double elapsed_ms = 0;

  bool holds() const { return verdict == Verdict::kHoldsOnRange; }
  std::optional<std::uint64_t> range_value(std::string_view key) const;

  friend bool operator==(const Report&, const Report&) = default;
};

using CheckReport = Report;
using LocalReport = Report;

/// Result of cross-checking a local criterion verdict against a global one.
struct BridgeResult {
  bool consistent = true;
  /// The local grid covers every prime power of every global grid point.
  bool full_coverage = false;
  std::string detail;

  friend bool operator==(const BridgeResult&, const BridgeResult&) = default;
};

inline constexpr const char* kSchemaVersion = "1.0";

/// Top-level JSON document emitted by the CLI.
struct ReportEnvelope {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<Report> reports;
  std::vector<BridgeResult> consistency;
  std::string generated_at;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

void to_json(nlohmann::ordered_json& j, const PowerTerm& t);
void from_json(const nlohmann::ordered_json& j, PowerTerm& t);
void to_json(nlohmann::ordered_json& j, const Counterexample& c);
void from_json(const nlohmann::ordered_json& j, Counterexample& c);
void to_json(nlohmann::ordered_json& j, const Report& r);
void from_json(const nlohmann::ordered_json& j, Report& r);
void to_json(nlohmann::ordered_json& j, const BridgeResult& b);
void from_json(const nlohmann::ordered_json& j, BridgeResult& b);
void to_json(nlohmann::ordered_json& j, const ReportEnvelope& e);
void from_json(const nlohmann::ordered_json& j, ReportEnvelope& e);

/// Human-readable rendering of a report (one header line, then one line per
/// counterexample).
std::string render_text(const Report& r);

/// CSV rows (with header) listing every counterexample in the envelope.
std::string render_csv(const ReportEnvelope& e);

}  // namespace arith
