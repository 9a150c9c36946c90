#include "arith/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arith/errors.hpp"
#include "arith/inequalities.hpp"
#include "arith/local_criteria.hpp"
#include "arith/prop_check.hpp"
#include "arith/registry.hpp"
#include "arith/report.hpp"

namespace arith::cli {

namespace {

using nlohmann::ordered_json;

struct OutputFlags {
  bool json = false;
  std::string csv;
  unsigned threads = 1;
  std::size_t cap = 10;
  bool stop_at_first = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& o) {
  cmd->add_flag("--json", o.json, "Emit the JSON report envelope");
  cmd->add_option("--csv", o.csv, "Also write counterexamples to this CSV file");
  cmd->add_option("--threads", o.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1u, 1024u));
  cmd->add_option("--cap", o.cap, "Maximum counterexamples reported")->check(CLI::PositiveNumber);
  cmd->add_flag("--stop-at-first", o.stop_at_first, "Stop at the smallest counterexample");
}

class Printer {
 public:
  Printer(std::ostream& out, const Options& opts) : out_(out), opts_(opts) {}

  void text(const Report& r) {
    std::string s = render_text(r);
    if (opts_.color) {
      const std::string word(verdict_name(r.verdict));
      const auto pos = s.find(word);
      if (pos != std::string::npos) {
        const char* code = r.holds() ? "\033[32m" : "\033[31m";
        s.replace(pos, word.size(), std::string(code) + word + "\033[0m");
      }
    }
    out_ << s;
  }

  int emit(ReportEnvelope env, const OutputFlags& o, const std::optional<std::uint64_t>& sieve_limit) {
    env.generated_at = utc_timestamp();
    if (!o.csv.empty()) {
      std::ofstream csv(o.csv);
      if (!csv) throw UsageError("cannot write CSV file '" + o.csv + "'");
      csv << render_csv(env);
    }
    if (o.json) {
      out_ << ordered_json(env).dump(2) << '\n';
    } else {
      if (sieve_limit) out_ << "sieve limit: " << *sieve_limit << '\n';
      for (const auto& r : env.reports) text(r);
      for (const auto& b : env.consistency) out_ << "bridge: " << b.detail << '\n';
    }
    const bool all_hold = std::all_of(env.reports.begin(), env.reports.end(),
                                      [](const Report& r) { return r.holds(); });
    return all_hold ? kHolds : kRefuted;
  }

 private:
  std::ostream& out_;
  const Options& opts_;
};

std::vector<int> parse_k_set(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(k);
    } catch (const std::exception&) {
      throw UsageError("bad --k-set entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--k-set is empty");
  return out;
}

// "sub-mult", or a stem ("mult", "hom", "k-mult", "k-hom", "id") plus direction.
PropertySpec parse_property(const std::string& property, const std::string& direction,
                            std::optional<int> k) {
  std::string name = property;
  if (!direction.empty()) {
    const std::string dir(direction_name(parse_direction(direction)));
    if (property == "mult" || property == "hom") name = dir + "-" + property;
    else if (property == "k-mult" || property == "k-hom") name = "k-" + dir + property.substr(1);
    else if (property == "id") name = dir == "sub" ? "le-id" : "ge-id";
    else if (property.rfind(dir, 0) != 0 && property.rfind("k-" + dir, 0) != 0)
      throw UsageError("direction '" + direction + "' conflicts with property '" + property + "'");
  }
  const Family fam = parse_family(name);
  if (!is_k_family(fam) && k) throw UsageError("--k applies only to k-families, not " + name);
  if (is_k_family(fam) && !k) k = 2;
  return PropertySpec::make(fam, k);
}

CheckConfig make_config(std::uint64_t max_m, std::uint64_t max_n, const OutputFlags& o) {
  CheckConfig cfg;
  cfg.max_m = max_m;
  cfg.max_n = max_n;
  cfg.threads = o.threads;
  cfg.counterexample_cap = o.cap;
  cfg.stop_at_first = o.stop_at_first;
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  CLI::App app{"Exact verification of inequalities between arithmetic functions"};
  app.require_subcommand(1);
  Printer printer(out, options);
  const Registry& registry = Registry::builtin();

  // eval
  std::string eval_fn;
  std::uint64_t eval_n = 0;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function exactly at n");
  eval_cmd->add_option("function", eval_fn, "Function name or expression")->required();
  eval_cmd->add_option("n", eval_n, "Positive integer")->required();

  // check
  std::string check_fn, check_prop, check_dir;
  std::optional<int> check_k;
  std::uint64_t check_m = 100, check_n = 100;
  OutputFlags check_out;
  auto* check_cmd = app.add_subcommand("check", "Sweep one property over the m x n grid");
  check_cmd->add_option("function", check_fn)->required();
  check_cmd->add_option("property", check_prop, "e.g. sub-mult, sup-hom, k-sub-mult, multiplicative")->required();
  check_cmd->add_option("direction", check_dir, "sub or sup, when the property is given as a stem");
  check_cmd->add_option("--k", check_k, "k for k-families (default 2)");
  check_cmd->add_option("--max-m", check_m)->capture_default_str();
  check_cmd->add_option("--max-n", check_n)->capture_default_str();
  add_output_flags(check_cmd, check_out);

  // local
  std::string local_fn, local_crit, local_dir;
  std::optional<int> local_k;
  std::uint64_t local_prime = 50;
  std::uint32_t local_exp = 10;
  std::uint64_t local_m = 100, local_n = 100;
  bool local_bridge = false;
  OutputFlags local_out;
  auto* local_cmd = app.add_subcommand("local", "Check a prime-power criterion");
  local_cmd->add_option("function", local_fn)->required();
  local_cmd->add_option("criterion", local_crit, "eq14, eq18, eq21 or eq22")->required();
  local_cmd->add_option("direction", local_dir, "sub or sup")->required();
  local_cmd->add_option("--k", local_k, "k for eq18/eq22 (default 2)");
  local_cmd->add_option("--max-prime", local_prime)->capture_default_str();
  local_cmd->add_option("--max-exp", local_exp)->capture_default_str();
  local_cmd->add_flag("--bridge", local_bridge, "Also run the implied global check and cross-check");
  local_cmd->add_option("--max-m", local_m, "Global grid for --bridge")->capture_default_str();
  local_cmd->add_option("--max-n", local_n, "Global grid for --bridge")->capture_default_str();
  add_output_flags(local_cmd, local_out);

  // classify
  std::string classify_fn, classify_ks = "2";
  std::uint64_t classify_m = 100, classify_n = 100;
  OutputFlags classify_out;
  auto* classify_cmd = app.add_subcommand("classify", "Sweep every property family");
  classify_cmd->add_option("function", classify_fn)->required();
  classify_cmd->add_option("--max-m", classify_m)->capture_default_str();
  classify_cmd->add_option("--max-n", classify_n)->capture_default_str();
  classify_cmd->add_option("--k-set", classify_ks, "Comma-separated k values")->capture_default_str();
  add_output_flags(classify_cmd, classify_out);

  // inequality
  std::string ineq_id, ineq_f = "sigma", ineq_g = "phi";
  std::uint64_t ineq_prime = 50, ineq_n = 100, ineq_ab = 10;
  std::uint32_t ineq_exp = 10;
  int ineq_max_k = 4, ineq_k = 2;
  bool ineq_exact = false;
  std::uint64_t ineq_digits = 1'000'000;
  OutputFlags ineq_out;
  auto* ineq_cmd = app.add_subcommand("inequality", "Verify a named inequality");
  ineq_cmd->add_option("id", ineq_id, "eq12, eq13, eq16, eq20, eq23 or corollary1")->required();
  ineq_cmd->add_option("--max-prime", ineq_prime)->capture_default_str();
  ineq_cmd->add_option("--max-n", ineq_n)->capture_default_str();
  ineq_cmd->add_option("--max-exp", ineq_exp)->capture_default_str();
  ineq_cmd->add_option("--max-ab", ineq_ab)->capture_default_str();
  ineq_cmd->add_option("--max-k", ineq_max_k)->capture_default_str();
  ineq_cmd->add_option("--k", ineq_k)->capture_default_str();
  ineq_cmd->add_option("--f", ineq_f, "Base function for corollary1")->capture_default_str();
  ineq_cmd->add_option("--g", ineq_g, "Exponent function for corollary1")->capture_default_str();
  ineq_cmd->add_flag("--exact-only", ineq_exact, "Skip the logarithmic filter");
  ineq_cmd->add_option("--max-digits", ineq_digits, "Digit budget for exact powers")->capture_default_str();
  add_output_flags(ineq_cmd, ineq_out);

  try {
    // CLI11 consumes the argument vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*eval_cmd) {
      if (eval_n == 0) throw DomainError("n must be positive");
      const ArithFn f = registry.resolve(eval_fn);
      const SpfTable table(std::max<std::uint64_t>(eval_n, 2));
      out << eval(f, eval_n, table).str() << '\n';
      return kHolds;
    }

    if (*check_cmd) {
      const ArithFn f = registry.resolve(check_fn);
      const PropertySpec spec = parse_property(check_prop, check_dir, check_k);
      const CheckConfig cfg = make_config(check_m, check_n, check_out);
      const std::uint64_t limit = required_sieve_limit(cfg);
      const SpfTable table(limit);
      ReportEnvelope env;
      env.command = "check";
      env.inputs = {{"function", f.name()}, {"property", family_name(spec.family)},
                    {"k", spec.k ? ordered_json(*spec.k) : ordered_json(nullptr)},
                    {"max_m", check_m}, {"max_n", check_n}, {"cap", check_out.cap},
                    {"stop_at_first", check_out.stop_at_first}, {"sieve_limit", limit}};
      env.reports.push_back(check_property(f, spec, cfg, table));
      return printer.emit(std::move(env), check_out, limit);
    }

    if (*local_cmd) {
      const ArithFn f = registry.resolve(local_fn);
      const LocalFamily fam = parse_local_family(local_crit);
      std::optional<int> k = local_k;
      if (fam == LocalFamily::kEq18 || fam == LocalFamily::kEq22) {
        if (!k) k = 2;
      } else {
        k.reset();
      }
      const LocalCriterion crit = LocalCriterion::make(fam, parse_direction(local_dir), k);
      LocalConfig lcfg;
      lcfg.max_prime = local_prime;
      lcfg.max_exp = local_exp;
      lcfg.threads = local_out.threads;
      lcfg.counterexample_cap = local_out.cap;
      lcfg.stop_at_first = local_out.stop_at_first;

      ReportEnvelope env;
      env.command = "local";
      env.inputs = {{"function", f.name()}, {"criterion", local_crit},
                    {"direction", direction_name(crit.direction)},
                    {"k", k ? ordered_json(*k) : ordered_json(nullptr)},
                    {"max_prime", local_prime}, {"max_exp", local_exp}, {"bridge", local_bridge},
                    {"cap", local_out.cap}, {"stop_at_first", local_out.stop_at_first}};
      env.reports.push_back(check_local(f, crit, lcfg));
      std::optional<std::uint64_t> limit;
      if (local_bridge) {
        CheckConfig cfg = make_config(local_m, local_n, local_out);
        cfg.stop_at_first = false;
        limit = required_sieve_limit(cfg);
        env.inputs["max_m"] = local_m;
        env.inputs["max_n"] = local_n;
        env.inputs["sieve_limit"] = *limit;
        const SpfTable table(*limit);
        env.reports.push_back(check_property(f, implied_property(crit), cfg, table));
        env.consistency.push_back(bridge_consistency(f, crit, env.reports[0], env.reports[1]));
      }
      const int code = printer.emit(env, local_out, limit);
      for (const auto& b : env.consistency) require_consistent(b);
      // The exit status follows the local criterion alone.
      if (local_bridge) return env.reports[0].holds() ? kHolds : kRefuted;
      return code;
    }

    if (*classify_cmd) {
      const ArithFn f = registry.resolve(classify_fn);
      CheckConfig cfg = make_config(classify_m, classify_n, classify_out);
      cfg.k_set = parse_k_set(classify_ks);
      const std::uint64_t limit = required_sieve_limit(cfg);
      const SpfTable table(limit);
      ReportEnvelope env;
      env.command = "classify";
      env.inputs = {{"function", f.name()}, {"max_m", classify_m}, {"max_n", classify_n},
                    {"k_set", cfg.k_set}, {"cap", classify_out.cap},
                    {"stop_at_first", classify_out.stop_at_first}, {"sieve_limit", limit}};
      env.reports = classify(f, cfg, table);
      printer.emit(std::move(env), classify_out, limit);
      return kHolds;
    }

    if (*ineq_cmd) {
      const InequalityId id = parse_inequality(ineq_id);
      InequalityOptions opts;
      opts.threads = ineq_out.threads;
      opts.counterexample_cap = ineq_out.cap;
      opts.stop_at_first = ineq_out.stop_at_first;
      opts.power.mode = ineq_exact ? PowerCompareMode::kExactOnly : PowerCompareMode::kFilterThenExact;
      opts.power.max_digits = ineq_digits;

      ReportEnvelope env;
      env.command = "inequality";
      env.inputs = {{"id", ineq_id}, {"exact_only", ineq_exact}, {"max_digits", ineq_digits},
                    {"cap", ineq_out.cap}, {"stop_at_first", ineq_out.stop_at_first}};
      switch (id) {
        case InequalityId::kEq12:
          env.inputs["max_prime"] = ineq_prime;
          env.reports.push_back(verify_eq12(ineq_prime, opts));
          break;
        case InequalityId::kEq13:
          env.inputs["max_n"] = ineq_n;
          env.reports.push_back(verify_eq13(ineq_n, opts));
          break;
        case InequalityId::kEq16:
          env.inputs["max_prime"] = ineq_prime;
          env.inputs["max_exp"] = ineq_exp;
          env.reports.push_back(verify_eq16(ineq_prime, ineq_exp, opts));
          break;
        case InequalityId::kEq20:
          env.inputs["max_ab"] = ineq_ab;
          env.inputs["max_k"] = ineq_max_k;
          env.reports.push_back(verify_eq20(ineq_ab, ineq_max_k, opts));
          break;
        case InequalityId::kEq23:
          env.inputs["max_prime"] = ineq_prime;
          env.inputs["max_exp"] = ineq_exp;
          env.inputs["k"] = ineq_k;
          env.reports.push_back(verify_eq23(ineq_prime, ineq_exp, ineq_k, opts));
          break;
        case InequalityId::kCorollary1: {
          const ArithFn f = registry.resolve(ineq_f);
          const ArithFn g = registry.resolve(ineq_g);
          env.inputs["f"] = f.name();
          env.inputs["g"] = g.name();
          env.inputs["max_prime"] = ineq_prime;
          env.inputs["max_n"] = ineq_n;
          auto [primes, all] = verify_corollary1(f, g, ineq_prime, ineq_n, registry.asserted_tags(), opts);
          env.reports.push_back(std::move(primes));
          env.reports.push_back(std::move(all));
          break;
        }
      }
      return printer.emit(std::move(env), ineq_out, std::nullopt);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace arith::cli
