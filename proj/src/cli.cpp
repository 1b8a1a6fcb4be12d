#include "invarr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "invarr/arrangement.hpp"
#include "invarr/orders.hpp"
#include "invarr/permutation.hpp"
#include "invarr/report.hpp"
#include "invarr/verify.hpp"

namespace invarr::cli {

namespace {

struct Config {
  std::string permutation;
  int n = 0;
  std::string depth;
  std::string format;
  std::string output;
  std::string order = "weak";
  std::string which = "weak";
  bool list = false;
  bool allow_long = false;
  int parallelism = 0;
};

// Writes to --output when given, otherwise to `out`.
void deliver(const Config& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.output.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  file << payload;
}

std::vector<std::uint64_t> coefficients(const QPolynomial& p) {
  auto c = p.coefficients();
  return {c.begin(), c.end()};
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

int run_stats(const Config& cfg, std::ostream& out) {
  const Permutation w = parse_permutation(cfg.permutation);
  const Depth depth = cfg.depth.empty() ? Depth::with_region_oracle : parse_depth(cfg.depth);
  const StatRecord r = stat_record(w, depth);
  std::vector<Violation> violations;
  check_record(r, violations);

  std::string payload;
  if (cfg.format == "text") {
    payload = record_to_text(r);
    for (const auto& v : violations) payload += "VIOLATION " + v.check + ": " + v.details + "\n";
  } else if (cfg.format == "csv") {
    payload = csv_header() + record_to_csv(r);
  } else {
    payload = record_to_json(r).dump(2) + "\n";
  }
  deliver(cfg, payload, out);
  return violations.empty() ? kExitOk : kExitViolations;
}

int run_interval(const Config& cfg, std::ostream& out) {
  const Permutation w = parse_permutation(cfg.permutation);
  const bool weak = cfg.order == "weak";
  std::vector<Permutation> members;
  if (cfg.list) members = weak ? weak_interval_members(w) : bruhat_interval_members(w);
  const IntervalSummary s = weak ? weak_interval(w) : bruhat_interval(w);

  std::string payload;
  if (cfg.format != "text") {
    nlohmann::ordered_json j;
    j["w"] = w.values();
    j["order"] = cfg.order;
    j["size"] = s.size;
    j["max_length"] = s.max_length;
    j["poincare"] = coefficients(s.poincare);
    if (cfg.list) {
      j["elements"] = nlohmann::ordered_json::array();
      for (const auto& u : members) j["elements"].push_back(u.values());
    }
    payload = j.dump(2) + "\n";
  } else {
    payload = "order=" + cfg.order + " w=" + w.to_string() + "\n";
    payload += "size=" + std::to_string(s.size) + " max_length=" + std::to_string(s.max_length) + "\n";
    payload += "poincare=" + s.poincare.to_string() + "\n";
    payload += "coefficients=" + join(coefficients(s.poincare)) + "\n";
    if (cfg.list) {
      for (const auto& u : members) payload += u.to_string() + "\n";
    }
  }
  deliver(cfg, payload, out);
  return kExitOk;
}

int run_poincare(const Config& cfg, std::ostream& out) {
  const Permutation w = parse_permutation(cfg.permutation);
  QPolynomial p;
  if (cfg.which == "weak") {
    p = weak_interval(w).poincare;
  } else if (cfg.which == "bruhat") {
    p = bruhat_interval(w).poincare;
  } else if (cfg.which == "product") {
    p = product_q_formula(w);
  } else {
    p = distance_enumerator(w);
  }
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["w"] = w.values();
    j["which"] = cfg.which;
    j["poincare"] = coefficients(p);
    payload = j.dump(2) + "\n";
  } else {
    payload = p.to_string() + "\n";
  }
  deliver(cfg, payload, out);
  return kExitOk;
}

int run_sweep(const Config& cfg, std::ostream& out, std::ostream& err) {
  SweepOptions options;
  options.n = cfg.n;
  options.depth = cfg.depth.empty() ? Depth::counts : parse_depth(cfg.depth);
  options.allow_long = cfg.allow_long;
  options.parallelism =
      cfg.parallelism > 0 ? cfg.parallelism : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  const SweepReport report = sweep(options);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "text") {
    std::string payload = "n=" + std::to_string(report.n) + " depth=" + std::string(to_string(report.depth)) +
                          " records=" + std::to_string(report.records.size()) +
                          " violations=" + std::to_string(report.violations.size()) + "\n";
    for (const auto& [name, count] : report.class_counts) payload += name + "=" + std::to_string(count) + "\n";
    for (const auto& v : report.violations) {
      payload += "VIOLATION " + v.record.w.to_string() + " " + v.check + ": " + v.details + "\n";
    }
    deliver(cfg, payload, out);
  } else {
    deliver(cfg, emit_report(report, parse_report_format(format)), out);
  }
  if (!report.violations.empty()) {
    err << report.violations.size() << " violation(s) found\n";
    return kExitViolations;
  }
  return kExitOk;
}

int run_oracle_check(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1 || cfg.n > 7) throw std::invalid_argument("oracle-check supports 1 <= n <= 7");
  OracleCheckOptions options;
  options.bruhat_max_n = std::min(cfg.n, 6);
  options.orientation_max_n = std::min(cfg.n, 6);
  options.rook_max_n = cfg.n;
  options.weak_max_n = cfg.n;
  options.region_max_n = std::min(cfg.n, 6);
  const auto results = oracle_equivalences(options);
  bool ok = true;
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json item;
      item["name"] = r.name;
      item["cases"] = r.cases;
      item["mismatches"] = r.mismatches;
      item["first_mismatch"] = r.passed() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.first_mismatch);
      j.push_back(item);
    }
    payload = j.dump(2) + "\n";
  }
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (cfg.format != "json") {
      payload += std::string(r.passed() ? "PASS " : "FAIL ") + r.name + " cases=" + std::to_string(r.cases) +
                 " mismatches=" + std::to_string(r.mismatches);
      if (!r.passed()) payload += " first=" + r.first_mismatch;
      payload += "\n";
    }
  }
  deliver(cfg, payload, out);
  return ok ? kExitOk : kExitViolations;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inversion arrangements, weak and Bruhat intervals, rook placements", "invarr"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::string> depths{"counts", "polys", "with_region_oracle"};

  auto* stats = app.add_subcommand("stats", "all statistics of one permutation");
  stats->add_option("permutation", cfg.permutation, "one-line notation, e.g. 25134 or 2,5,1,3,4")->required();
  stats->add_option("--depth", cfg.depth, "counts | polys | with_region_oracle")->check(CLI::IsMember(depths));
  stats->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  stats->add_option("--output,-o", cfg.output, "write to a file instead of standard output");

  auto* interval = app.add_subcommand("interval", "the interval [id, w] in weak or Bruhat order");
  interval->add_option("permutation", cfg.permutation)->required();
  interval->add_option("--order", cfg.order, "weak | bruhat")->check(CLI::IsMember({"weak", "bruhat"}));
  interval->add_flag("--list", cfg.list, "also print the elements");
  interval->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  interval->add_option("--output,-o", cfg.output);

  auto* poincare = app.add_subcommand("poincare", "one generating polynomial");
  poincare->add_option("permutation", cfg.permutation)->required();
  poincare->add_option("--which", cfg.which, "weak | bruhat | product | distance")
      ->check(CLI::IsMember({"weak", "bruhat", "product", "distance"}));
  poincare->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  poincare->add_option("--output,-o", cfg.output);

  auto* sweep_cmd = app.add_subcommand("sweep", "verify every identity over all of S_n");
  sweep_cmd->add_option("--n", cfg.n, "permutation size")->required()->check(CLI::Range(1, 8));
  sweep_cmd->add_option("--depth", cfg.depth, "counts | polys | with_region_oracle")->check(CLI::IsMember(depths));
  sweep_cmd->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  sweep_cmd->add_option("--output,-o", cfg.output);
  sweep_cmd->add_option("--parallelism,-j", cfg.parallelism, "worker threads (default: all cores)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--long", cfg.allow_long, "allow the n = 8 sweep");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "fast paths against definitional oracles");
  oracle_cmd->add_option("--n", cfg.n, "largest permutation size")->required()->check(CLI::Range(1, 7));
  oracle_cmd->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  oracle_cmd->add_option("--output,-o", cfg.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*stats) return run_stats(cfg, out);
    if (*interval) return run_interval(cfg, out);
    if (*poincare) return run_poincare(cfg, out);
    if (*sweep_cmd) return run_sweep(cfg, out, err);
    return run_oracle_check(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolations;
  }
}

}  // namespace invarr::cli
