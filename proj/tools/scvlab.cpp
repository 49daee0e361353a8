// scvlab: generate, inspect and stress single-candidate-vote elections in
// finite metric spaces.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scv/distortion.hpp"
#include "scv/harness.hpp"
#include "scv/instances.hpp"
#include "scv/io.hpp"
#include "scv/kernels.hpp"
#include "scv/mechanisms.hpp"
#include "scv/strategyproof.hpp"

namespace {

using namespace scv;

MechanismId require_mechanism(const std::string& name) {
  const auto id = parse_mechanism(name);
  if (!id) throw CLI::ValidationError("--mechanism", "unknown mechanism '" + name + "'");
  return *id;
}

Objective require_objective(const std::string& name) {
  const auto obj = parse_objective(name);
  if (!obj) throw CLI::ValidationError("--objective", "unknown objective '" + name + "'");
  return *obj;
}

std::vector<int> pick_universe(const Election& e, const std::string& which) {
  if (which == "all") {
    std::vector<int> u(static_cast<std::size_t>(e.metric().size()));
    std::iota(u.begin(), u.end(), 0);
    return u;
  }
  if (which == "candidates") {
    std::vector<int> u = e.candidates();
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
  }
  throw CLI::ValidationError("--universe", "expected 'all' or 'candidates'");
}

int default_k(const Election& e, int k_flag) {
  return k_flag > 0 ? k_flag : e.num_candidates() - 1;
}

std::string witness_field(const DistortionReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.witness.locations.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(r.witness.locations[i]);
  }
  return out;
}

int cmd_validate_metric(const std::string& path) {
  const FiniteMetric metric = read_metric_file(path);
  const MetricValidation result = validate(metric);
  if (result.ok()) {
    std::cout << "ok: " << metric.size() << " points\n";
    return 0;
  }
  for (const MetricViolation& v : result.violations) std::cout << to_string(v) << "\n";
  std::cout << result.violations.size() << " violation(s)\n";
  return 1;
}

int cmd_show_election(const std::string& path) {
  const Election e = read_election_file(path);
  const int m = e.num_candidates();
  std::cout << "candidates " << m << ", voters " << e.num_voters() << "\n";
  const std::vector<int> counts = tally(e);
  std::cout << "tally:\n";
  for (int j = 0; j < m; ++j) {
    std::cout << "  y" << j << " (point " << e.candidate_point(j) << ","
              << e.metric().label(e.candidate_point(j)) << "): " << counts[static_cast<std::size_t>(j)]
              << " vote(s), pd=" << format_real(projection_distance_point(e, j)) << "\n";
  }
  std::cout << "committee projection distances (k=" << m - 1 << "):\n";
  for (const Committee& c : enumerate_committees(m, m - 1)) {
    const std::vector<int> winners = committee_winners(c, m);
    std::cout << "  eliminate " << to_string(c)
              << ": pd=" << format_real(projection_distance_set(e, winners)) << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& kind, int m, int n, std::uint64_t seed, int universe_size,
            const std::string& metric_kind, double L, const std::string& out) {
  InstanceBundle bundle = [&] {
    if (kind == "line-lb") return line_lower_bound_instance(m, L > 0 ? L : 100.0 * m);
    if (kind == "simplex-lb") return simplex_lower_bound_instance(m);
    if (kind == "utility-lb") return utility_lower_bound_instance(m);
    if (kind == "random") {
      const auto mk = parse_metric_kind(metric_kind);
      if (!mk) throw CLI::ValidationError("--metric-kind", "expected line|simplex|random_metric");
      const int usize = universe_size > 0 ? universe_size : m + 2;
      return random_election(seed, m, n, usize, *mk);
    }
    throw CLI::ValidationError("--kind", "expected line-lb|simplex-lb|utility-lb|random");
  }();

  const std::filesystem::path base(out);
  const std::filesystem::path metric_path = base.string() + ".metric";
  const std::filesystem::path election_path = base.string() + ".election";
  write_metric_file(metric_path, bundle.election.metric());
  write_election_file(election_path, bundle.election, metric_path.filename().string());
  std::cout << "wrote " << metric_path.string() << " and " << election_path.string() << "\n";
  std::cout << "# " << bundle.notes << "\n";
  for (const LocationProfile& w : bundle.witnesses) {
    std::cout << "# witness profile " << to_string(w) << "\n";
  }
  return 0;
}

int cmd_run(const std::string& mechanism, const std::string& election_path, int k_flag) {
  const Election e = read_election_file(election_path);
  const Outcome o = run_mechanism(require_mechanism(mechanism), e, default_k(e, k_flag));
  for (const OutcomeEntry& entry : o.entries) {
    std::string ids;
    for (std::size_t i = 0; i < entry.committee.eliminated.size(); ++i) {
      if (i > 0) ids += ",";
      ids += std::to_string(entry.committee.eliminated[i]);
    }
    std::cout << ids << " " << format_probability(entry) << "\n";
  }
  if (o.degenerate) std::cout << "# degenerate: all candidates coincide\n";
  if (o.limit_convention) {
    std::cout << "# limit convention: a candidate with zero votes or zero distance to the "
                 "rest takes an equal share of the mass\n";
  }
  return 0;
}

int cmd_distortion(const std::string& mechanism, const std::string& election_path,
                   const std::string& objective, const std::string& universe_flag, int k_flag,
                   long long budget, int threads) {
  const Election e = read_election_file(election_path);
  const MechanismId mech = require_mechanism(mechanism);
  const Objective obj = require_objective(objective);
  const std::vector<int> universe = pick_universe(e, universe_flag);
  OracleOptions options;
  if (budget > 0) options.budget = budget;
  options.threads = threads;
  const DistortionReport r =
      worst_case_distortion(e, mech, obj, universe, default_k(e, k_flag), options);
  if (r.empty_profile_set) {
    std::cerr << "no consistent location profile over the chosen universe\n";
  }
  std::cout << to_string(mech) << "," << to_string(obj) << "," << e.num_candidates() << ","
            << e.num_voters() << ","
            << (r.empty_profile_set ? "nan"
                                    : (r.unbounded ? "inf" : format_real(r.worst_ratio)))
            << "," << (r.analytic_bound ? format_real(*r.analytic_bound) : "") << ",\""
            << witness_field(r) << "\"\n";
  return r.empty_profile_set ? 1 : 0;
}

int cmd_audit(const std::string& mechanism, const std::string& election_path,
              const std::string& objective, int k_flag, long long budget) {
  const Election e = read_election_file(election_path);
  const MechanismId mech = require_mechanism(mechanism);
  Objective obj;
  if (objective == "auto") {
    obj = (mech == MechanismId::min_projection || mech == MechanismId::power_proportionality)
              ? Objective::cost
              : Objective::utility;
  } else {
    obj = require_objective(objective);
  }
  std::vector<int> universe(static_cast<std::size_t>(e.metric().size()));
  std::iota(universe.begin(), universe.end(), 0);
  AuditOptions options;
  if (budget > 0) options.budget = budget;
  const std::vector<Violation> violations =
      audit_strategyproofness(mech, e, universe, obj, default_k(e, k_flag), options);
  std::cout << "voter,objective,location,truthful_action,better_action,truthful_value,"
               "deviant_value,profile\n";
  for (const Violation& v : violations) std::cout << to_csv_row(v) << "\n";
  std::cerr << violations.size() << " violation(s)\n";
  return violations.empty() ? 0 : 1;
}

int cmd_reproduce_table(const std::string& out) {
  const std::vector<TableRow> rows = reproduce_table();
  const std::string csv = table_to_csv(rows);
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error(out + ": cannot write");
    file << csv;
    std::cout << "wrote " << out << "\n";
  }
  int failures = 0;
  for (const TableRow& row : rows) failures += row.pass ? 0 : 1;
  std::cerr << rows.size() - failures << "/" << rows.size() << " rows pass\n";
  return failures == 0 ? 0 : 1;
}

int cmd_sample(const std::string& mechanism, const std::string& election_path, int k_flag,
               std::uint64_t seed) {
  const Election e = read_election_file(election_path);
  const Outcome o = run_mechanism(require_mechanism(mechanism), e, default_k(e, k_flag));
  const Committee drawn = sample_outcome(o, seed);
  std::cout << "eliminated " << to_string(drawn) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-candidate-vote elections in metric spaces: mechanisms, "
               "worst-case distortion oracle, strategy-proofness audit"};
  app.require_subcommand(1);

  std::string metric_path;
  auto* validate_cmd = app.add_subcommand("validate-metric", "check a metric file's axioms");
  validate_cmd->add_option("path", metric_path, "metric file")->required();

  std::string election_path;
  auto* show_cmd = app.add_subcommand("show-election", "print tally and projection distances");
  show_cmd->add_option("--election,path", election_path, "election file")->required();

  std::string gen_kind = "random";
  int gen_m = 3;
  int gen_n = 3;
  std::uint64_t gen_seed = 1;
  int gen_universe = 0;
  std::string gen_metric_kind = "line";
  double gen_L = 0.0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance (metric + election)");
  gen_cmd->add_option("--kind", gen_kind, "line-lb|simplex-lb|utility-lb|random")->required();
  gen_cmd->add_option("--m", gen_m, "number of candidates");
  gen_cmd->add_option("--n", gen_n, "number of voters (random kind)");
  gen_cmd->add_option("--seed", gen_seed, "generator seed (random kind)");
  gen_cmd->add_option("--universe-size", gen_universe, "points in the universe (random kind)");
  gen_cmd->add_option("--metric-kind", gen_metric_kind, "line|simplex|random_metric");
  gen_cmd->add_option("--L", gen_L, "far-candidate spacing (line-lb)");
  gen_cmd->add_option("--out", gen_out, "output path prefix")->required();

  std::string run_mech;
  std::string run_election;
  int run_k = 0;
  auto* run_cmd = app.add_subcommand("run", "run a mechanism, print eliminated-set probabilities");
  run_cmd->add_option("--mechanism", run_mech, "mechanism id")->required();
  run_cmd->add_option("--election", run_election, "election file")->required();
  run_cmd->add_option("--k", run_k, "committee size (default m-1)");

  std::string dist_mech;
  std::string dist_election;
  std::string dist_objective = "cost";
  std::string dist_universe = "all";
  int dist_k = 0;
  long long dist_budget = 0;
  int dist_threads = 1;
  auto* dist_cmd = app.add_subcommand("distortion", "brute-force worst-case ratio over a universe");
  dist_cmd->add_option("--mechanism", dist_mech, "mechanism id")->required();
  dist_cmd->add_option("--election", dist_election, "election file")->required();
  dist_cmd->add_option("--objective", dist_objective, "cost|utility");
  dist_cmd->add_option("--universe", dist_universe, "all|candidates");
  dist_cmd->add_option("--k", dist_k, "committee size (default m-1)");
  dist_cmd->add_option("--budget", dist_budget, "max consistent profiles");
  dist_cmd->add_option("--threads", dist_threads, "search workers");

  std::string audit_mech;
  std::string audit_election;
  std::string audit_objective = "auto";
  std::string audit_universe = "all";
  int audit_k = 0;
  long long audit_budget = 0;
  auto* audit_cmd = app.add_subcommand("audit", "exhaustive strategy-proofness audit");
  audit_cmd->add_option("--mechanism", audit_mech, "mechanism id")->required();
  audit_cmd->add_option("--election", audit_election, "election template file")->required();
  audit_cmd->add_option("--objective", audit_objective, "cost|utility|auto");
  audit_cmd->add_option("--k", audit_k, "committee size (default m-1)");
  audit_cmd->add_option("--budget", audit_budget, "max deviation checks");
  audit_cmd->add_option("--universe", audit_universe, "all (the audit sweeps every metric point)");

  std::string table_out;
  auto* table_cmd =
      app.add_subcommand("reproduce-table", "run the bound-reproduction battery, emit CSV");
  table_cmd->add_option("--out", table_out, "CSV output path (default stdout)");

  std::string sample_mech;
  std::string sample_election;
  int sample_k = 0;
  std::uint64_t sample_seed = 1;
  auto* sample_cmd = app.add_subcommand("sample", "draw one committee from a mechanism's outcome");
  sample_cmd->add_option("--mechanism", sample_mech, "mechanism id")->required();
  sample_cmd->add_option("--election", sample_election, "election file")->required();
  sample_cmd->add_option("--k", sample_k, "committee size (default m-1)");
  sample_cmd->add_option("--seed", sample_seed, "draw seed")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate_metric(metric_path);
    if (show_cmd->parsed()) return cmd_show_election(election_path);
    if (gen_cmd->parsed()) {
      return cmd_gen(gen_kind, gen_m, gen_n, gen_seed, gen_universe, gen_metric_kind, gen_L,
                     gen_out);
    }
    if (run_cmd->parsed()) return cmd_run(run_mech, run_election, run_k);
    if (dist_cmd->parsed()) {
      return cmd_distortion(dist_mech, dist_election, dist_objective, dist_universe, dist_k,
                            dist_budget, dist_threads);
    }
    if (audit_cmd->parsed()) {
      if (audit_universe != "all") {
        throw CLI::ValidationError("--universe", "only 'all' is supported");
      }
      return cmd_audit(audit_mech, audit_election, audit_objective, audit_k, audit_budget);
    }
    if (table_cmd->parsed()) return cmd_reproduce_table(table_out);
    if (sample_cmd->parsed()) return cmd_sample(sample_mech, sample_election, sample_k, sample_seed);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
