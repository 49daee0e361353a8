#include "scv/harness.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "scv/instances.hpp"
#include "scv/io.hpp"

namespace scv {
namespace {

constexpr double kTableTol = 1e-6;

// All vote-count splits (c_0..c_{m-1}) summing to n, lexicographic.
void for_each_split(int n, int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == m - 1) {
      counts[static_cast<std::size_t>(slot)] = left;
      fn(counts);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[static_cast<std::size_t>(slot)] = c;
      rec(slot + 1, left - c);
    }
  };
  rec(0, n);
}

std::vector<int> expand_actions(const std::vector<int>& counts) {
  std::vector<int> actions;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    for (int c = 0; c < counts[j]; ++c) actions.push_back(static_cast<int>(j));
  }
  return actions;
}

TableRow make_row(std::string objective, std::string setting, std::string mechanism, int m,
                  double claimed, double measured, char relation) {
  TableRow row;
  row.objective = std::move(objective);
  row.setting = std::move(setting);
  row.mechanism = std::move(mechanism);
  row.m = m;
  row.claimed = claimed;
  row.measured = measured;
  row.relation = relation;
  row.pass = relation == '=' ? std::abs(measured - claimed) <= kTableTol
                             : measured <= claimed + kTableTol;
  return row;
}

}  // namespace

std::vector<TableRow> reproduce_table() {
  std::vector<TableRow> rows;

  {
    const InstanceBundle b = line_lower_bound_instance(3, 100.0);
    const DistortionReport r = worst_case_distortion(
        b.election, MechanismId::min_projection, Objective::cost, b.universe, 2);
    rows.push_back(make_row("cost", "deterministic", "min_projection", 3, 3.0, r.worst_ratio, '='));
  }

  for (int m = 2; m <= 5; ++m) {
    const InstanceBundle b = simplex_lower_bound_instance(m);
    const DistortionReport r = worst_case_distortion(
        b.election, MechanismId::power_proportionality, Objective::cost, b.universe, m - 1);
    rows.push_back(make_row("cost", "randomized", "power_proportionality", m, 3.0 - 2.0 / m,
                            r.worst_ratio, '='));
  }

  {
    const InstanceBundle b = utility_lower_bound_instance(3);
    const DistortionReport r = worst_case_distortion(
        b.election, MechanismId::max_projection, Objective::utility, b.universe, 2);
    rows.push_back(
        make_row("utility", "deterministic", "max_projection", 3, 3.0, r.worst_ratio, '='));

    Outcome half_half;
    half_half.entries.push_back({Committee{{0}}, 0.5, make_rational(1, 2)});
    half_half.entries.push_back({Committee{{1}}, 0.5, make_rational(1, 2)});
    const DistortionReport rr =
        worst_case_distortion(b.election, half_half, Objective::utility, b.universe, 2);
    rows.push_back(
        make_row("utility", "randomized lower", "half_half_endpoints", 3, 1.5, rr.worst_ratio, '='));
  }

  rows.push_back(make_row("utility", "randomized 2-candidate", "proportionality", 2,
                          (5.0 + 4.0 * std::sqrt(2.0)) / 7.0,
                          sweep_two_candidate_proportionality(8), '<'));

  for (int m = 3; m <= 5; ++m) {
    rows.push_back(make_row("utility", "randomized simplex", "proportionality", m,
                            3.0 - 4.0 / (m + 2), sweep_simplex_proportionality(m, 5), '<'));
  }

  rows.push_back(make_row("utility", "randomized line", "left_or_right", 4, 13.0 / 7.0,
                          sweep_left_or_right(4, 6), '<'));

  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "objective,setting,mechanism,m,claimed,measured,relation,status\n";
  for (const TableRow& row : rows) {
    out << row.objective << "," << row.setting << "," << row.mechanism << "," << row.m << ","
        << format_real(row.claimed) << "," << format_real(row.measured) << ","
        << (row.relation == '=' ? "eq" : "le") << "," << (row.pass ? "pass" : "fail") << "\n";
  }
  return out.str();
}

Committee sample_outcome(const Outcome& o, std::uint64_t seed) {
  if (o.entries.empty()) throw std::invalid_argument("cannot sample an empty outcome");
  std::mt19937_64 rng(seed);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double cum = 0.0;
  for (const OutcomeEntry& entry : o.entries) {
    cum += entry.prob;
    if (u < cum) return entry.committee;
  }
  return o.entries.back().committee;
}

double sweep_two_candidate_proportionality(int max_n) {
  // Quarter-step grid around candidates at 0 and 2; includes the midpoint
  // and both candidate points, where the tight profiles live.
  std::vector<double> grid(12);
  for (int i = 0; i < 12; ++i) grid[static_cast<std::size_t>(i)] = -0.5 + 0.25 * i;
  const FiniteMetric metric = line_metric(grid);
  const std::vector<int> candidates = {2, 10};  // coordinates 0 and 2
  std::vector<int> universe(12);
  std::iota(universe.begin(), universe.end(), 0);

  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (int votes_left = 0; votes_left <= n; ++votes_left) {
      std::vector<int> actions(static_cast<std::size_t>(n), 1);
      for (int i = 0; i < votes_left; ++i) actions[static_cast<std::size_t>(i)] = 0;
      const Election e(metric, candidates, actions);
      const DistortionReport r = worst_case_distortion(
          e, MechanismId::proportionality, Objective::utility, universe, 1);
      worst = std::max(worst, r.worst_ratio);
    }
  }
  return worst;
}

double sweep_simplex_proportionality(int m, int max_n) {
  const InstanceBundle base = simplex_lower_bound_instance(m);
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for_each_split(n, m, [&](const std::vector<int>& counts) {
      const Election e = base.election.with_actions(expand_actions(counts));
      const DistortionReport r = worst_case_distortion(
          e, MechanismId::proportionality, Objective::utility, base.universe, m - 1);
      worst = std::max(worst, r.worst_ratio);
    });
  }
  return worst;
}

double sweep_left_or_right(int max_m, int max_n) {
  // Grid 0..8 (step L/8, L = 8); point id == coordinate.
  std::vector<double> grid(9);
  std::iota(grid.begin(), grid.end(), 0.0);
  const FiniteMetric metric = line_metric(grid);
  std::vector<int> universe(9);
  std::iota(universe.begin(), universe.end(), 0);

  double worst = 0.0;
  for (int m = 2; m <= max_m; ++m) {
    // Candidate placements: endpoints fixed at 0 and 8, interiors from 1..7.
    std::vector<int> interior(static_cast<std::size_t>(m - 2));
    std::function<void(int, int)> place = [&](int slot, int from) {
      if (slot == m - 2) {
        std::vector<int> candidates = {0};
        candidates.insert(candidates.end(), interior.begin(), interior.end());
        candidates.push_back(8);
        std::vector<double> coords(candidates.begin(), candidates.end());
        for (int n = 1; n <= max_n; ++n) {
          for_each_split(n, m, [&](const std::vector<int>& counts) {
            const Election e(metric, candidates, expand_actions(counts), coords);
            const DistortionReport r = worst_case_distortion(
                e, MechanismId::left_or_right, Objective::utility, universe, m - 1);
            worst = std::max(worst, r.worst_ratio);
          });
        }
        return;
      }
      for (int c = from; c <= 7; ++c) {
        interior[static_cast<std::size_t>(slot)] = c;
        place(slot + 1, c + 1);
      }
    };
    place(0, 1);
  }
  return worst;
}

double sweep_projection_random(MechanismId mech, Objective obj, int num_seeds,
                               std::uint64_t seed0) {
  double worst = 0.0;
  for (int s = 0; s < num_seeds; ++s) {
    const int m = 2 + s % 4;
    const int n = 1 + (s / 2) % 5;
    const int universe_size = m + s % 4;
    const MetricKind kind = s % 2 == 0 ? MetricKind::line : MetricKind::simplex;
    const InstanceBundle b = random_election(seed0 + static_cast<std::uint64_t>(s), m, n,
                                             universe_size, kind);
    const DistortionReport r =
        worst_case_distortion(b.election, mech, obj, b.universe, m - 1);
    worst = std::max(worst, r.worst_ratio);
  }
  return worst;
}

}  // namespace scv
