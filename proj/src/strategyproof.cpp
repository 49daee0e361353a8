#include "scv/strategyproof.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "scv/io.hpp"

namespace scv {
namespace {

long long ipow_checked(long long base, int exp, long long cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::vector<int> decode_actions(long long index, int m, int n) {
  std::vector<int> actions(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    actions[static_cast<std::size_t>(i)] = static_cast<int>(index % m);
    index /= m;
  }
  return actions;
}

}  // namespace

std::string to_csv_row(const Violation& v) {
  std::ostringstream out;
  out << v.voter << "," << to_string(v.objective) << ","
      << v.profile.locations[static_cast<std::size_t>(v.voter)] << "," << v.truthful_action << ","
      << v.better_action << "," << format_real(v.truthful_value) << ","
      << format_real(v.deviant_value) << ",\"" << to_string(v.profile) << "\"";
  return out.str();
}

double voter_expected_value(const Election& e, const Outcome& o, int point, Objective obj) {
  const int m = e.num_candidates();
  double total = 0.0;
  for (const OutcomeEntry& entry : o.entries) {
    if (entry.prob == 0.0) continue;
    const std::vector<int> side = obj == Objective::cost
                                      ? committee_winners(entry.committee, m)
                                      : entry.committee.eliminated;
    std::vector<int> points;
    points.reserve(side.size());
    for (int j : side) points.push_back(e.candidate_point(j));
    total += entry.prob * e.metric().d_to_set(point, points);
  }
  return total;
}

std::vector<Violation> audit_strategyproofness(MechanismId mech, const Election& tmpl,
                                               std::span<const int> universe, Objective obj,
                                               int k, const AuditOptions& options) {
  const int m = tmpl.num_candidates();
  const int n = tmpl.num_voters();
  for (int u : universe) {
    if (u < 0 || u >= tmpl.metric().size()) {
      throw std::invalid_argument("universe point out of range");
    }
  }

  const long long profiles = ipow_checked(m, n, options.budget);
  const long long checks =
      profiles * static_cast<long long>(n) * static_cast<long long>(universe.size()) * m;
  if (profiles > options.budget || checks > options.budget) {
    throw std::runtime_error("audit grid exceeds budget of " + std::to_string(options.budget) +
                             " checks");
  }

  // One outcome per full action profile; every (report, others) pair below
  // is a lookup into this table.
  std::vector<Outcome> outcomes(static_cast<std::size_t>(profiles));
  for (long long ap = 0; ap < profiles; ++ap) {
    outcomes[static_cast<std::size_t>(ap)] =
        run_mechanism(mech, tmpl.with_actions(decode_actions(ap, m, n)), k);
  }

  std::vector<long long> stride(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    stride[static_cast<std::size_t>(i)] = ipow_checked(m, i, options.budget);
  }

  std::vector<Violation> violations;
  const bool cost = obj == Objective::cost;

  for (int voter = 0; voter < n; ++voter) {
    for (int location : universe) {
      const std::vector<int> truthful = nearest_candidates(tmpl, location);
      // Enumerate the other voters' reports through full profiles that fix
      // digit `voter` to 0, then displace that digit.
      for (long long ap = 0; ap < profiles; ++ap) {
        if ((ap / stride[static_cast<std::size_t>(voter)]) % m != 0) continue;
        for (int t : truthful) {
          const long long truth_index = ap + t * stride[static_cast<std::size_t>(voter)];
          const double truth_value = voter_expected_value(
              tmpl, outcomes[static_cast<std::size_t>(truth_index)], location, obj);
          for (int alt = 0; alt < m; ++alt) {
            if (alt == t) continue;
            const long long alt_index = ap + alt * stride[static_cast<std::size_t>(voter)];
            const double alt_value = voter_expected_value(
                tmpl, outcomes[static_cast<std::size_t>(alt_index)], location, obj);
            const bool beaten = cost ? alt_value < truth_value - kMetricEps
                                     : alt_value > truth_value + kMetricEps;
            if (!beaten) continue;
            Violation v;
            v.voter = voter;
            v.truthful_action = t;
            v.better_action = alt;
            v.truthful_value = truth_value;
            v.deviant_value = alt_value;
            v.objective = obj;
            const std::vector<int> others = decode_actions(ap, m, n);
            v.other_actions.reserve(static_cast<std::size_t>(n) - 1);
            v.profile.locations.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
              if (i == voter) {
                v.profile.locations[static_cast<std::size_t>(i)] = location;
              } else {
                // Others sit on their reported candidate, which makes any
                // report combination a truthful one.
                v.other_actions.push_back(others[static_cast<std::size_t>(i)]);
                v.profile.locations[static_cast<std::size_t>(i)] =
                    tmpl.candidate_point(others[static_cast<std::size_t>(i)]);
              }
            }
            violations.push_back(std::move(v));
            if (violations.size() >= options.max_violations) return violations;
          }
        }
      }
    }
  }
  return violations;
}

bool replay_violation(MechanismId mech, const Election& tmpl, const Violation& v, int k) {
  const int n = tmpl.num_voters();
  std::vector<int> truth_actions(static_cast<std::size_t>(n));
  std::vector<int> alt_actions(static_cast<std::size_t>(n));
  std::size_t other = 0;
  for (int i = 0; i < n; ++i) {
    if (i == v.voter) {
      truth_actions[static_cast<std::size_t>(i)] = v.truthful_action;
      alt_actions[static_cast<std::size_t>(i)] = v.better_action;
    } else {
      truth_actions[static_cast<std::size_t>(i)] = v.other_actions[other];
      alt_actions[static_cast<std::size_t>(i)] = v.other_actions[other];
      ++other;
    }
  }
  const int location = v.profile.locations[static_cast<std::size_t>(v.voter)];

  // The claimed truthful action must really be a nearest candidate.
  const std::vector<int> nearest = nearest_candidates(tmpl, location);
  bool truthful_ok = false;
  for (int j : nearest) truthful_ok = truthful_ok || j == v.truthful_action;
  if (!truthful_ok) return false;

  const Outcome truth_outcome = run_mechanism(mech, tmpl.with_actions(truth_actions), k);
  const Outcome alt_outcome = run_mechanism(mech, tmpl.with_actions(alt_actions), k);
  const double truth_value = voter_expected_value(tmpl, truth_outcome, location, v.objective);
  const double alt_value = voter_expected_value(tmpl, alt_outcome, location, v.objective);
  if (std::abs(truth_value - v.truthful_value) > 1e-9) return false;
  if (std::abs(alt_value - v.deviant_value) > 1e-9) return false;
  return v.objective == Objective::cost ? alt_value < truth_value - kMetricEps
                                        : alt_value > truth_value + kMetricEps;
}

bool audit_proportionality_monotonicity(const Election& e, int voter) {
  const int m = e.num_candidates();
  if (voter < 0 || voter >= e.num_voters()) {
    throw std::invalid_argument("voter index out of range");
  }
  const int y = e.action(voter);
  const Outcome before = proportionality(e);
  for (int alt = 0; alt < m; ++alt) {
    if (alt == y) continue;
    std::vector<int> actions = e.actions();
    actions[static_cast<std::size_t>(voter)] = alt;
    const Outcome after = proportionality(e.with_actions(std::move(actions)));
    for (int z = 0; z < m; ++z) {
      const double pb = before.entries[static_cast<std::size_t>(z)].prob;
      const double pa = after.entries[static_cast<std::size_t>(z)].prob;
      if (z == y) {
        if (!(pa > pb)) return false;  // dropping my vote must raise P(eliminate y)
      } else if (z == alt) {
        if (!(pa < pb)) return false;
      } else if (pa != pb) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace scv
