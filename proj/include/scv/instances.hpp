#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scv/election.hpp"

namespace scv {

enum class MetricKind { line, simplex, random_metric };

std::optional<MetricKind> parse_metric_kind(std::string_view name);

// A generated election plus the finite point universe the worst cases of its
// family live on, with the known witness profiles spelled out.
struct InstanceBundle {
  Election election;
  std::vector<int> universe;  // point ids, includes all voter slots
  std::string notes;
  std::vector<LocationProfile> witnesses;
};

// Line election: candidates at 0, 2, L, 2L, ..., (m-2)L, one vote per
// candidate, plus a voter slot at coordinate 1. Worst case for the
// cost objective: ratio 3 at (0,1,L,...) / (1,2,L,...).
// Requires m >= 2, L > 4.
InstanceBundle line_lower_bound_instance(int m, double L);

// m candidates pairwise at distance 2 plus one point at distance 1 from all
// of them; one vote per candidate. Worst case for randomized cost: 3 - 2/m.
// Requires m >= 2.
InstanceBundle simplex_lower_bound_instance(int m);

// Utility-objective worst case: candidates at 0 and 2 (any further
// candidates co-located at 0), two voters with actions (y1, y2), voter
// slots {0, 1, 2}. Eliminating y2 hits ratio 3 at profile (1, 2); eliminating
// y1 hits 3 at (0, 1); a (1/2,1/2) mix over the two hits 1.5.
// `far_spacing` is accepted for signature parity with the cost-side builder
// and ignored: spreading candidates out provably destroys these ratios.
InstanceBundle utility_lower_bound_instance(int m, double far_spacing = 0.0);

// Seed-deterministic random election for property sweeps. Voters are placed
// on universe points first and then vote a nearest candidate, so the
// consistent-profile set is never empty. random_metric draws a symmetric
// matrix and repairs it to a metric via all-pairs shortest paths.
InstanceBundle random_election(std::uint64_t seed, int m, int n, int universe_size,
                               MetricKind kind);

}  // namespace scv
