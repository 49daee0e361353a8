#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scv/distortion.hpp"
#include "scv/election.hpp"

namespace scv {

// One summary row: a known worst-case bound against the measured worst ratio.
// relation '=' asserts |measured - claimed| <= tol, '<' asserts
// measured <= claimed + tol.
struct TableRow {
  std::string objective;
  std::string setting;
  std::string mechanism;
  int m = 0;
  double claimed = 0.0;
  double measured = 0.0;
  char relation = '=';
  bool pass = false;
};

// Runs the canonical experiment battery (lower-bound instances through their
// matched mechanisms plus the bounded sweeps) and compares each measured
// worst ratio with its known bound at tolerance 1e-6.
std::vector<TableRow> reproduce_table();

std::string table_to_csv(const std::vector<TableRow>& rows);

// Inverse-CDF draw over the outcome's canonical committee order;
// deterministic per seed.
Committee sample_outcome(const Outcome& o, std::uint64_t seed);

// Shared sweep drivers (used by reproduce_table and the acceptance suite).
// Each returns the max oracle worst ratio over its family.

// proportionality, utility objective, two candidates at {0,2} on a quarter-
// step grid of 12 points, all vote splits for n = 1..max_n.
double sweep_two_candidate_proportionality(int max_n);

// proportionality, utility objective, simplex candidates (side 2) plus the
// equidistant center, every action multiset for n = 1..max_n.
double sweep_simplex_proportionality(int m, int max_n);

// left_or_right, utility objective, candidates on an L/8 grid (L = 8) with
// endpoints fixed, every candidate placement and action multiset, n = 1..max_n.
double sweep_left_or_right(int max_m, int max_n);

// min_projection (cost) or max_projection (utility) over seeded random
// elections, k = m-1; every ratio must stay under 3.
double sweep_projection_random(MechanismId mech, Objective obj, int num_seeds,
                               std::uint64_t seed0);

}  // namespace scv
