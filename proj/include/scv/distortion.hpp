#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "scv/election.hpp"
#include "scv/mechanisms.hpp"

namespace scv {

enum class Objective { cost, utility };

std::string to_string(Objective obj);
std::optional<Objective> parse_objective(std::string_view name);

// Result of a brute-force worst-case search over consistent location
// profiles drawn from a finite point universe.
struct DistortionReport {
  std::optional<MechanismId> mechanism;
  Objective objective = Objective::cost;
  // Max ratio over the searched profiles (cost: expected/opt, utility:
  // opt/expected). Conventions: 0/0 counts as 1; a positive benchmark
  // against a zero mechanism value sets `unbounded` instead.
  double worst_ratio = 0.0;
  bool unbounded = false;
  // True when no consistent profile exists over the universe.
  bool empty_profile_set = false;
  LocationProfile witness;
  std::optional<double> analytic_bound;
  long long profiles_searched = 0;
};

struct OracleOptions {
  long long budget = 10'000'000;  // max number of consistent profiles
  int threads = 1;
};

// Sum over outcome entries of prob * social_cost / social_utility.
double expected_cost(const Election& e, const Outcome& o, const LocationProfile& x);
double expected_utility(const Election& e, const Outcome& o, const LocationProfile& x);

// Exhaustive benchmark over all size-k committees; ties resolved to the
// lexicographically smallest eliminated set.
std::pair<double, Committee> opt_cost(const Election& e, const LocationProfile& x, int k);
std::pair<double, Committee> opt_utility(const Election& e, const LocationProfile& x, int k);

// Enumerates every location profile over `universe` consistent with the
// election (per-voter feasibility factorizes, so only consistent profiles
// are visited) and maximizes the distortion ratio of the fixed outcome.
// Throws std::runtime_error when the consistent-profile count exceeds
// options.budget.
DistortionReport worst_case_distortion(const Election& e, const Outcome& o, Objective obj,
                                       std::span<const int> universe, int k,
                                       const OracleOptions& options = {});

// Runs the mechanism on the election's actions, then searches as above.
DistortionReport worst_case_distortion(const Election& e, MechanismId mech, Objective obj,
                                       std::span<const int> universe, int k,
                                       const OracleOptions& options = {});

// Closed-form upper bound on expected_cost/opt_cost for an outcome over
// (m-1)-committees, anchored at the eliminated candidate y_star of an
// optimal committee:
//   1 + 2 sum_{y != y*} P(M_y) votes(y) d(y, M_y) / (votes(y*) d(y*, M_{y*})).
// Returns +inf when votes(y*) = 0 or d(y*, M_{y*}) = 0.
double cost_ratio_bound(const Election& e, const Outcome& o, int y_star);

// Closed-form lower bound on expected_utility/opt_utility, anchored at the
// eliminated candidate y_star of an optimal committee:
//   1 - sum_{y != y*} P(M_y) (1 + sum_z votes(z) d(z,y) /
//                                 (2 (n - votes(y*)) d(y,y*)))^{-1}.
// A summand with d(y, y*) = 0 contributes its full P(M_y). Throws
// std::domain_error when votes(y*) = n.
double utility_ratio_bound(const Election& e, const Outcome& o, int y_star);

// Worst-case ratio expression for inverse-power committee weights:
//   1 + 2 w_1 (w_2^{m-1} + ... + w_m^{m-1}) / (w_1^m + ... + w_m^m).
// Equals 3 - 2/m at any constant vector; below that everywhere else.
// Throws std::domain_error unless all weights are positive.
double power_weight_ratio(std::span<const double> weights);

// Known worst-case bound for the mechanism on this election's shape, when one
// applies (proportionality: m = 2 or simplex candidates only).
std::optional<double> analytic_bound(MechanismId mech, const Election& e, Objective obj);

}  // namespace scv
