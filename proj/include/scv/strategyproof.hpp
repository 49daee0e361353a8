#pragma once

#include <span>
#include <vector>

#include "scv/distortion.hpp"
#include "scv/election.hpp"
#include "scv/mechanisms.hpp"

namespace scv {

// A profitable unilateral misreport: with the voter at profile.locations[voter]
// and the other voters reporting as in `profile` (each sits on her reported
// candidate's point), reporting better_action beats the truthful
// truthful_action by more than kMetricEps.
struct Violation {
  int voter = -1;
  LocationProfile profile;
  std::vector<int> other_actions;  // reports of the other voters, in voter order
  int truthful_action = -1;
  int better_action = -1;
  double truthful_value = 0.0;
  double deviant_value = 0.0;
  Objective objective = Objective::cost;
};

std::string to_csv_row(const Violation& v);

struct AuditOptions {
  long long budget = 20'000'000;   // max (location, report, deviation) checks
  std::size_t max_violations = 1000;
};

// The voter's expected cost (distance to winners) or utility (distance to
// losers) at `point` under the outcome.
double voter_expected_value(const Election& e, const Outcome& o, int point, Objective obj);

// Exhaustive unilateral-deviation audit. For every voter slot, every
// location in `universe`, every nearest-candidate truthful report, every
// alternative report, and every combination of the other voters' reports,
// checks that truth-telling is (weakly) optimal. The template election
// supplies metric, candidates and voter count; its actions are ignored.
// Empty result == strategy-proof over the swept grid.
std::vector<Violation> audit_strategyproofness(MechanismId mech, const Election& tmpl,
                                               std::span<const int> universe, Objective obj,
                                               int k, const AuditOptions& options = {});

// Recomputes both expected values of a reported violation from scratch;
// true iff the strict improvement reproduces.
bool replay_violation(MechanismId mech, const Election& tmpl, const Violation& v, int k);

// Checks, on the concrete election, that switching `voter`'s report from her
// current action y to any y' raises P(eliminate y), lowers P(eliminate y'),
// and leaves every other committee probability unchanged under the
// proportionality mechanism.
bool audit_proportionality_monotonicity(const Election& e, int voter);

}  // namespace scv
