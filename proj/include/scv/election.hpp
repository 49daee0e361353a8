#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scv/metric.hpp"
#include "scv/rational.hpp"

namespace scv {

// A committee of candidates, identified by the set of eliminated candidate
// indices (sorted ascending, non-empty). Committee size k = m - |eliminated|.
struct Committee {
  std::vector<int> eliminated;
};

bool operator==(const Committee& a, const Committee& b);
bool operator<(const Committee& a, const Committee& b);  // lexicographic on eliminated
std::string to_string(const Committee& c);

// Throws std::invalid_argument unless eliminated is sorted, distinct,
// within [0, m) and 1 <= |eliminated| <= m - 1.
void validate_committee(const Committee& c, int m);

// All committees of size k over m candidates, in lexicographic order of the
// eliminated index set. This ordering is the canonical one everywhere
// (tie-breaking, outcome entries, sampling).
std::vector<Committee> enumerate_committees(int m, int k);

std::vector<int> committee_winners(const Committee& c, int m);

// An election: finite metric, candidate points, and one submitted favorite
// candidate per voter. Voter locations stay hidden. Immutable.
class Election {
 public:
  // candidates: point id per candidate (duplicates permitted).
  // actions: candidate index per voter.
  // coords: optional per-candidate line coordinate, for line-embedded
  // elections (required by the left-or-right mechanism).
  Election(FiniteMetric metric, std::vector<int> candidates, std::vector<int> actions,
           std::optional<std::vector<double>> coords = std::nullopt);

  const FiniteMetric& metric() const { return metric_; }
  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return static_cast<int>(actions_.size()); }
  int candidate_point(int j) const { return candidates_[static_cast<std::size_t>(j)]; }
  int action(int i) const { return actions_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& candidates() const { return candidates_; }
  const std::vector<int>& actions() const { return actions_; }
  const std::optional<std::vector<double>>& line_coords() const { return coords_; }

  // Distance between the points of candidates j and l.
  double cand_dist(int j, int l) const {
    return metric_.d(candidate_point(j), candidate_point(l));
  }

  // Election with the same metric/candidates and different actions.
  Election with_actions(std::vector<int> actions) const;

 private:
  FiniteMetric metric_;
  std::vector<int> candidates_;
  std::vector<int> actions_;
  std::optional<std::vector<double>> coords_;
};

// One metric point per voter.
struct LocationProfile {
  std::vector<int> locations;
};

bool operator==(const LocationProfile& a, const LocationProfile& b);
std::string to_string(const LocationProfile& x);

// A probability distribution over committees (all of the same size),
// entries sorted by committee. `exact` mirrors `prob` when the mechanism
// could compute the probability as an exact fraction.
struct OutcomeEntry {
  Committee committee;
  double prob = 0.0;
  std::optional<Rational> exact;
};

struct Outcome {
  std::vector<OutcomeEntry> entries;
  // Set by left_or_right when all candidates coincide (L = 0).
  bool degenerate = false;
  // Set by power_proportionality when some candidate had zero votes or zero
  // distance to the rest, so the probabilities are the limit of the weight
  // formula rather than the formula itself.
  bool limit_convention = false;
};

// Throws std::invalid_argument unless entries are sorted by committee, share
// one committee size, have probabilities in [0,1] summing to 1 within
// kProbEps, and each committee validates against m.
void check_outcome(const Outcome& o, int m);

// Candidate indices minimizing d(x, candidate) within kMetricEps.
std::vector<int> nearest_candidates(const Election& e, int point);

// True iff every voter's action is one of her nearest candidates
// (within kMetricEps).
bool is_consistent(const Election& e, const LocationProfile& x);

// Sum over voters of the distance to the nearest winner.
double social_cost(const Election& e, const Committee& w, const LocationProfile& x);

// Sum over voters of the distance to the eliminated (loser) set.
double social_utility(const Election& e, const Committee& w, const LocationProfile& x);

// Sum over voters of d(point(a_i), W) for a set W of candidate indices.
double projection_distance_set(const Election& e, std::span<const int> winners);

// Sum over voters of d(point(a_i), point(y)).
double projection_distance_point(const Election& e, int y);

// Vote count per candidate; counts sum to the number of voters.
std::vector<int> tally(const Election& e);

}  // namespace scv
