#include "scv/election.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scv {

bool operator==(const Committee& a, const Committee& b) { return a.eliminated == b.eliminated; }

bool operator<(const Committee& a, const Committee& b) {
  return std::lexicographical_compare(a.eliminated.begin(), a.eliminated.end(),
                                      b.eliminated.begin(), b.eliminated.end());
}

std::string to_string(const Committee& c) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < c.eliminated.size(); ++i) {
    if (i > 0) out << ",";
    out << c.eliminated[i];
  }
  out << "}";
  return out.str();
}

void validate_committee(const Committee& c, int m) {
  if (c.eliminated.empty()) throw std::invalid_argument("committee must eliminate someone (k <= m-1)");
  if (static_cast<int>(c.eliminated.size()) >= m) {
    throw std::invalid_argument("committee must keep at least one winner (k >= 1)");
  }
  for (std::size_t i = 0; i < c.eliminated.size(); ++i) {
    const int y = c.eliminated[i];
    if (y < 0 || y >= m) throw std::invalid_argument("eliminated candidate index out of range");
    if (i > 0 && c.eliminated[i - 1] >= y) {
      throw std::invalid_argument("eliminated set must be sorted and distinct");
    }
  }
}

std::vector<Committee> enumerate_committees(int m, int k) {
  if (k < 1 || k > m - 1) throw std::invalid_argument("committee size k must satisfy 1 <= k <= m-1");
  const int e = m - k;
  std::vector<Committee> all;
  std::vector<int> cur(static_cast<std::size_t>(e));
  // Lexicographic subsets of size e from {0..m-1}.
  for (int i = 0; i < e; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    all.push_back(Committee{cur});
    int i = e - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - e + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < e; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return all;
}

std::vector<int> committee_winners(const Committee& c, int m) {
  std::vector<int> winners;
  winners.reserve(static_cast<std::size_t>(m) - c.eliminated.size());
  std::size_t e = 0;
  for (int j = 0; j < m; ++j) {
    if (e < c.eliminated.size() && c.eliminated[e] == j) {
      ++e;
      continue;
    }
    winners.push_back(j);
  }
  return winners;
}

Election::Election(FiniteMetric metric, std::vector<int> candidates, std::vector<int> actions,
                   std::optional<std::vector<double>> coords)
    : metric_(std::move(metric)),
      candidates_(std::move(candidates)),
      actions_(std::move(actions)),
      coords_(std::move(coords)) {
  const int m = num_candidates();
  if (m < 2) throw std::invalid_argument("election needs at least two candidates");
  if (actions_.empty()) throw std::invalid_argument("election needs at least one voter");
  for (int point : candidates_) {
    if (point < 0 || point >= metric_.size()) {
      throw std::invalid_argument("candidate point id out of range");
    }
  }
  for (int a : actions_) {
    if (a < 0 || a >= m) throw std::invalid_argument("action indexes a missing candidate");
  }
  if (coords_ && static_cast<int>(coords_->size()) != m) {
    throw std::invalid_argument("line coordinates must cover every candidate");
  }
}

Election Election::with_actions(std::vector<int> actions) const {
  return Election(metric_, candidates_, std::move(actions), coords_);
}

bool operator==(const LocationProfile& a, const LocationProfile& b) {
  return a.locations == b.locations;
}

std::string to_string(const LocationProfile& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.locations.size(); ++i) {
    if (i > 0) out << ",";
    out << x.locations[i];
  }
  out << ")";
  return out.str();
}

void check_outcome(const Outcome& o, int m) {
  if (o.entries.empty()) throw std::invalid_argument("outcome has no committees");
  const std::size_t esize = o.entries.front().committee.eliminated.size();
  double total = 0.0;
  for (std::size_t i = 0; i < o.entries.size(); ++i) {
    const OutcomeEntry& entry = o.entries[i];
    validate_committee(entry.committee, m);
    if (entry.committee.eliminated.size() != esize) {
      throw std::invalid_argument("outcome mixes committee sizes");
    }
    if (i > 0 && !(o.entries[i - 1].committee < entry.committee)) {
      throw std::invalid_argument("outcome entries must be sorted by committee");
    }
    if (entry.prob < -kProbEps || entry.prob > 1.0 + kProbEps) {
      throw std::invalid_argument("outcome probability outside [0,1]");
    }
    if (entry.exact && std::abs(to_double(*entry.exact) - entry.prob) > 1e-9) {
      throw std::invalid_argument("exact fraction disagrees with probability");
    }
    total += entry.prob;
  }
  if (std::abs(total - 1.0) > kProbEps) {
    throw std::invalid_argument("outcome probabilities sum to " + std::to_string(total));
  }
}

std::vector<int> nearest_candidates(const Election& e, int point) {
  const int m = e.num_candidates();
  double best = e.metric().d(point, e.candidate_point(0));
  for (int j = 1; j < m; ++j) {
    best = std::min(best, e.metric().d(point, e.candidate_point(j)));
  }
  std::vector<int> result;
  for (int j = 0; j < m; ++j) {
    if (e.metric().d(point, e.candidate_point(j)) <= best + kMetricEps) result.push_back(j);
  }
  return result;
}

bool is_consistent(const Election& e, const LocationProfile& x) {
  if (static_cast<int>(x.locations.size()) != e.num_voters()) {
    throw std::invalid_argument("location profile length differs from voter count");
  }
  const int m = e.num_candidates();
  for (int i = 0; i < e.num_voters(); ++i) {
    const int p = x.locations[static_cast<std::size_t>(i)];
    const double voted = e.metric().d(p, e.candidate_point(e.action(i)));
    for (int j = 0; j < m; ++j) {
      if (voted > e.metric().d(p, e.candidate_point(j)) + kMetricEps) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> committee_points(const Election& e, std::span<const int> candidate_indices) {
  std::vector<int> points;
  points.reserve(candidate_indices.size());
  for (int j : candidate_indices) points.push_back(e.candidate_point(j));
  return points;
}

}  // namespace

double social_cost(const Election& e, const Committee& w, const LocationProfile& x) {
  validate_committee(w, e.num_candidates());
  const std::vector<int> winners = committee_winners(w, e.num_candidates());
  const std::vector<int> points = committee_points(e, winners);
  double total = 0.0;
  for (int p : x.locations) total += e.metric().d_to_set(p, points);
  return total;
}

double social_utility(const Election& e, const Committee& w, const LocationProfile& x) {
  validate_committee(w, e.num_candidates());
  const std::vector<int> points = committee_points(e, w.eliminated);
  double total = 0.0;
  for (int p : x.locations) total += e.metric().d_to_set(p, points);
  return total;
}

double projection_distance_set(const Election& e, std::span<const int> winners) {
  if (winners.empty()) throw std::invalid_argument("projection distance of an empty set");
  const std::vector<int> points = committee_points(e, winners);
  double total = 0.0;
  for (int i = 0; i < e.num_voters(); ++i) {
    total += e.metric().d_to_set(e.candidate_point(e.action(i)), points);
  }
  return total;
}

double projection_distance_point(const Election& e, int y) {
  if (y < 0 || y >= e.num_candidates()) throw std::invalid_argument("candidate index out of range");
  double total = 0.0;
  for (int i = 0; i < e.num_voters(); ++i) {
    total += e.metric().d(e.candidate_point(e.action(i)), e.candidate_point(y));
  }
  return total;
}

std::vector<int> tally(const Election& e) {
  std::vector<int> counts(static_cast<std::size_t>(e.num_candidates()), 0);
  for (int i = 0; i < e.num_voters(); ++i) ++counts[static_cast<std::size_t>(e.action(i))];
  return counts;
}

}  // namespace scv
