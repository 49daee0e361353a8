#include "scv/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace scv {
namespace {

// Deterministic helpers on top of mt19937_64 (the std distributions are not
// bit-stable across standard libraries).
double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::vector<int> iota_universe(int count) {
  std::vector<int> u(static_cast<std::size_t>(count));
  std::iota(u.begin(), u.end(), 0);
  return u;
}

}  // namespace

std::optional<MetricKind> parse_metric_kind(std::string_view name) {
  if (name == "line") return MetricKind::line;
  if (name == "simplex") return MetricKind::simplex;
  if (name == "random_metric" || name == "random") return MetricKind::random_metric;
  return std::nullopt;
}

InstanceBundle line_lower_bound_instance(int m, double L) {
  if (m < 2) throw std::invalid_argument("need at least two candidates");
  if (L <= 4.0) throw std::invalid_argument("spacing L must exceed 4");
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(m) + 1);
  coords.push_back(0.0);
  coords.push_back(2.0);
  for (int j = 2; j < m; ++j) coords.push_back((j - 1) * L);
  std::vector<double> points = coords;
  points.push_back(1.0);  // voter slot between the two near candidates

  std::vector<int> candidates(static_cast<std::size_t>(m));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::vector<int> actions(static_cast<std::size_t>(m));
  std::iota(actions.begin(), actions.end(), 0);  // one vote per candidate

  InstanceBundle bundle{
      Election(line_metric(points), candidates, actions, coords),
      iota_universe(m + 1),
      "",
      {}};

  // The two profiles that force ratio 3 against whichever near candidate is kept.
  const int slot = m;  // point id of coordinate 1
  LocationProfile on_right;  // (1, 2, L, ...)
  LocationProfile on_left;   // (0, 1, L, ...)
  on_right.locations = candidates;
  on_right.locations[0] = slot;
  on_left.locations = candidates;
  on_left.locations[1] = slot;
  bundle.witnesses = {on_left, on_right};

  std::ostringstream notes;
  notes << "line election, candidates at 0,2";
  for (int j = 2; j < m; ++j) notes << "," << (j - 1) * L;
  notes << "; one vote each; voter slot at 1";
  bundle.notes = notes.str();
  return bundle;
}

InstanceBundle simplex_lower_bound_instance(int m) {
  if (m < 2) throw std::invalid_argument("need at least two candidates");
  const int points = m + 1;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(points));
  for (int j = 0; j < m; ++j) labels.push_back("y" + std::to_string(j + 1));
  labels.push_back("center");
  std::vector<double> dist(static_cast<std::size_t>(points) * points, 0.0);
  for (int p = 0; p < points; ++p) {
    for (int q = 0; q < points; ++q) {
      if (p == q) continue;
      const bool center = p == m || q == m;
      dist[static_cast<std::size_t>(p) * points + q] = center ? 1.0 : 2.0;
    }
  }

  std::vector<int> candidates(static_cast<std::size_t>(m));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::vector<int> actions = candidates;

  InstanceBundle bundle{
      Election(FiniteMetric(std::move(labels), std::move(dist)), candidates, actions),
      iota_universe(points),
      "simplex candidates pairwise at 2 plus a point at 1 from all; one vote each",
      {}};

  // Last voter moved to the center: the committee keeping her candidate is
  // optimal, every other one costs 3.
  LocationProfile witness;
  witness.locations = candidates;
  witness.locations.back() = m;
  bundle.witnesses = {witness};
  return bundle;
}

InstanceBundle utility_lower_bound_instance(int m, double /*far_spacing*/) {
  if (m < 2) throw std::invalid_argument("need at least two candidates");
  std::vector<double> coords(static_cast<std::size_t>(m), 0.0);
  coords[1] = 2.0;  // extra candidates stay co-located at 0
  std::vector<double> points = coords;
  points.push_back(1.0);
  const int slot = m;  // point id of coordinate 1

  std::vector<int> candidates(static_cast<std::size_t>(m));
  std::iota(candidates.begin(), candidates.end(), 0);
  const std::vector<int> actions = {0, 1};

  InstanceBundle bundle{
      Election(line_metric(points), candidates, actions, coords),
      iota_universe(m + 1),
      "candidates at 0 and 2 (extras co-located at 0); actions (y1,y2); "
      "eliminating y2 loses ratio 3 at (1,2), eliminating y1 at (0,1), "
      "a half-half mix over the two loses 1.5",
      {}};

  LocationProfile kills_elim_y2;  // (1, 2)
  kills_elim_y2.locations = {slot, 1};
  LocationProfile kills_elim_y1;  // (0, 1)
  kills_elim_y1.locations = {0, slot};
  bundle.witnesses = {kills_elim_y1, kills_elim_y2};
  return bundle;
}

InstanceBundle random_election(std::uint64_t seed, int m, int n, int universe_size,
                               MetricKind kind) {
  if (m < 2) throw std::invalid_argument("need at least two candidates");
  if (n < 1) throw std::invalid_argument("need at least one voter");
  if (universe_size < m) throw std::invalid_argument("universe must fit all candidates");
  std::mt19937_64 rng(seed);

  FiniteMetric metric;
  std::optional<std::vector<double>> coords;
  const int P = universe_size;

  switch (kind) {
    case MetricKind::line: {
      std::vector<double> positions(static_cast<std::size_t>(P));
      for (double& x : positions) x = 10.0 * unit_real(rng);
      metric = line_metric(positions);
      coords = std::vector<double>(positions.begin(), positions.begin() + m);
      break;
    }
    case MetricKind::simplex: {
      // Candidates pairwise at 2; extras at radius r in [1,2] from every
      // candidate and at r_a + r_b from each other.
      std::vector<double> radius(static_cast<std::size_t>(P - m));
      for (double& r : radius) r = 1.0 + unit_real(rng);
      std::vector<std::string> labels;
      std::vector<double> dist(static_cast<std::size_t>(P) * P, 0.0);
      for (int p = 0; p < P; ++p) labels.push_back("p" + std::to_string(p));
      auto r_of = [&](int p) { return radius[static_cast<std::size_t>(p - m)]; };
      for (int p = 0; p < P; ++p) {
        for (int q = 0; q < P; ++q) {
          if (p == q) continue;
          double d = 0.0;
          if (p < m && q < m) {
            d = 2.0;
          } else if (p < m) {
            d = r_of(q);
          } else if (q < m) {
            d = r_of(p);
          } else {
            d = r_of(p) + r_of(q);
          }
          dist[static_cast<std::size_t>(p) * P + q] = d;
        }
      }
      metric = FiniteMetric(std::move(labels), std::move(dist));
      break;
    }
    case MetricKind::random_metric: {
      std::vector<double> dist(static_cast<std::size_t>(P) * P, 0.0);
      for (int p = 0; p < P; ++p) {
        for (int q = p + 1; q < P; ++q) {
          const double d = 1.0 + 9.0 * unit_real(rng);
          dist[static_cast<std::size_t>(p) * P + q] = d;
          dist[static_cast<std::size_t>(q) * P + p] = d;
        }
      }
      // Shortest-path completion repairs the triangle inequality.
      for (int r = 0; r < P; ++r) {
        for (int p = 0; p < P; ++p) {
          for (int q = 0; q < P; ++q) {
            const double via = dist[static_cast<std::size_t>(p) * P + r] +
                               dist[static_cast<std::size_t>(r) * P + q];
            if (via < dist[static_cast<std::size_t>(p) * P + q]) {
              dist[static_cast<std::size_t>(p) * P + q] = via;
            }
          }
        }
      }
      std::vector<std::string> labels;
      for (int p = 0; p < P; ++p) labels.push_back("p" + std::to_string(p));
      metric = FiniteMetric(std::move(labels), std::move(dist));
      break;
    }
  }

  std::vector<int> candidates(static_cast<std::size_t>(m));
  std::iota(candidates.begin(), candidates.end(), 0);

  // Place each voter on a universe point, then vote a nearest candidate:
  // the consistent-profile set is non-empty by construction.
  std::vector<int> actions(static_cast<std::size_t>(n));
  {
    Election probe(metric, candidates, std::vector<int>(static_cast<std::size_t>(n), 0), coords);
    for (int i = 0; i < n; ++i) {
      const int point = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(P)));
      const std::vector<int> nearest = nearest_candidates(probe, point);
      actions[static_cast<std::size_t>(i)] =
          nearest[static_cast<std::size_t>(bounded(rng, nearest.size()))];
    }
  }

  std::ostringstream notes;
  notes << "random election (seed " << seed << ", m=" << m << ", n=" << n << ", points=" << P
        << ")";
  return InstanceBundle{Election(std::move(metric), candidates, actions, coords),
                        iota_universe(P), notes.str(), {}};
}

}  // namespace scv
