#include "scv/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scv {
namespace {

Outcome point_mass(Committee c) {
  Outcome o;
  o.entries.push_back({std::move(c), 1.0, make_rational(1, 1)});
  return o;
}

// d(y, M_y): distance from candidate y's point to the nearest other candidate.
double dist_to_rest(const Election& e, int y) {
  const int m = e.num_candidates();
  double best = std::numeric_limits<double>::infinity();
  for (int z = 0; z < m; ++z) {
    if (z == y) continue;
    best = std::min(best, e.cand_dist(y, z));
  }
  return best;
}

#if defined(__SIZEOF_INT128__)

using uint128 = unsigned __int128;

constexpr uint128 kExactCap = (uint128{1} << 126);

bool checked_mul(uint128 a, uint128 b, uint128& out) {
  if (a != 0 && b > kExactCap / a) return false;
  out = a * b;
  return out <= kExactCap;
}

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Exact P(M_y) = prod_{z != y} base_z^m / sum_w prod_{z != w} base_z^m,
// attempted only when every base is a (positive) integer. Returns false on
// 128-bit overflow; callers then keep decimal probabilities only.
bool exact_power_fractions(const std::vector<std::int64_t>& bases, int m,
                           std::vector<Rational>& out) {
  const std::size_t count = bases.size();
  std::vector<uint128> powers(count);
  for (std::size_t y = 0; y < count; ++y) {
    uint128 p = 1;
    for (int rep = 0; rep < m; ++rep) {
      if (!checked_mul(p, static_cast<uint128>(bases[y]), p)) return false;
    }
    powers[y] = p;
  }
  std::vector<uint128> numerators(count);
  uint128 den = 0;
  for (std::size_t y = 0; y < count; ++y) {
    uint128 num = 1;
    for (std::size_t z = 0; z < count; ++z) {
      if (z == y) continue;
      if (!checked_mul(num, powers[z], num)) return false;
    }
    numerators[y] = num;
    if (den + num < den || den + num > kExactCap) return false;
    den += num;
  }
  out.resize(count);
  for (std::size_t y = 0; y < count; ++y) {
    const uint128 g = gcd128(numerators[y], den);
    const uint128 rn = numerators[y] / g;
    const uint128 rd = den / g;
    if (rn > static_cast<uint128>(std::numeric_limits<std::int64_t>::max()) ||
        rd > static_cast<uint128>(std::numeric_limits<std::int64_t>::max())) {
      return false;
    }
    out[y] = Rational{static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd)};
  }
  return true;
}

#endif  // __SIZEOF_INT128__

}  // namespace

std::string to_string(MechanismId id) {
  switch (id) {
    case MechanismId::min_projection:
      return "min_projection";
    case MechanismId::power_proportionality:
      return "power_proportionality";
    case MechanismId::max_projection:
      return "max_projection";
    case MechanismId::proportionality:
      return "proportionality";
    case MechanismId::left_or_right:
      return "left_or_right";
  }
  return "unknown";
}

std::optional<MechanismId> parse_mechanism(std::string_view name) {
  for (MechanismId id :
       {MechanismId::min_projection, MechanismId::power_proportionality,
        MechanismId::max_projection, MechanismId::proportionality, MechanismId::left_or_right}) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

Outcome min_projection(const Election& e, int k) {
  const int m = e.num_candidates();
  const std::vector<Committee> committees = enumerate_committees(m, k);
  const Committee* best = nullptr;
  double best_pd = std::numeric_limits<double>::infinity();
  for (const Committee& c : committees) {
    const std::vector<int> winners = committee_winners(c, m);
    const double pd = projection_distance_set(e, winners);
    if (pd < best_pd) {  // strict: keeps the lexicographically first minimizer
      best_pd = pd;
      best = &c;
    }
  }
  return point_mass(*best);
}

Outcome max_projection(const Election& e, int k) {
  const int m = e.num_candidates();
  const std::vector<Committee> committees = enumerate_committees(m, k);
  const Committee* best = nullptr;
  double best_pd = -1.0;
  for (const Committee& c : committees) {
    const double pd = projection_distance_set(e, c.eliminated);
    if (pd > best_pd) {
      best_pd = pd;
      best = &c;
    }
  }
  return point_mass(*best);
}

Outcome power_proportionality(const Election& e) {
  const int m = e.num_candidates();
  const std::vector<int> counts = tally(e);
  std::vector<double> base(static_cast<std::size_t>(m));
  std::vector<int> infinite;  // zero votes or zero distance to the rest
  for (int y = 0; y < m; ++y) {
    base[static_cast<std::size_t>(y)] = counts[static_cast<std::size_t>(y)] * dist_to_rest(e, y);
    if (base[static_cast<std::size_t>(y)] <= kMetricEps) infinite.push_back(y);
  }

  Outcome o;
  o.entries.resize(static_cast<std::size_t>(m));
  for (int y = 0; y < m; ++y) o.entries[static_cast<std::size_t>(y)].committee = Committee{{y}};

  if (!infinite.empty()) {
    // Limit of the weight formula: infinite-weight candidates split the mass.
    o.limit_convention = true;
    const auto share = make_rational(1, static_cast<std::int64_t>(infinite.size()));
    for (int y = 0; y < m; ++y) {
      o.entries[static_cast<std::size_t>(y)].prob = 0.0;
      o.entries[static_cast<std::size_t>(y)].exact = make_rational(0, 1);
    }
    for (int y : infinite) {
      o.entries[static_cast<std::size_t>(y)].prob = to_double(share);
      o.entries[static_cast<std::size_t>(y)].exact = share;
    }
    return o;
  }

  // Normalize by the largest weight (smallest base) to keep powers in range.
  const double base_min = *std::min_element(base.begin(), base.end());
  std::vector<double> weight(static_cast<std::size_t>(m));
  double total = 0.0;
  for (int y = 0; y < m; ++y) {
    weight[static_cast<std::size_t>(y)] = std::pow(base_min / base[static_cast<std::size_t>(y)], m);
    total += weight[static_cast<std::size_t>(y)];
  }
  for (int y = 0; y < m; ++y) {
    o.entries[static_cast<std::size_t>(y)].prob = weight[static_cast<std::size_t>(y)] / total;
  }

#if defined(__SIZEOF_INT128__)
  bool integral = true;
  std::vector<std::int64_t> int_bases(static_cast<std::size_t>(m));
  for (int y = 0; y < m; ++y) {
    const double b = base[static_cast<std::size_t>(y)];
    const double rounded = std::round(b);
    if (std::abs(b - rounded) > 1e-9 || rounded < 1.0 || rounded > 1e15) {
      integral = false;
      break;
    }
    int_bases[static_cast<std::size_t>(y)] = static_cast<std::int64_t>(rounded);
  }
  if (integral) {
    std::vector<Rational> exact;
    if (exact_power_fractions(int_bases, m, exact)) {
      for (int y = 0; y < m; ++y) {
        // Exact arithmetic wins over the floating path where they differ in ulps.
        o.entries[static_cast<std::size_t>(y)].prob = to_double(exact[static_cast<std::size_t>(y)]);
        o.entries[static_cast<std::size_t>(y)].exact = exact[static_cast<std::size_t>(y)];
      }
    }
  }
#endif
  return o;
}

Outcome proportionality(const Election& e) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  const std::vector<int> counts = tally(e);
  Outcome o;
  o.entries.resize(static_cast<std::size_t>(m));
  const std::int64_t den = static_cast<std::int64_t>(m - 1) * n;
  for (int y = 0; y < m; ++y) {
    const auto exact = make_rational(n - counts[static_cast<std::size_t>(y)], den);
    o.entries[static_cast<std::size_t>(y)] = {Committee{{y}}, to_double(exact), exact};
  }
  return o;
}

Outcome left_or_right(const Election& e, std::span<const double> coords) {
  const int m = e.num_candidates();
  if (static_cast<int>(coords.size()) != m) {
    throw std::invalid_argument("left_or_right needs one coordinate per candidate");
  }
  int left = 0;
  int right = 0;
  for (int j = 1; j < m; ++j) {
    if (coords[static_cast<std::size_t>(j)] < coords[static_cast<std::size_t>(left)]) left = j;
    if (coords[static_cast<std::size_t>(j)] > coords[static_cast<std::size_t>(right)]) right = j;
  }
  const double span_len = coords[static_cast<std::size_t>(right)] - coords[static_cast<std::size_t>(left)];

  Outcome o;
  if (span_len <= kMetricEps) {
    // All candidates coincide; both committees have identical value.
    o.degenerate = true;
    const auto half = make_rational(1, 2);
    o.entries.push_back({Committee{{0}}, 0.5, half});
    o.entries.push_back({Committee{{1}}, 0.5, half});
    return o;
  }

  const double mid = coords[static_cast<std::size_t>(left)] + span_len / 2.0;
  int n_left = 0;
  int n_right = 0;
  for (int i = 0; i < e.num_voters(); ++i) {
    // A vote exactly at the midpoint counts to the left half.
    if (coords[static_cast<std::size_t>(e.action(i))] <= mid + kMetricEps) {
      ++n_left;
    } else {
      ++n_right;
    }
  }

  Rational p_left = make_rational(1, 2);
  Rational p_right = make_rational(1, 2);
  if (n_left > n_right) {
    p_left = make_rational(6, 13);
    p_right = make_rational(7, 13);
  } else if (n_left < n_right) {
    p_left = make_rational(7, 13);
    p_right = make_rational(6, 13);
  }

  o.entries.push_back({Committee{{left}}, to_double(p_left), p_left});
  o.entries.push_back({Committee{{right}}, to_double(p_right), p_right});
  std::sort(o.entries.begin(), o.entries.end(),
            [](const OutcomeEntry& a, const OutcomeEntry& b) { return a.committee < b.committee; });
  return o;
}

Outcome left_or_right(const Election& e) {
  if (!e.line_coords()) {
    throw std::invalid_argument("left_or_right needs a line-embedded election (coords)");
  }
  return left_or_right(e, *e.line_coords());
}

Outcome run_mechanism(MechanismId id, const Election& e, int k) {
  const int m = e.num_candidates();
  if (k < 1 || k > m - 1) throw std::invalid_argument("committee size k must satisfy 1 <= k <= m-1");
  switch (id) {
    case MechanismId::min_projection:
      return min_projection(e, k);
    case MechanismId::max_projection:
      return max_projection(e, k);
    case MechanismId::power_proportionality:
      if (k != m - 1) throw std::invalid_argument("power_proportionality requires k = m-1");
      return power_proportionality(e);
    case MechanismId::proportionality:
      if (k != m - 1) throw std::invalid_argument("proportionality requires k = m-1");
      return proportionality(e);
    case MechanismId::left_or_right:
      if (k != m - 1) throw std::invalid_argument("left_or_right requires k = m-1");
      return left_or_right(e);
  }
  throw std::invalid_argument("unknown mechanism");
}

}  // namespace scv
