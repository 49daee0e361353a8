#include "scv/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "scv/kernels.hpp"

namespace scv {

std::string to_string(Objective obj) { return obj == Objective::cost ? "cost" : "utility"; }

std::optional<Objective> parse_objective(std::string_view name) {
  if (name == "cost") return Objective::cost;
  if (name == "utility") return Objective::utility;
  return std::nullopt;
}

double expected_cost(const Election& e, const Outcome& o, const LocationProfile& x) {
  double total = 0.0;
  for (const OutcomeEntry& entry : o.entries) {
    if (entry.prob == 0.0) continue;
    total += entry.prob * social_cost(e, entry.committee, x);
  }
  return total;
}

double expected_utility(const Election& e, const Outcome& o, const LocationProfile& x) {
  double total = 0.0;
  for (const OutcomeEntry& entry : o.entries) {
    if (entry.prob == 0.0) continue;
    total += entry.prob * social_utility(e, entry.committee, x);
  }
  return total;
}

namespace {

std::pair<double, Committee> opt_search(const Election& e, const LocationProfile& x, int k,
                                        Objective obj) {
  const int m = e.num_candidates();
  const std::vector<Committee> committees = enumerate_committees(m, k);
  const Committee* best = nullptr;
  double best_value = 0.0;
  for (const Committee& c : committees) {
    const double v =
        obj == Objective::cost ? social_cost(e, c, x) : social_utility(e, c, x);
    const bool better = best == nullptr || (obj == Objective::cost ? v < best_value : v > best_value);
    if (better) {
      best_value = v;
      best = &c;
    }
  }
  return {best_value, *best};
}

}  // namespace

std::pair<double, Committee> opt_cost(const Election& e, const LocationProfile& x, int k) {
  return opt_search(e, x, k, Objective::cost);
}

std::pair<double, Committee> opt_utility(const Election& e, const LocationProfile& x, int k) {
  return opt_search(e, x, k, Objective::utility);
}

namespace {

// Precomputed per-universe-point tables for one oracle run. The benchmark
// needs per-committee sums; the mechanism's expected value factorizes into a
// single per-point table because the outcome is fixed by the actions.
struct OracleTables {
  std::vector<int> universe;
  int num_committees = 0;
  int num_points = 0;
  // bench_rows[c * P + u]: cost -> d(u, winners(c)); utility -> d(u, eliminated(c)).
  std::vector<double> bench_rows;
  // bench_cols[u * C + c] = bench_rows[c * P + u].
  std::vector<double> bench_cols;
  // evalue[u] = sum over outcome entries of prob * d(u, entry set).
  std::vector<double> evalue;
  // Per voter: indices into `universe` where her action is a nearest candidate.
  std::vector<std::vector<int>> feasible;
  // Leaf tables, restricted to the last voter's feasible points.
  std::vector<double> leaf_rows;  // [c * lenF + j]
  std::vector<double> leaf_evalue;
  int leaf_len = 0;
};

struct SearchState {
  double best_ratio = 0.0;
  bool found = false;
  bool unbounded = false;
  std::vector<int> witness;  // indices into universe, per voter
};

OracleTables build_tables(const Election& e, const Outcome& o, Objective obj,
                          std::span<const int> universe, int k) {
  OracleTables t;
  t.universe.assign(universe.begin(), universe.end());
  const int m = e.num_candidates();
  for (int u : t.universe) {
    if (u < 0 || u >= e.metric().size()) throw std::invalid_argument("universe point out of range");
  }

  const std::vector<Committee> committees = enumerate_committees(m, k);
  t.num_committees = static_cast<int>(committees.size());
  t.num_points = static_cast<int>(t.universe.size());
  const std::size_t C = static_cast<std::size_t>(t.num_committees);
  const std::size_t P = static_cast<std::size_t>(t.num_points);

  std::vector<std::vector<int>> bench_points(C);
  for (std::size_t c = 0; c < C; ++c) {
    const std::vector<int> side = obj == Objective::cost
                                      ? committee_winners(committees[c], m)
                                      : committees[c].eliminated;
    bench_points[c].reserve(side.size());
    for (int j : side) bench_points[c].push_back(e.candidate_point(j));
  }

  t.bench_rows.assign(C * P, 0.0);
  t.bench_cols.assign(C * P, 0.0);
  for (std::size_t c = 0; c < C; ++c) {
    for (std::size_t u = 0; u < P; ++u) {
      const double v = e.metric().d_to_set(t.universe[u], bench_points[c]);
      t.bench_rows[c * P + u] = v;
      t.bench_cols[u * C + c] = v;
    }
  }

  // Expected mechanism value per point, accumulated with the axpy kernel.
  t.evalue.assign(P, 0.0);
  const auto& kops = kernels::ops();
  std::vector<double> row(P);
  for (const OutcomeEntry& entry : o.entries) {
    if (entry.prob == 0.0) continue;
    const std::vector<int> side = obj == Objective::cost
                                      ? committee_winners(entry.committee, m)
                                      : entry.committee.eliminated;
    std::vector<int> points;
    points.reserve(side.size());
    for (int j : side) points.push_back(e.candidate_point(j));
    for (std::size_t u = 0; u < P; ++u) row[u] = e.metric().d_to_set(t.universe[u], points);
    kops.axpy(t.evalue.data(), row.data(), entry.prob, P);
  }

  // Per-voter feasibility: points where the submitted candidate is nearest.
  t.feasible.resize(static_cast<std::size_t>(e.num_voters()));
  for (int i = 0; i < e.num_voters(); ++i) {
    const int voted_point = e.candidate_point(e.action(i));
    for (int idx = 0; idx < t.num_points; ++idx) {
      const int u = t.universe[static_cast<std::size_t>(idx)];
      const double voted = e.metric().d(u, voted_point);
      bool ok = true;
      for (int j = 0; j < m; ++j) {
        if (voted > e.metric().d(u, e.candidate_point(j)) + kMetricEps) {
          ok = false;
          break;
        }
      }
      if (ok) t.feasible[static_cast<std::size_t>(i)].push_back(idx);
    }
  }

  const std::vector<int>& last = t.feasible.back();
  t.leaf_len = static_cast<int>(last.size());
  t.leaf_rows.assign(C * last.size(), 0.0);
  t.leaf_evalue.assign(last.size(), 0.0);
  for (std::size_t c = 0; c < C; ++c) {
    for (std::size_t j = 0; j < last.size(); ++j) {
      t.leaf_rows[c * last.size() + j] = t.bench_rows[c * P + static_cast<std::size_t>(last[j])];
    }
  }
  for (std::size_t j = 0; j < last.size(); ++j) {
    t.leaf_evalue[j] = t.evalue[static_cast<std::size_t>(last[j])];
  }
  return t;
}

// Depth-first enumeration over the product of feasible sets; the last voter
// is evaluated as one batched kernel pass. `first_range` limits the first
// voter's feasible indices so the search can be partitioned across workers.
class OracleWorker {
 public:
  OracleWorker(const OracleTables& t, Objective obj, int first_begin, int first_end)
      : t_(t),
        obj_(obj),
        first_begin_(first_begin),
        first_end_(first_end),
        num_voters_(static_cast<int>(t.feasible.size())) {
    const std::size_t C = static_cast<std::size_t>(t_.num_committees);
    partial_.assign(static_cast<std::size_t>(num_voters_) * C, 0.0);
    best_.assign(static_cast<std::size_t>(t_.leaf_len), 0.0);
    path_.assign(static_cast<std::size_t>(num_voters_), 0);
  }

  SearchState run() {
    if (num_voters_ == 1) {
      evaluate_leaf(nullptr, 0.0, first_begin_, first_end_);
      return state_;
    }
    descend(0, 0.0, first_begin_, first_end_);
    return state_;
  }

 private:
  std::size_t C() const { return static_cast<std::size_t>(t_.num_committees); }

  double* layer(int depth) { return partial_.data() + static_cast<std::size_t>(depth) * C(); }

  void descend(int depth, double evalue_partial, int begin, int end) {
    const auto& kops = kernels::ops();
    const std::vector<int>& feas = t_.feasible[static_cast<std::size_t>(depth)];
    const double* prev = depth == 0 ? nullptr : layer(depth - 1);
    for (int pos = begin; pos < end; ++pos) {
      const int point_idx = feas[static_cast<std::size_t>(pos)];
      path_[static_cast<std::size_t>(depth)] = point_idx;
      const double* col = t_.bench_cols.data() + static_cast<std::size_t>(point_idx) * C();
      double* cur = layer(depth);
      if (prev == nullptr) {
        std::copy(col, col + C(), cur);
      } else {
        kops.add(cur, prev, col, C());
      }
      const double evalue = evalue_partial + t_.evalue[static_cast<std::size_t>(point_idx)];
      if (depth + 2 == num_voters_) {
        evaluate_leaf(cur, evalue, 0, t_.leaf_len);
      } else {
        descend(depth + 1, evalue, 0,
                static_cast<int>(t_.feasible[static_cast<std::size_t>(depth + 1)].size()));
      }
    }
  }

  // Batched last-voter evaluation: best_[j] = opt over committees of
  // (partial + leaf row), then the ratio scan.
  void evaluate_leaf(const double* partial, double evalue_partial, int begin, int end) {
    const auto& kops = kernels::ops();
    const std::size_t lenF = static_cast<std::size_t>(t_.leaf_len);
    const bool cost = obj_ == Objective::cost;
    std::fill(best_.begin(), best_.end(),
              cost ? std::numeric_limits<double>::infinity()
                   : -std::numeric_limits<double>::infinity());
    for (std::size_t c = 0; c < C(); ++c) {
      const double shift = partial == nullptr ? 0.0 : partial[c];
      const double* row = t_.leaf_rows.data() + c * lenF;
      if (cost) {
        kops.min_plus(best_.data(), row, shift, lenF);
      } else {
        kops.max_plus(best_.data(), row, shift, lenF);
      }
    }
    for (int j = begin; j < end; ++j) {
      const double mech_value = evalue_partial + t_.leaf_evalue[static_cast<std::size_t>(j)];
      const double num = cost ? mech_value : best_[static_cast<std::size_t>(j)];
      const double den = cost ? best_[static_cast<std::size_t>(j)] : mech_value;
      // Sums of non-negative distances: exactly zero only when truly zero.
      if (den == 0.0) {
        if (num == 0.0) {
          consider(1.0, j);
        } else {
          consider_unbounded(j);
        }
      } else {
        consider(num / den, j);
      }
    }
  }

  void consider(double ratio, int leaf_pos) {
    if (state_.unbounded) return;
    if (!state_.found || ratio > state_.best_ratio) {
      state_.best_ratio = ratio;
      state_.found = true;
      record_witness(leaf_pos);
    }
  }

  void consider_unbounded(int leaf_pos) {
    if (state_.unbounded) return;
    state_.unbounded = true;
    state_.found = true;
    record_witness(leaf_pos);
  }

  void record_witness(int leaf_pos) {
    state_.witness.assign(path_.begin(), path_.end());
    state_.witness.back() =
        t_.feasible.back()[static_cast<std::size_t>(leaf_pos)];
  }

  const OracleTables& t_;
  Objective obj_;
  int first_begin_;
  int first_end_;
  int num_voters_;
  std::vector<double> partial_;
  std::vector<double> best_;
  std::vector<int> path_;
  SearchState state_;
};

bool better_state(const SearchState& a, const SearchState& b) {
  // Does a beat b? (b possibly empty.)
  if (!b.found) return a.found;
  if (!a.found) return false;
  if (a.unbounded != b.unbounded) return a.unbounded;
  return a.best_ratio > b.best_ratio;
}

}  // namespace

DistortionReport worst_case_distortion(const Election& e, const Outcome& o, Objective obj,
                                       std::span<const int> universe, int k,
                                       const OracleOptions& options) {
  const int m = e.num_candidates();
  check_outcome(o, m);
  if (static_cast<int>(o.entries.front().committee.eliminated.size()) != m - k) {
    throw std::invalid_argument("outcome committee size disagrees with k");
  }
  if (universe.empty()) throw std::invalid_argument("empty universe");

  DistortionReport report;
  report.objective = obj;

  OracleTables tables = build_tables(e, o, obj, universe, k);

  long long profiles = 1;
  bool over_budget = false;
  for (const auto& feas : tables.feasible) {
    if (feas.empty()) {
      report.empty_profile_set = true;
      report.worst_ratio = std::numeric_limits<double>::quiet_NaN();
      return report;
    }
    profiles *= static_cast<long long>(feas.size());
    if (profiles > options.budget) {
      over_budget = true;
      break;
    }
  }
  if (over_budget) {
    throw std::runtime_error("consistent-profile enumeration exceeds budget of " +
                             std::to_string(options.budget) + " profiles");
  }
  report.profiles_searched = profiles;

  const int n = e.num_voters();
  const int first_len = static_cast<int>(tables.feasible.front().size());
  int threads = std::max(1, options.threads);
  threads = std::min(threads, first_len);

  SearchState merged;
  if (threads <= 1 || n == 1) {
    merged = OracleWorker(tables, obj, 0, first_len).run();
  } else {
    // Partition on the first voter; merge in chunk order so the result
    // matches a sequential scan exactly.
    std::vector<SearchState> states(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      const int begin = first_len * w / threads;
      const int end = first_len * (w + 1) / threads;
      pool.emplace_back([&tables, obj, begin, end, w, &states] {
        states[static_cast<std::size_t>(w)] = OracleWorker(tables, obj, begin, end).run();
      });
    }
    for (auto& th : pool) th.join();
    for (const SearchState& s : states) {
      if (better_state(s, merged)) merged = s;
    }
  }

  report.worst_ratio = merged.unbounded ? std::numeric_limits<double>::infinity()
                                        : merged.best_ratio;
  report.unbounded = merged.unbounded;
  report.witness.locations.reserve(merged.witness.size());
  for (int idx : merged.witness) {
    report.witness.locations.push_back(tables.universe[static_cast<std::size_t>(idx)]);
  }
  return report;
}

DistortionReport worst_case_distortion(const Election& e, MechanismId mech, Objective obj,
                                       std::span<const int> universe, int k,
                                       const OracleOptions& options) {
  const Outcome o = run_mechanism(mech, e, k);
  DistortionReport report = worst_case_distortion(e, o, obj, universe, k, options);
  report.mechanism = mech;
  report.analytic_bound = analytic_bound(mech, e, obj);
  return report;
}

double cost_ratio_bound(const Election& e, const Outcome& o, int y_star) {
  const int m = e.num_candidates();
  check_outcome(o, m);
  if (o.entries.front().committee.eliminated.size() != 1) {
    throw std::invalid_argument("cost_ratio_bound needs single-elimination committees");
  }
  if (y_star < 0 || y_star >= m) throw std::invalid_argument("candidate index out of range");
  const std::vector<int> counts = tally(e);

  auto rest_dist = [&](int y) {
    double best = std::numeric_limits<double>::infinity();
    for (int z = 0; z < m; ++z) {
      if (z != y) best = std::min(best, e.cand_dist(y, z));
    }
    return best;
  };

  const double denom = counts[static_cast<std::size_t>(y_star)] * rest_dist(y_star);
  if (denom <= kMetricEps) return std::numeric_limits<double>::infinity();

  double sum = 0.0;
  for (const OutcomeEntry& entry : o.entries) {
    const int y = entry.committee.eliminated.front();
    if (y == y_star || entry.prob == 0.0) continue;
    sum += entry.prob * counts[static_cast<std::size_t>(y)] * rest_dist(y);
  }
  return 1.0 + 2.0 * sum / denom;
}

double utility_ratio_bound(const Election& e, const Outcome& o, int y_star) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  check_outcome(o, m);
  if (o.entries.front().committee.eliminated.size() != 1) {
    throw std::invalid_argument("utility_ratio_bound needs single-elimination committees");
  }
  if (y_star < 0 || y_star >= m) throw std::invalid_argument("candidate index out of range");
  const std::vector<int> counts = tally(e);
  if (counts[static_cast<std::size_t>(y_star)] >= n) {
    throw std::domain_error("utility_ratio_bound needs a voter outside N(y*)");
  }

  double subtracted = 0.0;
  for (const OutcomeEntry& entry : o.entries) {
    const int y = entry.committee.eliminated.front();
    if (y == y_star || entry.prob == 0.0) continue;
    const double dyy = e.cand_dist(y, y_star);
    if (dyy <= kMetricEps) {
      // Zero separation: the inner expression degenerates; charge the whole
      // probability (its maximum), keeping the bound on the safe side.
      subtracted += entry.prob;
      continue;
    }
    double crowd = 0.0;
    for (int z = 0; z < m; ++z) {
      crowd += counts[static_cast<std::size_t>(z)] * e.cand_dist(z, y);
    }
    const double inner =
        1.0 + crowd / (2.0 * (n - counts[static_cast<std::size_t>(y_star)]) * dyy);
    subtracted += entry.prob / inner;
  }
  return 1.0 - subtracted;
}

double power_weight_ratio(std::span<const double> weights) {
  if (weights.size() < 2) throw std::domain_error("need at least two weights");
  const int m = static_cast<int>(weights.size());
  for (double w : weights) {
    if (!(w > 0.0)) throw std::domain_error("weights must be positive");
  }
  double tail = 0.0;
  double denom = 0.0;
  for (int i = 0; i < m; ++i) {
    const double w = weights[static_cast<std::size_t>(i)];
    const double wm1 = std::pow(w, m - 1);
    if (i > 0) tail += wm1;
    denom += wm1 * w;
  }
  return 1.0 + 2.0 * weights[0] * tail / denom;
}

namespace {

bool candidates_form_simplex(const Election& e) {
  const int m = e.num_candidates();
  double side = -1.0;
  for (int j = 0; j < m; ++j) {
    for (int l = j + 1; l < m; ++l) {
      const double d = e.cand_dist(j, l);
      if (side < 0.0) {
        side = d;
      } else if (std::abs(d - side) > kMetricEps) {
        return false;
      }
    }
  }
  return side > kMetricEps;
}

}  // namespace

std::optional<double> analytic_bound(MechanismId mech, const Election& e, Objective obj) {
  const int m = e.num_candidates();
  switch (mech) {
    case MechanismId::min_projection:
      return obj == Objective::cost ? std::optional<double>(3.0) : std::nullopt;
    case MechanismId::power_proportionality:
      return obj == Objective::cost ? std::optional<double>(3.0 - 2.0 / m) : std::nullopt;
    case MechanismId::max_projection:
      return obj == Objective::utility ? std::optional<double>(3.0) : std::nullopt;
    case MechanismId::proportionality:
      if (obj != Objective::utility) return std::nullopt;
      if (m == 2) return (5.0 + 4.0 * std::sqrt(2.0)) / 7.0;
      if (candidates_form_simplex(e)) return 3.0 - 4.0 / (m + 2);
      return std::nullopt;
    case MechanismId::left_or_right:
      return obj == Objective::utility ? std::optional<double>(13.0 / 7.0) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace scv
