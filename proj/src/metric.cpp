#include "scv/metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scv {

FiniteMetric::FiniteMetric(std::vector<std::string> labels, std::vector<double> dist)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)), dist_(std::move(dist)) {
  const std::size_t n = static_cast<std::size_t>(n_);
  if (dist_.size() != n * n) {
    throw std::invalid_argument("distance matrix is not square (" + std::to_string(dist_.size()) +
                                " entries for " + std::to_string(n_) + " points)");
  }
}

double FiniteMetric::d_to_set(int p, std::span<const int> set) const {
  if (set.empty()) throw std::invalid_argument("distance to an empty point set");
  double best = d(p, set.front());
  for (std::size_t i = 1; i < set.size(); ++i) {
    const double v = d(p, set[i]);
    if (v < best) best = v;
  }
  return best;
}

MetricValidation validate(const FiniteMetric& metric) {
  MetricValidation result;
  const int n = metric.size();
  for (int p = 0; p < n; ++p) {
    if (std::abs(metric.d(p, p)) > kMetricEps) {
      result.violations.push_back(
          {MetricViolationKind::nonzero_diagonal, p, p, -1, metric.d(p, p), 0.0});
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (metric.d(p, q) < -kMetricEps) {
        result.violations.push_back(
            {MetricViolationKind::negative_entry, p, q, -1, metric.d(p, q), 0.0});
      }
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (std::abs(metric.d(p, q) - metric.d(q, p)) > kMetricEps) {
        result.violations.push_back(
            {MetricViolationKind::asymmetry, p, q, -1, metric.d(p, q), metric.d(q, p)});
      }
    }
  }
  // Exhaustive O(n^3) triangle check; universes stay desk-scale.
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double lhs = metric.d(p, q);
        const double rhs = metric.d(p, r) + metric.d(r, q);
        if (lhs > rhs + kMetricEps) {
          result.violations.push_back({MetricViolationKind::triangle, p, q, r, lhs, rhs});
        }
      }
    }
  }
  return result;
}

std::string to_string(const MetricViolation& v) {
  std::ostringstream out;
  switch (v.kind) {
    case MetricViolationKind::negative_entry:
      out << "negative entry d(" << v.p << "," << v.q << ") = " << v.lhs;
      break;
    case MetricViolationKind::asymmetry:
      out << "asymmetry d(" << v.p << "," << v.q << ") = " << v.lhs << " vs d(" << v.q << ","
          << v.p << ") = " << v.rhs;
      break;
    case MetricViolationKind::nonzero_diagonal:
      out << "nonzero diagonal d(" << v.p << "," << v.p << ") = " << v.lhs;
      break;
    case MetricViolationKind::triangle:
      out << "triangle violation (" << v.p << "," << v.q << "," << v.r << "): d(" << v.p << ","
          << v.q << ") = " << v.lhs << " > " << v.rhs;
      break;
  }
  return out.str();
}

FiniteMetric line_metric(std::span<const double> positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int p = 0; p < n; ++p) {
    std::ostringstream label;
    label << "x=" << positions[static_cast<std::size_t>(p)];
    labels[static_cast<std::size_t>(p)] = label.str();
    for (int q = 0; q < n; ++q) {
      dist[static_cast<std::size_t>(p) * n + q] =
          std::abs(positions[static_cast<std::size_t>(p)] - positions[static_cast<std::size_t>(q)]);
    }
  }
  return FiniteMetric(std::move(labels), std::move(dist));
}

FiniteMetric line_metric(std::initializer_list<double> positions) {
  return line_metric(std::span<const double>(positions.begin(), positions.size()));
}

FiniteMetric simplex_metric(int m, double side) {
  if (m < 1) throw std::invalid_argument("simplex_metric: need at least one point");
  if (side <= 0.0) throw std::invalid_argument("simplex_metric: side must be positive");
  std::vector<std::string> labels(static_cast<std::size_t>(m));
  std::vector<double> dist(static_cast<std::size_t>(m) * m, side);
  for (int p = 0; p < m; ++p) {
    labels[static_cast<std::size_t>(p)] = "y" + std::to_string(p + 1);
    dist[static_cast<std::size_t>(p) * m + p] = 0.0;
  }
  return FiniteMetric(std::move(labels), std::move(dist));
}

}  // namespace scv
