#pragma once

#include <span>
#include <string>
#include <vector>

namespace scv {

// Comparison tolerance for distances and derived quantities.
inline constexpr double kMetricEps = 1e-9;
// Tolerance for probability normalization checks.
inline constexpr double kProbEps = 1e-9;

// Finite point set with a pairwise distance matrix. Immutable after
// construction; shared freely across threads.
class FiniteMetric {
 public:
  FiniteMetric() = default;

  // dist is row-major size*size. Throws std::invalid_argument if the matrix
  // is not square or does not match the label count.
  FiniteMetric(std::vector<std::string> labels, std::vector<double> dist);

  int size() const { return n_; }
  double d(int p, int q) const { return dist_[static_cast<std::size_t>(p) * n_ + q]; }

  // min over v in set of d(p, v). Throws std::invalid_argument on empty set.
  double d_to_set(int p, std::span<const int> set) const;

  const std::string& label(int p) const { return labels_[static_cast<std::size_t>(p)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& raw() const { return dist_; }

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<double> dist_;
};

enum class MetricViolationKind { negative_entry, asymmetry, nonzero_diagonal, triangle };

struct MetricViolation {
  MetricViolationKind kind;
  int p = -1;
  int q = -1;
  int r = -1;  // witness midpoint for triangle violations
  double lhs = 0.0;
  double rhs = 0.0;
};

struct MetricValidation {
  std::vector<MetricViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks non-negativity, symmetry, zero diagonal and the triangle inequality
// (exhaustively, within kMetricEps). Returns every violating pair/triple.
MetricValidation validate(const FiniteMetric& metric);

std::string to_string(const MetricViolation& v);

// Points on the real line; d(p, q) = |positions[p] - positions[q]|.
FiniteMetric line_metric(std::span<const double> positions);
FiniteMetric line_metric(std::initializer_list<double> positions);

// m points, every distinct pair at distance `side`. Throws on side <= 0 or m < 1.
FiniteMetric simplex_metric(int m, double side);

}  // namespace scv
