#pragma once

#include <filesystem>
#include <string>

#include "scv/election.hpp"
#include "scv/metric.hpp"

namespace scv {

// Metric file (text, line oriented):
//   points <n>
//   <label line> x n
//   <n rows of n space-separated numbers>
// Blank lines and lines starting with '#' are skipped.
FiniteMetric read_metric_file(const std::filesystem::path& path);
void write_metric_file(const std::filesystem::path& path, const FiniteMetric& metric);

// Election file (text):
//   metric <path>            (resolved relative to the election file)
//   candidates <point ids>
//   actions <candidate indices>
//   coords <per-candidate line coordinates>     (optional)
Election read_election_file(const std::filesystem::path& path);
void write_election_file(const std::filesystem::path& path, const Election& e,
                         const std::string& metric_filename);

// Fixed 12-decimal formatting used by all CSV outputs; bit-stable across runs.
std::string format_real(double v);

// Exact fraction when available, else format_real.
std::string format_probability(const OutcomeEntry& entry);

}  // namespace scv
