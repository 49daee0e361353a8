#include "scv/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace scv {
namespace {

// Next content line (blank lines and '#' comments skipped). False on EOF.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    return true;
  }
  return false;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

}  // namespace

FiniteMetric read_metric_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail(path, "cannot open");
  std::string line;
  if (!next_line(in, line)) parse_fail(path, "missing 'points <n>' header");
  const auto header = split_words(line);
  if (header.size() != 2 || header[0] != "points") parse_fail(path, "expected 'points <n>'");
  const int n = std::stoi(header[1]);
  if (n < 1) parse_fail(path, "need at least one point");

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    if (!next_line(in, line)) parse_fail(path, "missing label line " + std::to_string(p));
    labels.push_back(line);
  }

  std::vector<double> dist;
  dist.reserve(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p) {
    if (!next_line(in, line)) parse_fail(path, "missing matrix row " + std::to_string(p));
    std::istringstream row(line);
    for (int q = 0; q < n; ++q) {
      double v = 0.0;
      if (!(row >> v)) parse_fail(path, "row " + std::to_string(p) + " is shorter than " +
                                            std::to_string(n) + " entries");
      dist.push_back(v);
    }
    double extra = 0.0;
    if (row >> extra) parse_fail(path, "row " + std::to_string(p) + " has extra entries");
  }
  return FiniteMetric(std::move(labels), std::move(dist));
}

void write_metric_file(const std::filesystem::path& path, const FiniteMetric& metric) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  const int n = metric.size();
  out << "points " << n << "\n";
  for (int p = 0; p < n; ++p) out << metric.label(p) << "\n";
  out << std::setprecision(17);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (q > 0) out << " ";
      out << metric.d(p, q);
    }
    out << "\n";
  }
}

Election read_election_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail(path, "cannot open");

  std::optional<std::filesystem::path> metric_path;
  std::optional<std::vector<int>> candidates;
  std::optional<std::vector<int>> actions;
  std::optional<std::vector<double>> coords;

  std::string line;
  while (next_line(in, line)) {
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& key = words[0];
    if (key == "metric") {
      if (words.size() != 2) parse_fail(path, "metric line needs one path");
      metric_path = std::filesystem::path(words[1]);
    } else if (key == "candidates" || key == "actions") {
      std::vector<int> values;
      for (std::size_t i = 1; i < words.size(); ++i) values.push_back(std::stoi(words[i]));
      (key == "candidates" ? candidates : actions) = std::move(values);
    } else if (key == "coords") {
      std::vector<double> values;
      for (std::size_t i = 1; i < words.size(); ++i) values.push_back(std::stod(words[i]));
      coords = std::move(values);
    } else {
      parse_fail(path, "unknown key '" + key + "'");
    }
  }
  if (!metric_path) parse_fail(path, "missing 'metric' line");
  if (!candidates) parse_fail(path, "missing 'candidates' line");
  if (!actions) parse_fail(path, "missing 'actions' line");

  std::filesystem::path resolved = *metric_path;
  if (resolved.is_relative()) resolved = path.parent_path() / resolved;
  FiniteMetric metric = read_metric_file(resolved);
  return Election(std::move(metric), std::move(*candidates), std::move(*actions),
                  std::move(coords));
}

void write_election_file(const std::filesystem::path& path, const Election& e,
                         const std::string& metric_filename) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << "metric " << metric_filename << "\n";
  out << "candidates";
  for (int p : e.candidates()) out << " " << p;
  out << "\nactions";
  for (int a : e.actions()) out << " " << a;
  out << "\n";
  if (e.line_coords()) {
    out << "coords";
    out << std::setprecision(17);
    for (double c : *e.line_coords()) out << " " << c;
    out << "\n";
  }
}

std::string format_real(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(12) << v;
  return out.str();
}

std::string format_probability(const OutcomeEntry& entry) {
  if (entry.exact) return to_string(*entry.exact);
  return format_real(entry.prob);
}

}  // namespace scv
