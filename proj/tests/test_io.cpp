#include <stdexcept>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "scv/instances.hpp"
#include "scv/io.hpp"

using namespace scv;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("scv_io_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("metric file round trip") {
  TempDir dir;
  const InstanceBundle b = random_election(7, 3, 3, 5, MetricKind::random_metric);
  const fs::path file = dir.path / "m.metric";
  write_metric_file(file, b.election.metric());
  const FiniteMetric back = read_metric_file(file);
  CHECK(back.size() == b.election.metric().size());
  CHECK(back.raw() == b.election.metric().raw());
  CHECK(back.labels() == b.election.metric().labels());
}

TEST_CASE("election file round trip with relative metric path and coords") {
  TempDir dir;
  const InstanceBundle b = line_lower_bound_instance(3, 100.0);
  write_metric_file(dir.path / "e.metric", b.election.metric());
  write_election_file(dir.path / "e.election", b.election, "e.metric");
  const Election back = read_election_file(dir.path / "e.election");
  CHECK(back.candidates() == b.election.candidates());
  CHECK(back.actions() == b.election.actions());
  REQUIRE(back.line_coords().has_value());
  CHECK(*back.line_coords() == *b.election.line_coords());
  CHECK(back.metric().raw() == b.election.metric().raw());
}

TEST_CASE("absolute metric paths are used as-is") {
  TempDir dir;
  const InstanceBundle b = line_lower_bound_instance(2, 100.0);
  const fs::path metric_file = dir.path / "abs.metric";
  write_metric_file(metric_file, b.election.metric());
  const fs::path election_file = dir.path / "abs.election";
  write_election_file(election_file, b.election, fs::absolute(metric_file).string());
  const Election back = read_election_file(election_file);
  CHECK(back.metric().raw() == b.election.metric().raw());
}

TEST_CASE("metric parser rejects malformed input") {
  TempDir dir;
  const fs::path file = dir.path / "bad.metric";
  {
    std::ofstream out(file);
    out << "points 2\na\nb\n0 1\n1\n";
  }
  CHECK_THROWS_AS(read_metric_file(file), std::runtime_error);
  {
    std::ofstream out(file);
    out << "rows 2\n";
  }
  CHECK_THROWS_AS(read_metric_file(file), std::runtime_error);
  CHECK_THROWS_AS(read_metric_file(dir.path / "missing.metric"), std::runtime_error);
}

TEST_CASE("election parser rejects missing keys") {
  TempDir dir;
  write_metric_file(dir.path / "m.metric", line_metric({0.0, 2.0}));
  const fs::path file = dir.path / "e.election";
  {
    std::ofstream out(file);
    out << "metric m.metric\ncandidates 0 1\n";
  }
  CHECK_THROWS_AS(read_election_file(file), std::runtime_error);
  {
    std::ofstream out(file);
    out << "metric m.metric\ncandidates 0 1\nactions 0\nvoters 1\n";
  }
  CHECK_THROWS_AS(read_election_file(file), std::runtime_error);
}

TEST_CASE("comments and blank lines are tolerated") {
  TempDir dir;
  const fs::path file = dir.path / "c.metric";
  {
    std::ofstream out(file);
    out << "# a two-point space\n\npoints 2\na\nb\n\n0 2\n2 0\n";
  }
  const FiniteMetric m = read_metric_file(file);
  CHECK(m.size() == 2);
  CHECK(m.d(0, 1) == 2.0);
}

TEST_CASE("probability formatting") {
  OutcomeEntry exact{Committee{{0}}, 6.0 / 13.0, make_rational(6, 13)};
  CHECK(format_probability(exact) == "6/13");
  OutcomeEntry whole{Committee{{0}}, 1.0, make_rational(1, 1)};
  CHECK(format_probability(whole) == "1");
  OutcomeEntry decimal{Committee{{0}}, 0.25, std::nullopt};
  CHECK(format_probability(decimal) == "0.250000000000");
  CHECK(format_real(13.0 / 7.0) == "1.857142857143");
}
