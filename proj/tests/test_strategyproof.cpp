#include <stdexcept>
#include <random>

#include "doctest.h"
#include "scv/instances.hpp"
#include "scv/strategyproof.hpp"

using namespace scv;

namespace {

std::vector<int> full_universe(const Election& e) {
  std::vector<int> u(static_cast<std::size_t>(e.metric().size()));
  for (int p = 0; p < e.metric().size(); ++p) u[static_cast<std::size_t>(p)] = p;
  return u;
}

// Line 0-2-4 with a slot at 1; the voter at 1 is torn between the first two
// candidates and max_projection treats her two truthful reports differently.
Election equidistant_tie_election() {
  return Election(line_metric({0.0, 2.0, 4.0, 1.0}), {0, 1, 2}, {0, 0});
}

}  // namespace

TEST_CASE("min_projection passes the audit on small line universes") {
  const InstanceBundle b = line_lower_bound_instance(3, 20.0);
  const Election& tmpl = b.election;
  CHECK(audit_strategyproofness(MechanismId::min_projection, tmpl, full_universe(tmpl),
                                Objective::cost, 2)
            .empty());
}

TEST_CASE("power_proportionality passes the audit on simplex universes") {
  for (int m : {2, 3, 4}) {
    const InstanceBundle b = simplex_lower_bound_instance(m);
    for (int n : {1, 2, 3}) {
      const Election tmpl = b.election.with_actions(std::vector<int>(static_cast<std::size_t>(n), 0));
      CHECK(audit_strategyproofness(MechanismId::power_proportionality, tmpl, b.universe,
                                    Objective::cost, m - 1)
                .empty());
    }
  }
}

TEST_CASE("proportionality passes the audit for the utility objective") {
  const InstanceBundle b = simplex_lower_bound_instance(3);
  const Election tmpl = b.election.with_actions({0, 0, 0});
  CHECK(audit_strategyproofness(MechanismId::proportionality, tmpl, b.universe, Objective::utility,
                                2)
            .empty());
}

TEST_CASE("max_projection fails the audit at an equidistant voter") {
  const Election tmpl = equidistant_tie_election();
  const std::vector<Violation> violations = audit_strategyproofness(
      MechanismId::max_projection, tmpl, full_universe(tmpl), Objective::utility, 2);
  REQUIRE_FALSE(violations.empty());
  bool expected_found = false;
  for (const Violation& v : violations) {
    CHECK(replay_violation(MechanismId::max_projection, tmpl, v, 2));
    // The known witness: voter at the slot (point 3), truthful report y2,
    // misreport y1 flips the eliminated candidate from y1 to y3.
    if (v.profile.locations[static_cast<std::size_t>(v.voter)] == 3 && v.truthful_action == 1 &&
        v.better_action == 0) {
      expected_found = true;
      CHECK(v.truthful_value == doctest::Approx(1.0));
      CHECK(v.deviant_value == doctest::Approx(3.0));
    }
  }
  CHECK(expected_found);
}

TEST_CASE("left_or_right loses strategy-proofness on an L/8 grid") {
  // Candidates at 0, 4, 8 on the 9-point grid; the voter at 5 has the middle
  // candidate as unique favorite but prefers the left endpoint eliminated.
  std::vector<double> grid(9);
  for (int i = 0; i < 9; ++i) grid[static_cast<std::size_t>(i)] = i;
  const Election tmpl(line_metric(grid), {0, 4, 8}, {0},
                      std::vector<double>{0.0, 4.0, 8.0});
  const std::vector<Violation> violations = audit_strategyproofness(
      MechanismId::left_or_right, tmpl, full_universe(tmpl), Objective::utility, 2);
  REQUIRE_FALSE(violations.empty());
  for (const Violation& v : violations) {
    CHECK(replay_violation(MechanismId::left_or_right, tmpl, v, 2));
  }
}

TEST_CASE("violations render as CSV rows") {
  const Election tmpl = equidistant_tie_election();
  const std::vector<Violation> violations = audit_strategyproofness(
      MechanismId::max_projection, tmpl, full_universe(tmpl), Objective::utility, 2);
  REQUIRE_FALSE(violations.empty());
  const std::string row = to_csv_row(violations.front());
  CHECK(row.find("utility") != std::string::npos);
  CHECK(row.find("1.000000000000,3.000000000000") != std::string::npos);
}

TEST_CASE("audit budget guard") {
  const Election tmpl = equidistant_tie_election();
  AuditOptions options;
  options.budget = 5;
  CHECK_THROWS_AS(audit_strategyproofness(MechanismId::max_projection, tmpl, full_universe(tmpl),
                                          Objective::utility, 2, options),
                  std::runtime_error);
}

TEST_CASE("proportionality probability monotonicity") {
  const Election e(simplex_metric(3, 2.0), {0, 1, 2}, {0, 0, 1, 2});
  CHECK(audit_proportionality_monotonicity(e, 0));
  // Concrete probabilities across the switch of one first-candidate vote to
  // the second candidate: (2/8, 3/8, 3/8) -> (3/8, 2/8, 3/8).
  const Outcome before = proportionality(e);
  const Outcome after = proportionality(e.with_actions({1, 0, 1, 2}));
  CHECK(*before.entries[0].exact == make_rational(2, 8));
  CHECK(*after.entries[0].exact == make_rational(3, 8));
  CHECK(*before.entries[1].exact == make_rational(3, 8));
  CHECK(*after.entries[1].exact == make_rational(2, 8));
  CHECK(*before.entries[2].exact == *after.entries[2].exact);

  const Election lone(line_metric({0.0, 2.0}), {0, 1}, {0});
  CHECK(audit_proportionality_monotonicity(lone, 0));

  std::mt19937_64 rng(3333);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 5);
    const MetricKind kind = trial % 2 == 0 ? MetricKind::line : MetricKind::random_metric;
    const InstanceBundle b = random_election(rng(), m, n, m + 2, kind);
    const int voter = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    CHECK(audit_proportionality_monotonicity(b.election, voter));
  }
}

TEST_CASE("random sweep: the three strategy-proof mechanisms stay clean") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const MetricKind kind =
        trial % 3 == 0 ? MetricKind::line
                       : (trial % 3 == 1 ? MetricKind::simplex : MetricKind::random_metric);
    const InstanceBundle b = random_election(rng(), m, n, m + 2, kind);
    const Election tmpl = b.election;
    CHECK(audit_strategyproofness(MechanismId::min_projection, tmpl, b.universe, Objective::cost,
                                  m - 1)
              .empty());
    CHECK(audit_strategyproofness(MechanismId::power_proportionality, tmpl, b.universe,
                                  Objective::cost, m - 1)
              .empty());
    CHECK(audit_strategyproofness(MechanismId::proportionality, tmpl, b.universe,
                                  Objective::utility, m - 1)
              .empty());
  }
}
