#include <stdexcept>
#include <algorithm>
#include <random>

#include "doctest.h"
#include "scv/instances.hpp"
#include "scv/mechanisms.hpp"

using namespace scv;

namespace {

Election near_far_election() {
  return Election(line_metric({0.0, 2.0, 100.0, 1.0}), {0, 1, 2}, {0, 1, 2},
                  std::vector<double>{0.0, 2.0, 100.0});
}

const OutcomeEntry& entry_for(const Outcome& o, int eliminated) {
  for (const OutcomeEntry& e : o.entries) {
    if (e.committee.eliminated == std::vector<int>{eliminated}) return e;
  }
  REQUIRE(false);
  return o.entries.front();
}

Election permuted_voters(const Election& e, std::mt19937_64& rng) {
  std::vector<int> actions = e.actions();
  std::shuffle(actions.begin(), actions.end(), rng);
  return e.with_actions(std::move(actions));
}

bool same_distribution(const Outcome& a, const Outcome& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (!(a.entries[i].committee == b.entries[i].committee)) return false;
    if (a.entries[i].prob != b.entries[i].prob) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("min_projection on the near-far election breaks the tie leftward") {
  const Outcome o = min_projection(near_far_election(), 2);
  REQUIRE(o.entries.size() == 1);
  CHECK(o.entries[0].committee.eliminated == std::vector<int>{0});
  CHECK(o.entries[0].prob == 1.0);
}

TEST_CASE("min_projection with unanimous votes eliminates the first unvoted candidate") {
  const Election e = near_far_election().with_actions({0, 0, 0});
  const Outcome o = min_projection(e, 2);
  CHECK(o.entries[0].committee.eliminated == std::vector<int>{1});
}

TEST_CASE("min_projection on a simplex with a skewed tally") {
  const Election e(simplex_metric(3, 2.0), {0, 1, 2}, {0, 0, 1, 2});
  // pd(eliminate 0) = 4, pd(eliminate 1) = 2, pd(eliminate 2) = 2.
  const Outcome o = min_projection(e, 2);
  CHECK(o.entries[0].committee.eliminated == std::vector<int>{1});
}

TEST_CASE("max_projection examples") {
  CHECK(max_projection(near_far_election(), 2).entries[0].committee.eliminated ==
        std::vector<int>{2});

  const Election all_first(simplex_metric(3, 2.0), {0, 1, 2}, {0, 0, 0});
  CHECK(max_projection(all_first, 2).entries[0].committee.eliminated == std::vector<int>{1});

  const Election two(line_metric({0.0, 2.0}), {0, 1}, {0, 0, 0});
  CHECK(max_projection(two, 1).entries[0].committee.eliminated == std::vector<int>{1});
}

TEST_CASE("power_proportionality symmetric simplex is uniform") {
  const Election e(simplex_metric(3, 2.0), {0, 1, 2}, {0, 1, 2});
  const Outcome o = power_proportionality(e);
  REQUIRE(o.entries.size() == 3);
  for (const OutcomeEntry& entry : o.entries) {
    REQUIRE(entry.exact.has_value());
    CHECK(*entry.exact == make_rational(1, 3));
  }
}

TEST_CASE("power_proportionality weights follow the inverse m-th power") {
  const Election e(line_metric({0.0, 2.0}), {0, 1}, {0, 0, 1});
  const Outcome o = power_proportionality(e);
  CHECK(*entry_for(o, 0).exact == make_rational(1, 5));
  CHECK(*entry_for(o, 1).exact == make_rational(4, 5));
}

TEST_CASE("power_proportionality zero-vote candidate takes all the mass") {
  const Election e(line_metric({0.0, 2.0}), {0, 1}, {0, 0});
  const Outcome o = power_proportionality(e);
  CHECK(entry_for(o, 1).prob == 1.0);
  CHECK(entry_for(o, 0).prob == 0.0);
  CHECK(o.limit_convention);
  CHECK_FALSE(power_proportionality(e.with_actions({0, 1})).limit_convention);
}

TEST_CASE("power_proportionality duplicates give zero rest-distance and take the mass") {
  // Candidates at 0, 2, 0: the two co-located candidates have d(y, rest) = 0,
  // so the mass splits between them regardless of votes.
  const Election e(line_metric({0.0, 2.0, 0.0, 1.0}), {0, 1, 2}, {0, 1},
                   std::vector<double>{0.0, 2.0, 0.0});
  const Outcome o = power_proportionality(e);
  CHECK(*entry_for(o, 0).exact == make_rational(1, 2));
  CHECK(*entry_for(o, 2).exact == make_rational(1, 2));
  CHECK(entry_for(o, 1).prob == 0.0);
}

TEST_CASE("power_proportionality falls back to decimals when fractions overflow") {
  const int m = 8;
  std::vector<int> ids(8);
  for (int j = 0; j < m; ++j) ids[static_cast<std::size_t>(j)] = j;
  const Election e(simplex_metric(m, 1000.0), ids, ids);
  const Outcome o = power_proportionality(e);
  for (const OutcomeEntry& entry : o.entries) {
    CHECK(entry.prob == doctest::Approx(1.0 / m).epsilon(1e-12));
    CHECK_FALSE(entry.exact.has_value());
  }
  CHECK_NOTHROW(check_outcome(o, m));
}

TEST_CASE("power_proportionality is scale invariant") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const InstanceBundle b = random_election(rng(), 2 + trial % 3, 4, 7, MetricKind::random_metric);
    const Outcome base = power_proportionality(b.election);

    const double scale = 3.5;
    std::vector<double> scaled = b.election.metric().raw();
    for (double& v : scaled) v *= scale;
    const Election se(FiniteMetric(b.election.metric().labels(), scaled), b.election.candidates(),
                      b.election.actions());
    const Outcome after = power_proportionality(se);
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
      CHECK(after.entries[i].prob == doctest::Approx(base.entries[i].prob).epsilon(1e-12));
    }
  }
}

TEST_CASE("proportionality distribution") {
  const Election e(simplex_metric(3, 2.0), {0, 1, 2}, {0, 0, 1, 2});
  const Outcome o = proportionality(e);
  CHECK(*entry_for(o, 0).exact == make_rational(2, 8));
  CHECK(*entry_for(o, 1).exact == make_rational(3, 8));
  CHECK(*entry_for(o, 2).exact == make_rational(3, 8));

  // Two candidates: eliminate a candidate with probability of the other side.
  const Election two(line_metric({0.0, 2.0}), {0, 1}, {0, 0, 1});
  const Outcome ot = proportionality(two);
  CHECK(*entry_for(ot, 0).exact == make_rational(1, 3));

  // Unanimous favorite is never eliminated.
  const Election fans(line_metric({0.0, 2.0}), {0, 1}, {0, 0, 0, 0});
  const Outcome of = proportionality(fans);
  CHECK(entry_for(of, 0).prob == 0.0);
  CHECK(entry_for(of, 1).prob == 1.0);
}

TEST_CASE("left_or_right cases") {
  const FiniteMetric grid = line_metric({0.0, 4.0, 8.0});
  const std::vector<int> cands = {0, 1, 2};
  const std::vector<double> coords = {0.0, 4.0, 8.0};

  const Outcome balanced = left_or_right(Election(grid, cands, {1, 2}, coords));
  CHECK(entry_for(balanced, 0).prob == 0.5);
  CHECK(entry_for(balanced, 2).prob == 0.5);

  const Outcome left_heavy = left_or_right(Election(grid, cands, {0, 0, 2}, coords));
  CHECK(*entry_for(left_heavy, 0).exact == make_rational(6, 13));
  CHECK(*entry_for(left_heavy, 2).exact == make_rational(7, 13));

  const Outcome right_heavy = left_or_right(Election(grid, cands, {2, 2, 2}, coords));
  CHECK(*entry_for(right_heavy, 0).exact == make_rational(7, 13));
  CHECK(*entry_for(right_heavy, 2).exact == make_rational(6, 13));

  // Support is only the two endpoint eliminations.
  for (const Outcome* o : {&balanced, &left_heavy, &right_heavy}) {
    REQUIRE(o->entries.size() == 2);
    CHECK_FALSE(o->degenerate);
  }
}

TEST_CASE("left_or_right with coincident candidates flags the degenerate case") {
  const Election e(line_metric({5.0, 5.0}), {0, 1}, {0, 1}, std::vector<double>{5.0, 5.0});
  const Outcome o = left_or_right(e);
  CHECK(o.degenerate);
  CHECK(o.entries[0].prob == 0.5);
  CHECK(o.entries[1].prob == 0.5);
}

TEST_CASE("left_or_right requires coordinates") {
  const Election e(line_metric({0.0, 2.0}), {0, 1}, {0, 1});
  CHECK_THROWS_AS(left_or_right(e), std::invalid_argument);
}

TEST_CASE("every mechanism outcome normalizes and projection rules are anonymous") {
  std::mt19937_64 rng(6021);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 5);
    const MetricKind kind = trial % 2 == 0 ? MetricKind::line : MetricKind::simplex;
    const InstanceBundle b = random_election(rng(), m, n, m + 2, kind);
    const Election& e = b.election;

    for (MechanismId id : {MechanismId::min_projection, MechanismId::power_proportionality,
                           MechanismId::max_projection, MechanismId::proportionality}) {
      const Outcome o = run_mechanism(id, e, m - 1);
      CHECK_NOTHROW(check_outcome(o, m));
    }
    if (kind == MetricKind::line) {
      CHECK_NOTHROW(check_outcome(left_or_right(e), m));
    }

    Election shuffled = permuted_voters(e, rng);
    CHECK(same_distribution(min_projection(e, m - 1), min_projection(shuffled, m - 1)));
    CHECK(same_distribution(max_projection(e, m - 1), max_projection(shuffled, m - 1)));
  }
}

TEST_CASE("min_projection matches an exhaustive argmin for general k") {
  std::mt19937_64 rng(31415);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    const InstanceBundle b = random_election(rng(), m, 4, m + 2, MetricKind::random_metric);
    const Election& e = b.election;
    for (int k = 1; k < m; ++k) {
      const Outcome o = min_projection(e, k);
      const Committee& chosen = o.entries[0].committee;
      const double chosen_pd =
          projection_distance_set(e, committee_winners(chosen, m));
      for (const Committee& c : enumerate_committees(m, k)) {
        const double pd = projection_distance_set(e, committee_winners(c, m));
        CHECK(chosen_pd <= pd + 1e-12);
        if (pd == chosen_pd) {
          // Lexicographically first among ties.
          CHECK_FALSE(c < chosen);
        }
      }
    }
  }
}

TEST_CASE("k validation") {
  const Election e = near_far_election();
  CHECK_THROWS_AS(run_mechanism(MechanismId::min_projection, e, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_mechanism(MechanismId::min_projection, e, 3), std::invalid_argument);
  CHECK_THROWS_AS(run_mechanism(MechanismId::proportionality, e, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_mechanism(MechanismId::power_proportionality, e, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_mechanism(MechanismId::left_or_right, e, 1), std::invalid_argument);
  CHECK_NOTHROW(run_mechanism(MechanismId::max_projection, e, 1));
}

TEST_CASE("mechanism ids round-trip") {
  for (MechanismId id :
       {MechanismId::min_projection, MechanismId::power_proportionality,
        MechanismId::max_projection, MechanismId::proportionality, MechanismId::left_or_right}) {
    CHECK(parse_mechanism(to_string(id)) == id);
  }
  CHECK_FALSE(parse_mechanism("borda").has_value());
}
