#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "scv/election.hpp"

namespace scv {

enum class MechanismId {
  min_projection,
  power_proportionality,
  max_projection,
  proportionality,
  left_or_right,
};

std::string to_string(MechanismId id);
std::optional<MechanismId> parse_mechanism(std::string_view name);

// Deterministic: the size-k committee minimizing the projection distance of
// its winner set; ties broken by lexicographically smallest eliminated set.
Outcome min_projection(const Election& e, int k);

// Deterministic: the size-k committee whose eliminated set maximizes the
// projection distance; ties broken by lexicographically smallest eliminated set.
Outcome max_projection(const Election& e, int k);

// Randomized, k = m-1 only: P(eliminate y) proportional to
// (votes(y) * d(y, other candidates))^(-m). Candidates with zero votes or a
// zero distance to the rest get infinite weight; probability is then split
// uniformly over them and all finite-weight candidates get 0.
Outcome power_proportionality(const Election& e);

// Randomized, k = m-1 only: P(eliminate y) = (n - votes(y)) / ((m-1) n).
Outcome proportionality(const Election& e);

// Randomized, k = m-1 only, line-embedded elections. Eliminates the leftmost
// or the rightmost candidate; probabilities (6/13, 7/13), (7/13, 6/13) or
// (1/2, 1/2) depending on whether more votes fall on the left half
// [0, L/2] (closed at the midpoint) or the right half (L/2, L].
// With all candidates coincident the outcome is flagged degenerate and the
// two lexicographically first committees get 1/2 each.
Outcome left_or_right(const Election& e, std::span<const double> coords);

// Same, using the election's stored coordinates. Throws if absent.
Outcome left_or_right(const Election& e);

// Dispatch by id; validates that k = m-1 for the mechanisms that require it.
Outcome run_mechanism(MechanismId id, const Election& e, int k);

}  // namespace scv
