#pragma once

#include <optional>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

// Exact-arithmetic phase-1 simplex (Bland's rule, so no cycling).
// Finds x >= 0 with A x = b, or reports infeasibility.  A is given row-major.
std::optional<RatVec> feasible_point(const std::vector<RatVec>& a_rows, const RatVec& b);

// Nonnegative combination of the generators hitting the target:
// returns x >= 0 with sum_a x[a] * gens[a] = target, or nullopt.
std::optional<RatVec> cone_combination(const std::vector<RatVec>& gens, const RatVec& target);

// A vector eta with <gens[a], eta> >= 1 for every a, or nullopt if none exists
// (i.e. the cone spanned by the generators is not pointed / contains a line).
std::optional<RatVec> pointedness_witness(const std::vector<RatVec>& gens);

} // namespace jkres
