#pragma once

#include "jkres/arrangement.hpp"

namespace jkres {

// Brute-force reference count of { x >= 0 integer : sum_a x_a beta_a = xi }.
// Classic coin-change dynamic program over lattice points, bounded by the
// system's pointedness witness; completely independent of the residue
// pipeline.  Throws BudgetExceeded when the table grows past `budget`.
Int dp_count(const LinearSystem& s, const IntVec& xi, unsigned long long budget = 10000000ULL);

// Volume as the leading coefficient of the interpolated dilation counts
// t -> dp_count(t*xi).  Sample stride is 1 for unimodular systems, otherwise
// the lcm of all basis determinants (so samples stay on one polynomial piece).
Rational oracle_volume(const LinearSystem& s, const IntVec& xi,
                       unsigned long long budget = 10000000ULL);

// Coefficients (constant first) of the unique polynomial of degree
// < xs.size() through the given points.  Nodes must be distinct.
RatVec interpolate_coefficients(const RatVec& xs, const RatVec& ys);

} // namespace jkres
