#pragma once

#include <string>
#include <utility>

#include "jkres/arrangement.hpp"

namespace jkres {

struct ModelInstance {
    LinearSystem system;
    IntVec xi;
    std::string label;
};

// Positive roots of A_ell in simple-root coordinates: for 1 <= i <= j <= ell
// the 0/1 vector supported on positions i..j, ordered by length (j-i) then by
// start position.  count() on this system is the Kostant partition function.
LinearSystem kostant_system(int ell);

// k x ell transportation arrays: variables x_ij in row-major order, ambient
// rank k+ell-1 (the last column-sum constraint is dropped as redundant):
// beta_ij = e_i + f_j for j < ell, beta_il = e_i.
LinearSystem transportation_system(int k, int ell);

// Right-hand side for given margins: (r_1..r_k, c_1..c_{ell-1}).  Checks
// nonnegativity and sum r == sum c (MarginMismatch).
IntVec margins_to_xi(const IntVec& rows, const IntVec& cols);

// Incidence system of a digraph: one form per arc, +1 at the tail, -1 at the
// head, with the largest-labelled vertex's coordinate dropped (the redundant
// conservation constraint).  The digraph must be connected as an undirected
// graph (Disconnected otherwise); an orientation with a directed cycle fails
// the pointedness check in new_system.
LinearSystem network_system(const std::vector<std::pair<int, int>>& arcs);

} // namespace jkres
