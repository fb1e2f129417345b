#pragma once

#include <optional>
#include <vector>

#include "jkres/matrix.hpp"
#include "jkres/rational.hpp"

namespace jkres {

// An independent r-subset of the system's forms, with data cached for the
// residue machinery: |det| and the inverse of the column matrix (used to
// rewrite polynomials in the coordinates u_i = <beta_i, v>).
struct BasisInfo {
    std::vector<int> indices; // ascending, 0-based
    Int abs_det;
    RatMatrix inverse;        // inverse of the matrix whose columns are the basis forms
};

struct LinearSystem {
    int r = 0;                     // ambient rank
    std::vector<IntVec> betas;     // n nonzero integer covectors of length r
    RatVec pointedness_witness;    // eta with <beta_a, eta> > 0 for all a

    // Cached at construction:
    std::vector<BasisInfo> bases;  // all independent r-subsets, lex order
    bool unimodular = false;       // every basis has |det| = 1

    int n() const { return static_cast<int>(betas.size()); }
    const BasisInfo* find_basis(const std::vector<int>& indices) const;
};

struct Chamber {
    RatVec representative;                        // a regular point interior to the chamber
    std::vector<std::vector<int>> feasible_bases; // sorted lexicographically

    bool operator==(const Chamber& other) const {
        return feasible_bases == other.feasible_bases;
    }
};

enum class ConeLocation { Interior, Boundary, Outside };

// Validates the forms (nonzero, spanning, pointed), finds a witness and
// enumerates all bases.  Throws ZeroForm / NotSpanning / NotPointed.
LinearSystem new_system(const std::vector<IntVec>& betas);

// The independent r-subsets (same list the system caches).
const std::vector<BasisInfo>& enumerate_bases(const LinearSystem& s);

// Where xi sits relative to the cone spanned by the (independent) vectors:
// solve within their span; all coordinates > 0 -> Interior, >= 0 with a zero
// -> Boundary, otherwise (negative coordinate or outside the span) -> Outside.
ConeLocation cone_contains(const std::vector<RatVec>& sigma, const RatVec& xi);
ConeLocation cone_contains(const LinearSystem& s, const std::vector<int>& sigma, const RatVec& xi);

// xi is regular iff it avoids every cone spanned by at most r-1 of the forms.
bool is_regular(const LinearSystem& s, const RatVec& xi);

// Is xi a nonnegative combination of the forms?  (Exact simplex.)
bool in_cone(const LinearSystem& s, const RatVec& xi);

// Chamber of a regular xi inside Cone(B).  Throws NotRegular / OutsideCone.
Chamber chamber_of(const LinearSystem& s, const RatVec& xi);

// Chamber whose closure contains xi, picked deterministically for non-regular
// xi by nudging along delta = sum_a 2^(a-1) beta_a; residual ties are broken
// by higher-order terms xi + eps*delta + sum_a eps^(a+1) beta_a, evaluated
// symbolically in eps (sign of the first nonzero coefficient).  Throws
// Infeasible when xi is not in Cone(B).
Chamber resolve_chamber(const LinearSystem& s, const RatVec& xi);

// Feasible bases of xi + eps*delta + sum_a eps^(a+1) beta_a for infinitesimal
// eps > 0 (the chamber reached from xi by an infinitesimal step toward delta;
// the beta terms only break ties left by delta).
std::vector<std::vector<int>> limit_feasible_bases(const LinearSystem& s, const RatVec& xi,
                                                   const RatVec& delta);

// The chamber those bases belong to, with an honest rational representative,
// or nullopt when the perturbed point leaves Cone(B) (empty basis set).
std::optional<Chamber> limit_chamber(const LinearSystem& s, const RatVec& xi,
                                     const RatVec& delta);

// Is x in the closed chamber?  Decided exactly: x is in closure(c) iff an
// infinitesimal step from x toward the chamber's representative lands in c.
bool closure_contains(const LinearSystem& s, const Chamber& c, const RatVec& x);

} // namespace jkres
