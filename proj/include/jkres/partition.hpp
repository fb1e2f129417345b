#pragma once

#include "jkres/arrangement.hpp"
#include "jkres/mpoly.hpp"

namespace jkres {

// P_B(xi) = { x >= 0 : sum_a x_a beta_a = xi }.
struct PartitionPolytope {
    LinearSystem system;
    RatVec xi;
};

enum class PolyKind { Volume, Count };

// A polynomial in the symbolic target xi_1..xi_r valid on the closure of one
// chamber.  Volume kind is homogeneous of degree n-r; Count kind agrees with
// the lattice-point count at integral points of the closed chamber.
struct ChamberPolynomial {
    Chamber chamber;
    MPoly<Rational> poly; // variables are xi_1..xi_r
    PolyKind kind = PolyKind::Volume;
};

// E(t) = number of lattice points of the t-th dilate; coefficients stored
// from degree n-r down to the constant term.
struct EhrhartPolynomial {
    RatVec coefficients; // high -> low, length (n-r)+1

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Rational at(const Rational& t) const {
        Rational acc(0);
        for (const Rational& c : coefficients) acc = acc * t + c;
        return acc;
    }
    Rational leading() const {
        return coefficients.empty() ? Rational(0) : coefficients.front();
    }
};

struct VolumeResult {
    Rational value;
    bool feasible = true; // false: xi outside Cone(B), value is 0
};

struct CountResult {
    Int value;
    bool feasible = true;
};

// Lattice-normalized volume of P_B(xi): the limit of count(t*xi)/t^(n-r).
// Infeasible xi yields value 0 with feasible=false.
VolumeResult volume(const LinearSystem& s, const RatVec& xi);

// The volume as a homogeneous degree-(n-r) polynomial in symbolic xi, valid
// on the closure of the chamber.
ChamberPolynomial volume_polynomial(const LinearSystem& s, const Chamber& c);

// Number of lattice points of P_B(xi) by the residue pipeline.  Requires a
// unimodular system (throws NonUnimodular otherwise; use dp_count then).
CountResult count(const LinearSystem& s, const IntVec& xi);

// The counting polynomial of a chamber (symbolic xi), unimodular systems.
ChamberPolynomial count_polynomial(const LinearSystem& s, const Chamber& c);

// Ehrhart polynomial of P_B(xi): residue route for unimodular systems,
// exact interpolation of the dp oracle otherwise.  Throws Infeasible.
EhrhartPolynomial ehrhart(const LinearSystem& s, const IntVec& xi,
                          unsigned long long budget = 10000000ULL);

// Intersection-number functional of the toric quotient attached to the
// chamber: the JK residue of p(phi) / prod_a beta_a(phi).  Nonzero only for
// homogeneous components of degree n-r.
Rational toric_integral(const LinearSystem& s, const Chamber& c, const MPoly<Rational>& p);

} // namespace jkres
