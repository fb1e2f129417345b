#pragma once

#include <optional>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

// Dense matrices, row-major.  Small sizes only (ranks in this project are
// single digits), so plain fraction-arithmetic Gaussian elimination is fine.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<IntVec> entries; // entries[i] is row i, length cols

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(r, IntVec(c, 0)) {}
};

struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<RatVec> entries;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), entries(r, RatVec(c, Rational(0))) {}

    static RatMatrix from_int(const IntMatrix& m);
    // Columns are the given vectors.
    static RatMatrix from_columns(const std::vector<RatVec>& cols_in);
    static RatMatrix from_rows(const std::vector<RatVec>& rows_in);
};

// Exact determinant by fraction-free-ish Gaussian elimination over Q.
// Throws Error(BadInput) if the matrix is not square.
Rational det(const RatMatrix& m);
Int det(const IntMatrix& m);

// Solve A x = b exactly where A is square.  Returns nullopt if A is singular.
std::optional<RatVec> try_solve(const RatMatrix& a, const RatVec& b);

// Express w in the basis given by the columns `basis` (each a vector of the
// ambient dimension).  Throws Error(BadInput) if the vectors are dependent or
// the count does not match the ambient dimension.
RatVec solve_in_basis(const std::vector<RatVec>& basis, const RatVec& w);

// Rank of the matrix over Q.
int rank(const RatMatrix& m);

// Kernel basis: returns vectors k with A k = 0 spanning the null space.
std::vector<RatVec> kernel(const RatMatrix& m);

// Inverse of a square nonsingular matrix; nullopt if singular.
std::optional<RatMatrix> try_inverse(const RatMatrix& m);

// Dot products / small vector helpers used throughout.
Rational dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
Rational dot_mixed(const IntVec& a, const RatVec& b);

} // namespace jkres
