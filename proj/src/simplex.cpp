#include "jkres/simplex.hpp"

namespace jkres {

namespace {

// Phase-1 tableau: columns 0..n-1 are the real variables, n..n+m-1 the
// artificials.  Bland's rule throughout.
struct Tableau {
    int m, n;                       // constraints, real variables
    std::vector<RatVec> a;          // m rows, n+m columns
    RatVec rhs;                     // length m, kept nonnegative
    std::vector<int> basis;         // basis[i] = column basic in row i

    Tableau(const std::vector<RatVec>& rows, const RatVec& b) {
        m = static_cast<int>(rows.size());
        n = m ? static_cast<int>(rows[0].size()) : 0;
        a.assign(m, RatVec(n + m, Rational(0)));
        rhs = b;
        basis.resize(m);
        for (int i = 0; i < m; ++i) {
            bool flip = rhs[i].sign() < 0;
            if (flip) rhs[i] = -rhs[i];
            for (int j = 0; j < n; ++j) a[i][j] = flip ? -rows[i][j] : rows[i][j];
            a[i][n + i] = Rational(1);
            basis[i] = n + i;
        }
    }

    void pivot(int row, int col) {
        Rational inv = a[row][col].inverse();
        for (int j = 0; j < n + m; ++j) a[row][j] *= inv;
        rhs[row] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (int j = 0; j < n + m; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Minimize the sum of artificial variables.  Returns the optimum.
    Rational run() {
        // Reduced cost of column j: c_j - sum over rows of (cost of basic var) * a[i][j],
        // with cost 1 on artificials and 0 on real variables.
        while (true) {
            int enter = -1;
            for (int j = 0; j < n + m; ++j) {
                Rational red = (j >= n) ? Rational(1) : Rational(0);
                for (int i = 0; i < m; ++i)
                    if (basis[i] >= n) red -= a[i][j];
                if (red.sign() < 0) { enter = j; break; } // Bland: first improving index
            }
            if (enter < 0) break;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter].sign() <= 0) continue;
                Rational ratio = rhs[i] * a[i][enter].inverse();
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                throw Error(ErrorCode::Internal, "phase-1 unbounded"); // cannot happen: objective >= 0
            pivot(leave, enter);
        }
        Rational obj(0);
        for (int i = 0; i < m; ++i)
            if (basis[i] >= n) obj += rhs[i];
        return obj;
    }

    RatVec solution() const {
        RatVec x(n, Rational(0));
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) x[basis[i]] = rhs[i];
        return x;
    }
};

} // namespace

std::optional<RatVec> feasible_point(const std::vector<RatVec>& a_rows, const RatVec& b) {
    if (a_rows.size() != b.size()) throw Error(ErrorCode::BadInput, "simplex: shape mismatch");
    Tableau t(a_rows, b);
    if (!t.run().is_zero()) return std::nullopt;
    return t.solution();
}

std::optional<RatVec> cone_combination(const std::vector<RatVec>& gens, const RatVec& target) {
    size_t dim = target.size();
    std::vector<RatVec> rows(dim, RatVec(gens.size(), Rational(0)));
    for (size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].size() != dim) throw Error(ErrorCode::BadInput, "generator dimension mismatch");
        for (size_t i = 0; i < dim; ++i) rows[i][j] = gens[j][i];
    }
    return feasible_point(rows, target);
}

std::optional<RatVec> pointedness_witness(const std::vector<RatVec>& gens) {
    if (gens.empty()) return RatVec();
    size_t dim = gens[0].size();
    size_t n = gens.size();
    // <gens[a], p - q> - t_a = 1 with p, q, t >= 0: variables (p | q | t).
    std::vector<RatVec> rows(n, RatVec(2 * dim + n, Rational(0)));
    RatVec b(n, Rational(1));
    for (size_t aidx = 0; aidx < n; ++aidx) {
        if (gens[aidx].size() != dim) throw Error(ErrorCode::BadInput, "generator dimension mismatch");
        for (size_t i = 0; i < dim; ++i) {
            rows[aidx][i] = gens[aidx][i];
            rows[aidx][dim + i] = -gens[aidx][i];
        }
        rows[aidx][2 * dim + aidx] = Rational(-1);
    }
    auto sol = feasible_point(rows, b);
    if (!sol) return std::nullopt;
    RatVec eta(dim);
    for (size_t i = 0; i < dim; ++i) eta[i] = (*sol)[i] - (*sol)[dim + i];
    return eta;
}

} // namespace jkres
