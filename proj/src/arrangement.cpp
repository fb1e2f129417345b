#include "jkres/arrangement.hpp"

#include <algorithm>

#include "jkres/simplex.hpp"

namespace jkres {

namespace {

RatVec beta_as_rat(const IntVec& b) { return to_rational_vec(b); }

void enumerate_bases_rec(const LinearSystem& s, int from, std::vector<int>& picked,
                         std::vector<BasisInfo>& out) {
    if (static_cast<int>(picked.size()) == s.r) {
        std::vector<RatVec> cols;
        cols.reserve(s.r);
        for (int idx : picked) cols.push_back(beta_as_rat(s.betas[idx]));
        RatMatrix m = RatMatrix::from_columns(cols);
        Rational d = det(m);
        if (d.is_zero()) return;
        BasisInfo info;
        info.indices = picked;
        info.abs_det = d.abs().to_int();
        info.inverse = *try_inverse(m);
        out.push_back(std::move(info));
        return;
    }
    int need = s.r - static_cast<int>(picked.size());
    for (int i = from; i + need <= s.n(); ++i) {
        picked.push_back(i);
        enumerate_bases_rec(s, i + 1, picked, out);
        picked.pop_back();
    }
}

} // namespace

const BasisInfo* LinearSystem::find_basis(const std::vector<int>& indices) const {
    auto it = std::lower_bound(bases.begin(), bases.end(), indices,
                               [](const BasisInfo& b, const std::vector<int>& key) {
                                   return b.indices < key;
                               });
    if (it != bases.end() && it->indices == indices) return &*it;
    return nullptr;
}

LinearSystem new_system(const std::vector<IntVec>& betas) {
    if (betas.empty()) throw Error(ErrorCode::BadInput, "no forms given");
    LinearSystem s;
    s.r = static_cast<int>(betas[0].size());
    if (s.r == 0) throw Error(ErrorCode::BadInput, "zero ambient rank");
    for (size_t a = 0; a < betas.size(); ++a) {
        if (static_cast<int>(betas[a].size()) != s.r)
            throw Error(ErrorCode::BadInput, "forms have inconsistent lengths");
        bool zero = std::all_of(betas[a].begin(), betas[a].end(),
                                [](const Int& x) { return x == 0; });
        if (zero)
            throw Error(ErrorCode::ZeroForm, "form " + std::to_string(a) + " is zero");
    }
    s.betas = betas;

    std::vector<RatVec> rows;
    rows.reserve(betas.size());
    for (const auto& b : betas) rows.push_back(beta_as_rat(b));
    if (rank(RatMatrix::from_rows(rows)) < s.r)
        throw Error(ErrorCode::NotSpanning, "forms do not span the ambient space");

    auto eta = pointedness_witness(rows);
    if (!eta)
        throw Error(ErrorCode::NotPointed, "forms are not contained in an open half-space");
    s.pointedness_witness = *eta;

    std::vector<int> picked;
    enumerate_bases_rec(s, 0, picked, s.bases);
    s.unimodular = std::all_of(s.bases.begin(), s.bases.end(),
                               [](const BasisInfo& b) { return b.abs_det == 1; });
    return s;
}

const std::vector<BasisInfo>& enumerate_bases(const LinearSystem& s) { return s.bases; }

ConeLocation cone_contains(const std::vector<RatVec>& sigma, const RatVec& xi) {
    if (sigma.empty()) throw Error(ErrorCode::BadInput, "empty subset");
    size_t dim = xi.size();
    // Coordinates of xi in span(sigma): least-squares-free exact approach via
    // row reduction of [sigma | xi] as columns.
    std::vector<RatVec> cols = sigma;
    cols.push_back(xi);
    RatMatrix m = RatMatrix::from_columns(cols);
    if (m.rows != static_cast<int>(dim)) throw Error(ErrorCode::BadInput, "dimension mismatch");
    // Row-reduce; xi in span(sigma) iff last column is not a pivot column.
    auto a = m.entries;
    int rows = m.rows, colsn = m.cols;
    std::vector<int> pivot_col_of_row;
    int rr = 0;
    for (int c = 0; c < colsn && rr < rows; ++c) {
        int p = -1;
        for (int i = rr; i < rows; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[rr]);
        Rational inv = a[rr][c].inverse();
        for (int j = c; j < colsn; ++j) a[rr][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rr || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = c; j < colsn; ++j) a[i][j] -= f * a[rr][j];
        }
        pivot_col_of_row.push_back(c);
        ++rr;
    }
    int k = static_cast<int>(sigma.size());
    int pivots_in_sigma = 0;
    for (int c : pivot_col_of_row)
        if (c < k) ++pivots_in_sigma;
    if (pivots_in_sigma != k)
        throw Error(ErrorCode::BadInput, "subset is linearly dependent");
    if (!pivot_col_of_row.empty() && pivot_col_of_row.back() == colsn - 1)
        return ConeLocation::Outside; // xi outside span(sigma)
    // Coordinates: row i of reduced system gives coefficient of sigma[pivot...] = i-th.
    bool has_zero = false;
    for (int i = 0; i < k; ++i) {
        const Rational& coord = a[i][colsn - 1];
        if (coord.sign() < 0) return ConeLocation::Outside;
        if (coord.is_zero()) has_zero = true;
    }
    return has_zero ? ConeLocation::Boundary : ConeLocation::Interior;
}

ConeLocation cone_contains(const LinearSystem& s, const std::vector<int>& sigma, const RatVec& xi) {
    std::vector<RatVec> vecs;
    vecs.reserve(sigma.size());
    for (int i : sigma) {
        if (i < 0 || i >= s.n()) throw Error(ErrorCode::BadInput, "index out of range");
        vecs.push_back(beta_as_rat(s.betas[i]));
    }
    return cone_contains(vecs, xi);
}

bool is_regular(const LinearSystem& s, const RatVec& xi) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    // The empty subset spans the cone {0}, so the origin is never regular.
    bool zero = true;
    for (const Rational& x : xi)
        if (!x.is_zero()) { zero = false; break; }
    if (zero) return false;
    // Check all independent subsets of size <= r-1; subsets of larger cones
    // are covered by testing every maximal independent subset's sub-cones, so
    // we simply walk all subsets of size <= r-1 and skip dependent ones.
    int n = s.n();
    std::vector<int> picked;
    bool regular = true;
    auto rec = [&](auto&& self, int from) -> void {
        if (!regular) return;
        if (!picked.empty()) {
            std::vector<RatVec> vecs;
            for (int i : picked) vecs.push_back(beta_as_rat(s.betas[i]));
            if (rank(RatMatrix::from_columns(vecs)) == static_cast<int>(vecs.size())) {
                if (cone_contains(vecs, xi) != ConeLocation::Outside) {
                    regular = false;
                    return;
                }
            } else {
                return; // dependent: supersets are dependent too
            }
        }
        if (static_cast<int>(picked.size()) == s.r - 1) return;
        for (int i = from; i < n; ++i) {
            picked.push_back(i);
            self(self, i + 1);
            picked.pop_back();
            if (!regular) return;
        }
    };
    rec(rec, 0);
    return regular;
}

bool in_cone(const LinearSystem& s, const RatVec& xi) {
    std::vector<RatVec> gens;
    gens.reserve(s.betas.size());
    for (const auto& b : s.betas) gens.push_back(beta_as_rat(b));
    return cone_combination(gens, xi).has_value();
}

namespace {

// Sign of a polynomial in eps (coefficients ordered by ascending power) for
// all sufficiently small eps > 0: the sign of the first nonzero coefficient.
int eps_sign(const RatVec& coeffs) {
    for (const Rational& c : coeffs)
        if (!c.is_zero()) return c.sign();
    return 0;
}

// The default perturbation direction: an interior point of Cone(B).
RatVec default_delta(const LinearSystem& s) {
    RatVec delta(s.r, Rational(0));
    Int w = 1;
    for (int a = 0; a < s.n(); ++a) {
        for (int i = 0; i < s.r; ++i) delta[i] += Rational(w) * Rational(s.betas[a][i]);
        w *= 2;
    }
    return delta;
}

} // namespace

std::vector<std::vector<int>> limit_feasible_bases(const LinearSystem& s, const RatVec& xi,
                                                   const RatVec& delta) {
    if (static_cast<int>(xi.size()) != s.r || static_cast<int>(delta.size()) != s.r)
        throw Error(ErrorCode::BadInput, "vector has wrong length");
    int n = s.n();
    std::vector<std::vector<int>> fb;
    for (const BasisInfo& basis : s.bases) {
        // Coordinate polynomials in eps: inverse * (xi, delta, beta_0, ..., beta_{n-1}).
        std::vector<RatVec> coord(s.r, RatVec(n + 2, Rational(0)));
        auto accumulate = [&](const RatVec& vec, int power) {
            for (int i = 0; i < s.r; ++i) {
                Rational c(0);
                for (int j = 0; j < s.r; ++j) c += basis.inverse.entries[i][j] * vec[j];
                coord[i][power] = c;
            }
        };
        accumulate(xi, 0);
        accumulate(delta, 1);
        for (int a = 0; a < n; ++a) accumulate(beta_as_rat(s.betas[a]), a + 2);
        bool inside = true;
        for (int i = 0; i < s.r && inside; ++i) {
            int sign = eps_sign(coord[i]);
            if (sign == 0)
                throw Error(ErrorCode::Internal, "perturbation tie not broken");
            if (sign < 0) inside = false;
        }
        if (inside) fb.push_back(basis.indices);
    }
    std::sort(fb.begin(), fb.end());
    return fb;
}

std::optional<Chamber> limit_chamber(const LinearSystem& s, const RatVec& xi,
                                     const RatVec& delta) {
    std::vector<std::vector<int>> fb = limit_feasible_bases(s, xi, delta);
    if (fb.empty()) return std::nullopt;

    // Find an honest rational representative: walk xi + t*delta + sum_a
    // t^(a+1) beta_a for t = 1/2, 1/4, ... until the point is regular with
    // exactly these bases.
    int n = s.n();
    Rational t(1, 2);
    for (int attempt = 0; attempt < 512; ++attempt) {
        RatVec point = xi;
        for (int i = 0; i < s.r; ++i) point[i] += t * delta[i];
        Rational tp = t * t;
        for (int a = 0; a < n; ++a) {
            for (int i = 0; i < s.r; ++i) point[i] += tp * Rational(s.betas[a][i]);
            tp *= t;
        }
        if (is_regular(s, point)) {
            Chamber c;
            c.representative = point;
            for (const BasisInfo& basis : s.bases)
                if (cone_contains(s, basis.indices, point) == ConeLocation::Interior)
                    c.feasible_bases.push_back(basis.indices);
            std::sort(c.feasible_bases.begin(), c.feasible_bases.end());
            if (c.feasible_bases == fb) return c;
        }
        t *= Rational(1, 2);
    }
    throw Error(ErrorCode::Internal, "no rational representative found");
}

bool closure_contains(const LinearSystem& s, const Chamber& c, const RatVec& x) {
    if (static_cast<int>(x.size()) != s.r) throw Error(ErrorCode::BadInput, "x has wrong length");
    RatVec toward(s.r);
    bool same_point = true;
    for (int i = 0; i < s.r; ++i) {
        toward[i] = c.representative[i] - x[i];
        if (!toward[i].is_zero()) same_point = false;
    }
    if (same_point) return true;
    return limit_feasible_bases(s, x, toward) == c.feasible_bases;
}

Chamber chamber_of(const LinearSystem& s, const RatVec& xi) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    if (!is_regular(s, xi)) throw Error(ErrorCode::NotRegular, "xi lies on a wall");
    if (!in_cone(s, xi)) throw Error(ErrorCode::OutsideCone, "xi is not in the cone of the system");
    Chamber c;
    c.representative = xi;
    for (const BasisInfo& basis : s.bases)
        if (cone_contains(s, basis.indices, xi) == ConeLocation::Interior)
            c.feasible_bases.push_back(basis.indices);
    std::sort(c.feasible_bases.begin(), c.feasible_bases.end());
    return c;
}

Chamber resolve_chamber(const LinearSystem& s, const RatVec& xi) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    if (!in_cone(s, xi)) throw Error(ErrorCode::Infeasible, "xi is not in the cone of the system");
    if (is_regular(s, xi)) return chamber_of(s, xi);
    auto c = limit_chamber(s, xi, default_delta(s));
    if (!c)
        throw Error(ErrorCode::Internal, "interior perturbation left the cone");
    return *c;
}

} // namespace jkres
