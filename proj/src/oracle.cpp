#include "jkres/oracle.hpp"

#include <map>
#include <utility>

namespace jkres {

namespace {

// The witness scaled to an integer vector; inner products with every beta
// stay strictly positive.
IntVec integer_witness(const LinearSystem& s) {
    Int scale = 1;
    for (const Rational& c : s.pointedness_witness)
        scale = int_lcm(scale, c.denominator());
    IntVec w(s.r);
    for (int i = 0; i < s.r; ++i)
        w[i] = s.pointedness_witness[i].numerator() * (scale / s.pointedness_witness[i].denominator());
    return w;
}

} // namespace

Int dp_count(const LinearSystem& s, const IntVec& xi, unsigned long long budget) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    IntVec w = integer_witness(s);
    Int bound = dot(xi, w);
    if (bound < 0) return 0;

    // table[(h, eta)] = number of ways to write eta from the generators seen
    // so far, where h = <eta, w> gives the ascending processing order.
    std::map<std::pair<Int, IntVec>, Int> table;
    table[{Int(0), IntVec(s.r, 0)}] = 1;
    for (const IntVec& beta : s.betas) {
        Int step = dot(beta, w); // >= 1 by pointedness
        // In-place sweep: entries added during the pass sit strictly ahead of
        // the iterator (larger h), so each is reached and extended in turn --
        // that is exactly the unbounded-repetition recurrence.
        for (auto it = table.begin(); it != table.end(); ++it) {
            Int h = it->first.first + step;
            if (h > bound) continue;
            IntVec point = it->first.second;
            for (int i = 0; i < s.r; ++i) point[i] += beta[i];
            table[{std::move(h), std::move(point)}] += it->second;
            if (table.size() > budget)
                throw Error(ErrorCode::BudgetExceeded,
                            "dp table passed " + std::to_string(budget) + " entries");
        }
    }
    auto hit = table.find({bound, xi});
    return hit == table.end() ? Int(0) : hit->second;
}

Rational oracle_volume(const LinearSystem& s, const IntVec& xi, unsigned long long budget) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    int d = s.n() - s.r;
    Int stride = 1;
    if (!s.unimodular)
        for (const BasisInfo& b : s.bases) stride = int_lcm(stride, b.abs_det);
    RatVec ts, ys;
    for (int k = 0; k <= d; ++k) {
        Int t = stride * k;
        IntVec target(xi.size());
        for (size_t i = 0; i < xi.size(); ++i) target[i] = t * xi[i];
        ts.emplace_back(t);
        ys.emplace_back(dp_count(s, target, budget));
    }
    RatVec coeffs = interpolate_coefficients(ts, ys);
    return coeffs.back();
}

RatVec interpolate_coefficients(const RatVec& xs, const RatVec& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw Error(ErrorCode::BadInput, "interpolation needs matching nonempty samples");
    size_t n = xs.size();
    // Newton divided differences, then expansion into monomial coefficients.
    RatVec dd = ys;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rational dx = xs[i] - xs[i - level];
            if (dx.is_zero()) throw Error(ErrorCode::BadInput, "repeated interpolation node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == level) break;
        }
    }
    // p(x) = dd[0] + dd[1](x-x0) + dd[2](x-x0)(x-x1) + ...
    RatVec coeffs(n, Rational(0));
    RatVec basis(n, Rational(0)); // coefficients of prod_{j<k} (x - x_j)
    basis[0] = Rational(1);
    size_t basis_len = 1;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < basis_len; ++i) coeffs[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            // multiply basis by (x - xs[k])
            RatVec next(n, Rational(0));
            for (size_t i = 0; i < basis_len; ++i) {
                next[i + 1] += basis[i];
                next[i] -= xs[k] * basis[i];
            }
            basis = std::move(next);
            ++basis_len;
        }
    }
    return coeffs;
}

} // namespace jkres
