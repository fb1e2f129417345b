#include "jkres/partition.hpp"

#include "jkres/oracle.hpp"
#include "jkres/residue.hpp"

namespace jkres {

namespace {

std::map<int, int> all_forms_once(const LinearSystem& s) {
    std::map<int, int> denom;
    for (int a = 0; a < s.n(); ++a) denom[a] = 1;
    return denom;
}

template <typename C>
MPoly<C> pairing_power(const std::vector<C>& xi, int rank, int power) {
    MPoly<C> pairing;
    for (int i = 0; i < rank; ++i) pairing += MPoly<C>::variable(i).scaled(xi[i]);
    return pairing.pow(power);
}

std::vector<MPoly<Rational>> symbolic_xi(int rank) {
    std::vector<MPoly<Rational>> xi;
    xi.reserve(rank);
    for (int i = 0; i < rank; ++i) xi.push_back(MPoly<Rational>::variable(i));
    return xi;
}

} // namespace

VolumeResult volume(const LinearSystem& s, const RatVec& xi) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    if (!in_cone(s, xi)) return {Rational(0), false};
    Chamber c = resolve_chamber(s, xi);
    int d = s.n() - s.r;
    ArrFraction<Rational> f;
    f.numerator = pairing_power(xi, s.r, d);
    f.denominator = all_forms_once(s);
    Rational value = jk_residue(f, s, c) / Rational(factorial(d));
    return {value, true};
}

ChamberPolynomial volume_polynomial(const LinearSystem& s, const Chamber& c) {
    int d = s.n() - s.r;
    ArrFraction<MPoly<Rational>> f;
    f.numerator = pairing_power(symbolic_xi(s.r), s.r, d);
    f.denominator = all_forms_once(s);
    MPoly<Rational> value =
        jk_residue(f, s, c).scaled_rational(Rational(Int(1), factorial(d)));
    return {c, value, PolyKind::Volume};
}

CountResult count(const LinearSystem& s, const IntVec& xi) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    if (!s.unimodular)
        throw Error(ErrorCode::NonUnimodular,
                    "residue counting needs a unimodular system; use the dp oracle");
    RatVec xr = to_rational_vec(xi);
    if (!in_cone(s, xr)) return {Int(0), false};
    Chamber c = resolve_chamber(s, xr);
    int d = s.n() - s.r;
    ArrFraction<Rational> f;
    f.numerator = todd_product_truncation(s, xr, d).poly;
    f.denominator = all_forms_once(s);
    Rational value = jk_residue(f, s, c);
    if (!value.is_integer())
        throw Error(ErrorCode::Internal, "count came out non-integral: " + value.str());
    return {value.to_int(), true};
}

ChamberPolynomial count_polynomial(const LinearSystem& s, const Chamber& c) {
    if (!s.unimodular)
        throw Error(ErrorCode::NonUnimodular,
                    "residue counting needs a unimodular system; use the dp oracle");
    int d = s.n() - s.r;
    ArrFraction<MPoly<Rational>> f;
    f.numerator = todd_product_truncation(s, symbolic_xi(s.r), d).poly;
    f.denominator = all_forms_once(s);
    return {c, jk_residue(f, s, c), PolyKind::Count};
}

EhrhartPolynomial ehrhart(const LinearSystem& s, const IntVec& xi, unsigned long long budget) {
    if (static_cast<int>(xi.size()) != s.r) throw Error(ErrorCode::BadInput, "xi has wrong length");
    RatVec xr = to_rational_vec(xi);
    if (!in_cone(s, xr)) throw Error(ErrorCode::Infeasible, "xi is not in the cone of the system");
    int d = s.n() - s.r;
    RatVec high_to_low(d + 1, Rational(0));
    if (s.unimodular) {
        Chamber c = resolve_chamber(s, xr);
        MPoly<Rational> cp = count_polynomial(s, c).poly;
        // Restrict to the ray: substitute xi_i -> t * xi_i, t the single
        // remaining variable.
        std::vector<MPoly<Rational>> images(s.r);
        for (int i = 0; i < s.r; ++i)
            images[i] = MPoly<Rational>::variable(0).scaled_rational(Rational(xi[i]));
        MPoly<Rational> e = substitute(cp, images);
        for (const auto& [exp, coeff] : e.terms()) {
            int k = exp.empty() ? 0 : exp[0];
            if (k > d) throw Error(ErrorCode::Internal, "ehrhart degree overflow");
            high_to_low[d - k] = coeff;
        }
    } else {
        RatVec ts, ys;
        for (int t = 0; t <= d; ++t) {
            IntVec target(xi.size());
            for (size_t i = 0; i < xi.size(); ++i) target[i] = Int(t) * xi[i];
            ts.emplace_back(t);
            ys.emplace_back(dp_count(s, target, budget));
        }
        RatVec low_to_high = interpolate_coefficients(ts, ys);
        for (int k = 0; k <= d; ++k) high_to_low[d - k] = low_to_high[k];
    }
    return {high_to_low};
}

Rational toric_integral(const LinearSystem& s, const Chamber& c, const MPoly<Rational>& p) {
    ArrFraction<Rational> f;
    f.numerator = p;
    f.denominator = all_forms_once(s);
    return jk_residue(f, s, c);
}

} // namespace jkres
