#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

// Sparse multivariate polynomials over a generic commutative coefficient ring
// C.  The same engine runs with C = Rational (numeric queries) and with
// C = MPoly<Rational> (symbolic xi, producing chamber polynomials).
//
// Exponent keys are canonical: trailing zeros stripped, so the number of
// variables is implicit and zero-padded keys denote the same monomial.

template <typename C> class MPoly;

template <typename T> struct RingTraits;

template <> struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational from_rational(const Rational& q) { return q; }
    static Rational scale(const Rational& x, const Rational& q) { return x * q; }
};

template <typename C> struct RingTraits<MPoly<C>> {
    static MPoly<C> zero() { return MPoly<C>(); }
    static MPoly<C> one() { return MPoly<C>::constant(RingTraits<C>::one()); }
    static bool is_zero(const MPoly<C>& p) { return p.is_zero(); }
    static MPoly<C> from_rational(const Rational& q) {
        return MPoly<C>::constant(RingTraits<C>::from_rational(q));
    }
    static MPoly<C> scale(const MPoly<C>& p, const Rational& q) { return p.scaled_rational(q); }
};

template <typename C>
class MPoly {
  public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, C>; // lex order on keys: deterministic iteration

    MPoly() = default;

    static MPoly constant(const C& c) {
        MPoly p;
        p.add_term({}, c);
        return p;
    }

    static MPoly variable(int i, int power = 1) {
        Exponents e(i + 1, 0);
        e[i] = power;
        MPoly p;
        p.add_term(std::move(e), RingTraits<C>::one());
        return p;
    }

    static MPoly monomial(Exponents e, const C& c) {
        MPoly p;
        p.add_term(std::move(e), c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    // Max total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }

    void add_term(Exponents e, const C& c) {
        if (RingTraits<C>::is_zero(c)) return;
        normalize(e);
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second = it->second + c;
            if (RingTraits<C>::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coefficient(Exponents e) const {
        normalize(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? RingTraits<C>::zero() : it->second;
    }

    MPoly homogeneous_component(int d) const {
        MPoly out;
        for (const auto& [e, c] : terms_)
            if (total(e) == d) out.terms_.emplace(e, c);
        return out;
    }

    MPoly truncated(int maxdeg) const {
        MPoly out;
        for (const auto& [e, c] : terms_)
            if (total(e) <= maxdeg) out.terms_.emplace(e, c);
        return out;
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MPoly operator+(const MPoly& o) const {
        MPoly out = *this;
        out += o;
        return out;
    }

    MPoly operator-() const {
        MPoly out;
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, RingTraits<C>::scale(c, Rational(-1)));
        return out;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const { return mul_truncated(o, -1); }

    // cutoff < 0 means no truncation.
    MPoly mul_truncated(const MPoly& o, int cutoff) const {
        MPoly out;
        for (const auto& [e1, c1] : terms_) {
            int d1 = total(e1);
            for (const auto& [e2, c2] : o.terms_) {
                if (cutoff >= 0 && d1 + total(e2) > cutoff) continue;
                out.add_term(add_exps(e1, e2), c1 * c2);
            }
        }
        return out;
    }

    MPoly scaled(const C& c) const {
        MPoly out;
        if (RingTraits<C>::is_zero(c)) return out;
        for (const auto& [e, k] : terms_) out.add_term(e, k * c);
        return out;
    }

    MPoly scaled_rational(const Rational& q) const {
        MPoly out;
        if (q.is_zero()) return out;
        for (const auto& [e, k] : terms_) out.add_term(e, RingTraits<C>::scale(k, q));
        return out;
    }

    MPoly pow(int k) const { return pow_truncated(k, -1); }

    MPoly pow_truncated(int k, int cutoff) const {
        if (k < 0) throw Error(ErrorCode::BadInput, "negative power");
        MPoly result = RingTraits<MPoly>::one();
        MPoly base = *this;
        while (k > 0) {
            if (k & 1) result = result.mul_truncated(base, cutoff);
            k >>= 1;
            if (k > 0) base = base.mul_truncated(base, cutoff);
        }
        return result;
    }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    static int total(const Exponents& e) {
        int t = 0;
        for (int x : e) t += x;
        return t;
    }

    static Exponents add_exps(const Exponents& a, const Exponents& b) {
        Exponents out(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
        // no normalize needed: sum of nonneg with nonzero tails stays nonzero,
        // unless one side is empty; strip to be safe
        normalize(out);
        return out;
    }

    static void normalize(Exponents& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        for (int x : e)
            if (x < 0) throw Error(ErrorCode::BadInput, "negative exponent");
    }

  private:
    Terms terms_;
};

// Lift a rational-coefficient polynomial into coefficient ring C.
template <typename C>
MPoly<C> lift_poly(const MPoly<Rational>& p) {
    MPoly<C> out;
    for (const auto& [e, q] : p.terms()) out.add_term(e, RingTraits<C>::from_rational(q));
    return out;
}

template <>
inline MPoly<Rational> lift_poly<Rational>(const MPoly<Rational>& p) {
    return p;
}

// Substitute variable i by images[i] (rational-coefficient polynomials);
// coefficients in C pass through.  Missing images default to 0.
template <typename C>
MPoly<C> substitute(const MPoly<C>& p, const std::vector<MPoly<Rational>>& images) {
    std::vector<std::vector<MPoly<Rational>>> powers(images.size()); // powers[i][k] = images[i]^k
    auto power_of = [&](size_t i, int k) -> const MPoly<Rational>& {
        if (i >= powers.size())
            throw Error(ErrorCode::BadInput, "substitute: no image for a used variable");
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(RingTraits<MPoly<Rational>>::one());
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    MPoly<C> out;
    for (const auto& [e, c] : p.terms()) {
        MPoly<Rational> mono = RingTraits<MPoly<Rational>>::one();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) mono = mono * power_of(i, e[i]);
        for (const auto& [me, mq] : mono.terms())
            out.add_term(me, RingTraits<C>::scale(c, mq));
    }
    return out;
}

Rational evaluate(const MPoly<Rational>& p, const RatVec& point);

// Human-readable rendering, e.g. "7/2*x1^2*x2 - x2 + 1"; names indexed by variable.
std::string poly_to_string(const MPoly<Rational>& p, const std::vector<std::string>& names);

// Truncated power series: an MPoly plus a total-degree cutoff that all
// arithmetic respects.
template <typename C>
struct TruncSeries {
    MPoly<C> poly;
    int cutoff = 0;

    TruncSeries() = default;
    TruncSeries(const MPoly<C>& p, int d) : poly(p.truncated(d)), cutoff(d) {}

    TruncSeries operator*(const TruncSeries& o) const {
        int d = std::min(cutoff, o.cutoff);
        TruncSeries out;
        out.poly = poly.mul_truncated(o.poly, d);
        out.cutoff = d;
        return out;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        int d = std::min(cutoff, o.cutoff);
        TruncSeries out;
        out.poly = (poly + o.poly).truncated(d);
        out.cutoff = d;
        return out;
    }
};

// sum over k of coeffs[k] * x^k, truncated at total degree d.  The argument
// must have zero constant term, or composition would not terminate honestly.
template <typename C>
TruncSeries<C> series_compose(const RatVec& coeffs, const MPoly<C>& x, int d) {
    if (!RingTraits<C>::is_zero(x.coefficient({})))
        throw Error(ErrorCode::BadInput, "series argument has nonzero constant term");
    TruncSeries<C> out;
    out.cutoff = d;
    MPoly<C> xpow = RingTraits<MPoly<C>>::one();
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (static_cast<int>(k) > d) break;
        if (k > 0) xpow = xpow.mul_truncated(x, d);
        if (xpow.is_zero()) break;
        out.poly += xpow.scaled_rational(coeffs[k]);
    }
    out.poly = out.poly.truncated(d);
    return out;
}

// exp(x) truncated at total degree d; x must have zero constant term.
template <typename C>
TruncSeries<C> exp_truncated(const MPoly<C>& x, int d) {
    RatVec coeffs(d + 1);
    Int fact = 1;
    for (int k = 0; k <= d; ++k) {
        if (k > 1) fact *= k;
        coeffs[k] = Rational(Int(1), fact);
    }
    return series_compose(coeffs, x, d);
}

} // namespace jkres
