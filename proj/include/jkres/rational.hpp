#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jkres/error.hpp"

namespace jkres {

/// Arbitrary-precision integer. Everything in this toolkit is exact;
/// there is no floating point anywhere.
using Int = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw Error(ErrorCode::BadInput, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Accepts "p", "p/q", with optional sign on p.
    static Rational parse(const std::string& text);

    Int numerator() const { return Int(v_.get_num()); }
    Int denominator() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Integer value; caller must ensure is_integer().
    Int to_int() const {
        if (!is_integer()) throw Error(ErrorCode::Internal, "to_int on non-integer " + str());
        return numerator();
    }

    Rational inverse() const {
        if (is_zero()) throw Error(ErrorCode::BadInput, "inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorCode::BadInput, "division by zero");
        return wrap(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;
};

inline Rational operator*(const Int& n, const Rational& q) { return Rational(n) * q; }

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

Rational pow(const Rational& base, long exp);
Int factorial(int n);
Int int_lcm(const Int& a, const Int& b);

std::string int_to_string(const Int& n);
Int parse_int(const std::string& text);

RatVec to_rational_vec(const IntVec& v);

} // namespace jkres
