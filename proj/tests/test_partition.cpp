#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jkres/models.hpp"
#include "jkres/oracle.hpp"
#include "jkres/partition.hpp"

using namespace jkres;

static LinearSystem tri() { return new_system({{1, 0}, {0, 1}, {1, 1}}); }

static LinearSystem triple() {
    std::vector<IntVec> betas;
    for (int k = 0; k < 3; ++k) betas.push_back({1, 0});
    for (int k = 0; k < 3; ++k) betas.push_back({0, 1});
    for (int k = 0; k < 3; ++k) betas.push_back({1, 1});
    return new_system(betas);
}

static MPoly<Rational> mono(std::vector<int> e, const Rational& c) {
    return MPoly<Rational>::monomial(e, c);
}

TEST_CASE("volume examples") {
    CHECK(volume(new_system({{1}, {1}}), {Rational(5)}).value == Rational(5));
    CHECK(volume(tri(), {Rational(3), Rational(2)}).value == Rational(2));
    CHECK(volume(new_system({{1}}), {Rational(4)}).value == Rational(1));

    VolumeResult out = volume(tri(), {Rational(-1), Rational(0)});
    CHECK(out.value == Rational(0));
    CHECK_FALSE(out.feasible);
    CHECK_THROWS_AS(volume(tri(), {Rational(1)}), Error); // wrong length
}

TEST_CASE("volume homogeneity along a ray") {
    LinearSystem t = tri();
    Rational base = volume(t, {Rational(3), Rational(2)}).value;
    for (long k : {2L, 5L, 7L}) {
        Rational tk(k, 3);
        CHECK(volume(t, {tk * Rational(3), tk * Rational(2)}).value == tk * base);
    }
}

TEST_CASE("volume polynomial examples") {
    LinearSystem t = tri();
    Chamber upper = chamber_of(t, {Rational(3), Rational(2)});
    CHECK(volume_polynomial(t, upper).poly == MPoly<Rational>::variable(1));
    CHECK(volume_polynomial(t, upper).kind == PolyKind::Volume);

    LinearSystem big = triple();
    Chamber c = resolve_chamber(big, {Rational(2), Rational(1)});
    // b^5 (7a^2 - 7ab + 2b^2) / 1680
    MPoly<Rational> want = mono({2, 5}, Rational(7, 1680)) + mono({1, 6}, Rational(-7, 1680)) +
                           mono({0, 7}, Rational(2, 1680));
    CHECK(volume_polynomial(big, c).poly == want);

    LinearSystem seg3 = new_system({{1}, {1}, {1}});
    Chamber ray = resolve_chamber(seg3, {Rational(1)});
    CHECK(volume_polynomial(seg3, ray).poly == mono({2}, Rational(1, 2)));
}

TEST_CASE("count examples") {
    CHECK(count(triple(), {Int(5), Int(2)}).value == 321);
    CHECK(count(new_system({{1}, {1}}), {Int(7)}).value == 8);
    CHECK(count(triple(), {Int(1), Int(1)}).value == 12);
}

TEST_CASE("count flags and gates") {
    CountResult miss = count(tri(), {Int(-1), Int(0)});
    CHECK(miss.value == 0);
    CHECK_FALSE(miss.feasible);
    try {
        count(new_system({{2}, {1}}), {Int(4)});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnimodular);
    }
    try {
        count_polynomial(new_system({{2}, {1}}),
                         resolve_chamber(new_system({{2}, {1}}), {Rational(1)}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnimodular);
    }
}

TEST_CASE("count polynomial examples") {
    LinearSystem big = triple();
    Chamber upper = resolve_chamber(big, {Rational(2), Rational(1)});
    MPoly<Rational> a = MPoly<Rational>::variable(0), b = MPoly<Rational>::variable(1);
    auto k = [](long v) { return MPoly<Rational>::constant(Rational(v)); };
    MPoly<Rational> g = k(1);
    for (long j = 1; j <= 5; ++j) g = g * (b + k(j));
    g = g * (k(7) * a * a - k(7) * a * b + k(2) * b * b + k(21) * a - k(9) * b + k(14));
    g = g.scaled_rational(Rational(1, 1680));
    CHECK(count_polynomial(big, upper).poly == g);
    CHECK(count_polynomial(big, upper).kind == PolyKind::Count);

    Chamber lower = resolve_chamber(big, {Rational(1), Rational(2)});
    MPoly<Rational> swapped = substitute(g, {b, a});
    CHECK(count_polynomial(big, lower).poly == swapped);

    LinearSystem t = tri();
    Chamber c = chamber_of(t, {Rational(3), Rational(2)});
    CHECK(count_polynomial(t, c).poly == b + k(1));
}

TEST_CASE("count polynomial evaluates to counts on the closed chamber") {
    LinearSystem t = triple();
    Chamber upper = resolve_chamber(t, {Rational(2), Rational(1)});
    MPoly<Rational> p = count_polynomial(t, upper).poly;
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= a; ++b) {
            Rational v = evaluate(p, {Rational(a), Rational(b)});
            CHECK(v == Rational(count(t, {Int(a), Int(b)}).value));
        }
}

TEST_CASE("ehrhart examples") {
    EhrhartPolynomial e1 = ehrhart(new_system({{1}, {1}}), {Int(1)});
    CHECK(e1.coefficients == RatVec{Rational(1), Rational(1)});

    EhrhartPolynomial e2 = ehrhart(new_system({{1}, {1}, {1}}), {Int(1)});
    CHECK(e2.coefficients == RatVec{Rational(1, 2), Rational(3, 2), Rational(1)});

    EhrhartPolynomial e3 = ehrhart(tri(), {Int(1), Int(1)});
    CHECK(e3.coefficients == RatVec{Rational(1), Rational(1)});
    CHECK(e3.at(Rational(9)) == Rational(10));

    CHECK(e2.degree() == 2);
    CHECK(e2.leading() == Rational(1, 2));
    CHECK(e2.at(Rational(3)) == Rational(10));
}

TEST_CASE("ehrhart of a non-unimodular system by oracle interpolation") {
    LinearSystem s = new_system({{2}, {1}});
    EhrhartPolynomial e = ehrhart(s, {Int(4)});
    // N(4t) = 2t + 1
    CHECK(e.coefficients == RatVec{Rational(2), Rational(1)});
    for (int t = 0; t <= 4; ++t)
        CHECK(e.at(Rational(t)) == Rational(dp_count(s, {Int(4 * t)})));

    LinearSystem point = new_system({{2}});
    CHECK(ehrhart(point, {Int(4)}).coefficients == RatVec{Rational(1)});

    try {
        ehrhart(tri(), {Int(-1), Int(0)});
        CHECK(false);
    } catch (const Error& e2) {
        CHECK(e2.code() == ErrorCode::Infeasible);
    }
}

TEST_CASE("ehrhart leading coefficient is the volume") {
    std::vector<std::pair<long, long>> points{{3, 2}, {1, 1}, {2, 5}};
    for (auto xi : points) {
        EhrhartPolynomial e = ehrhart(triple(), {Int(xi.first), Int(xi.second)});
        CHECK(e.leading() ==
              volume(triple(), {Rational(xi.first), Rational(xi.second)}).value);
        CHECK(e.coefficients.back() == Rational(1));
    }
}

TEST_CASE("toric integral examples") {
    LinearSystem seg3 = new_system({{1}, {1}, {1}});
    Chamber ray = resolve_chamber(seg3, {Rational(1)});
    CHECK(toric_integral(seg3, ray, MPoly<Rational>::variable(0, 2)) == Rational(1));
    CHECK(toric_integral(seg3, ray, MPoly<Rational>::variable(0)) == Rational(0));

    LinearSystem t = tri();
    Chamber upper = chamber_of(t, {Rational(3), Rational(2)});
    MPoly<Rational> p = MPoly<Rational>::variable(0).scaled_rational(Rational(3)) +
                        MPoly<Rational>::variable(1).scaled_rational(Rational(2));
    CHECK(toric_integral(t, upper, p) == Rational(2));
}

TEST_CASE("toric integral reproduces volume from the exponential slice") {
    // p = <xi,phi>^(n-r) / (n-r)!
    LinearSystem t = triple();
    RatVec xi{Rational(5), Rational(2)};
    Chamber c = resolve_chamber(t, xi);
    MPoly<Rational> lin = MPoly<Rational>::variable(0).scaled_rational(xi[0]) +
                          MPoly<Rational>::variable(1).scaled_rational(xi[1]);
    MPoly<Rational> p = lin.pow(7).scaled_rational(Rational(1) / Rational(factorial(7)));
    CHECK(toric_integral(t, c, p) == volume(t, xi).value);
}
