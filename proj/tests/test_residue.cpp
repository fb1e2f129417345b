#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "jkres/arrangement.hpp"
#include "jkres/residue.hpp"

using namespace jkres;

static LinearSystem tri() { return new_system({{1, 0}, {0, 1}, {1, 1}}); }

static MPoly<Rational> one() { return MPoly<Rational>::constant(Rational(1)); }

template <typename C>
static MPoly<C> form_poly(const LinearSystem& s, int i) {
    MPoly<C> out;
    for (int j = 0; j < s.r; ++j)
        if (s.betas[i][j] != 0)
            out += MPoly<C>::variable(j).scaled_rational(Rational(s.betas[i][j]));
    return out;
}

// Numerator of f after rescaling onto the common denominator.
template <typename C>
static MPoly<C> lift_to_common(const ArrFraction<C>& f, const std::map<int, int>& common,
                               const LinearSystem& s) {
    MPoly<C> out = f.numerator;
    for (const auto& [i, m] : common) {
        auto it = f.denominator.find(i);
        int have = it == f.denominator.end() ? 0 : it->second;
        for (int k = have; k < m; ++k) out = out * form_poly<C>(s, i);
    }
    return out;
}

// Exactness: sum of the returned fractions equals the input as a rational
// function (checked as a polynomial identity after clearing denominators).
template <typename C>
static void check_sum_identity(const ArrFraction<C>& f, const std::vector<ArrFraction<C>>& terms,
                               const LinearSystem& s) {
    std::map<int, int> common = f.denominator;
    for (const ArrFraction<C>& t : terms)
        for (const auto& [i, m] : t.denominator)
            if (common[i] < m) common[i] = m;
    MPoly<C> sum;
    for (const ArrFraction<C>& t : terms) sum += lift_to_common(t, common, s);
    CHECK(sum == lift_to_common(f, common, s));
}

TEST_CASE("partial fractions splits the dependent triple") {
    LinearSystem t = tri();
    ArrFraction<Rational> f;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}, {2, 1}};
    auto terms = partial_fractions(f, t);
    REQUIRE(terms.size() == 2);
    // 1/(v2 (v1+v2)^2) + 1/(v1 (v1+v2)^2)
    CHECK(terms[0].denominator == std::map<int, int>{{0, 1}, {2, 2}});
    CHECK(terms[1].denominator == std::map<int, int>{{1, 1}, {2, 2}});
    CHECK(terms[0].numerator == one());
    CHECK(terms[1].numerator == one());
    check_sum_identity(f, terms, t);
}

TEST_CASE("independent denominators pass through unchanged") {
    LinearSystem t = tri();
    ArrFraction<Rational> f;
    f.numerator = MPoly<Rational>::variable(1);
    f.denominator = {{0, 1}, {1, 2}};
    auto terms = partial_fractions(f, t);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].denominator == f.denominator);
    CHECK(terms[0].numerator == f.numerator);
}

TEST_CASE("symbolic numerator splits and reduces to the surviving weight") {
    // (a v1 + b v2) / (v1 v2 (v1+v2)) over the coefficient ring Q[a,b].
    using C = MPoly<Rational>;
    LinearSystem t = tri();
    C a = C::variable(0), b = C::variable(1);
    ArrFraction<C> f;
    f.numerator = MPoly<C>::variable(0).scaled(a) + MPoly<C>::variable(1).scaled(b);
    f.denominator = {{0, 1}, {1, 1}, {2, 1}};
    auto terms = partial_fractions(f, t);
    REQUIRE(terms.size() == 2);
    for (const auto& term : terms) {
        std::vector<RatVec> cols;
        for (const auto& [i, m] : term.denominator)
            cols.push_back(to_rational_vec(t.betas[i]));
        CHECK(rank(RatMatrix::from_columns(cols)) == static_cast<int>(cols.size()));
    }
    check_sum_identity(f, terms, t);

    // Equivalent decomposition a/(v2(v1+v2)) + b/(v1(v1+v2)): against the
    // chamber of (3,2) only the second term survives, so jk = b.
    Chamber c = chamber_of(t, {Rational(3), Rational(2)});
    CHECK(jk_residue(f, t, c) == b);
    Chamber lower = chamber_of(t, {Rational(2), Rational(3)});
    CHECK(jk_residue(f, t, lower) == a);
}

TEST_CASE("sum identity holds with higher multiplicities") {
    LinearSystem t = tri();
    ArrFraction<Rational> f;
    f.numerator = MPoly<Rational>::variable(0, 2);
    f.denominator = {{0, 2}, {1, 1}, {2, 2}};
    auto terms = partial_fractions(f, t);
    CHECK(terms.size() >= 2);
    check_sum_identity(f, terms, t);
}

TEST_CASE("jk residue basis axiom and cone gate") {
    LinearSystem t = tri();
    Chamber c = chamber_of(t, {Rational(3), Rational(2)});

    ArrFraction<Rational> f;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}};
    CHECK(jk_residue(f, t, c) == Rational(1));

    f.denominator = {{1, 1}, {2, 1}};
    CHECK(jk_residue(f, t, c) == Rational(0));

    f.numerator = MPoly<Rational>::variable(1);
    f.denominator = {{0, 1}, {2, 2}};
    CHECK(jk_residue(f, t, c) == Rational(1));

    // Degree -3 != -2: killed regardless of chamber.
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}, {2, 1}};
    CHECK(jk_residue(f, t, c) == Rational(0));
}

TEST_CASE("axiom normalization uses |det sigma|") {
    LinearSystem s = new_system({{2, 1}, {1, 2}});
    Chamber c = resolve_chamber(s, {Rational(1), Rational(1)});
    ArrFraction<Rational> f;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}};
    CHECK(jk_residue(f, s, c) == Rational(1, 3));
}

TEST_CASE("terminal supports smaller than the rank contribute zero") {
    LinearSystem t = tri();
    Chamber c = chamber_of(t, {Rational(3), Rational(2)});
    ArrFraction<Rational> f;
    f.numerator = MPoly<Rational>::variable(0); // degree 1 - 2 = -1... homogeneity -r needs v^0
    f.denominator = {{0, 2}};
    CHECK(jk_residue(f, t, c) == Rational(0));
    f.numerator = one();
    f.denominator = {{0, 2}}; // degree -2 = -r but the support does not span
    CHECK(jk_residue(f, t, c) == Rational(0));
}

TEST_CASE("linearity") {
    LinearSystem t = tri();
    Chamber c = chamber_of(t, {Rational(3), Rational(2)});
    ArrFraction<Rational> f, g;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}};
    g.numerator = MPoly<Rational>::variable(1);
    g.denominator = {{0, 1}, {2, 2}};
    Rational alpha(5, 3), beta(-2, 7);
    ArrFraction<Rational> sf = f, sg = g;
    sf.numerator = sf.numerator.scaled_rational(alpha);
    sg.numerator = sg.numerator.scaled_rational(beta);
    Rational lhs = jk_residue(std::vector<ArrFraction<Rational>>{sf, sg}, t, c);
    CHECK(lhs == alpha * jk_residue(f, t, c) + beta * jk_residue(g, t, c));
}

TEST_CASE("reduction is well-defined under randomized circuit choice") {
    LinearSystem s = new_system({{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    Chamber c = resolve_chamber(s, {Rational(4), Rational(3)});
    ArrFraction<Rational> f;
    MPoly<Rational> vsum = MPoly<Rational>::variable(0) + MPoly<Rational>::variable(1);
    f.numerator = vsum * vsum;
    f.denominator = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
    Rational base = jk_residue(f, s, c);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ReduceOptions opt;
        opt.seed = seed;
        CHECK(jk_residue(f, s, c, opt) == base);
        auto terms = partial_fractions(f, s, opt);
        check_sum_identity(f, terms, s);
    }
}

TEST_CASE("reduction trace is audit-ready JSON") {
    LinearSystem t = tri();
    ArrFraction<Rational> f;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}, {2, 1}};
    std::string trace;
    ReduceOptions opt;
    opt.trace = &trace;
    partial_fractions(f, t, opt);
    auto doc = nlohmann::json::parse(trace);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() >= 1);
    CHECK(doc[0].contains("circuit"));
    CHECK(doc[0].contains("pivot"));
    CHECK(doc[0].contains("denominator"));
    CHECK(doc[0]["pivot"] == 2); // pivot is the max index of the circuit {0,1,2}
}

TEST_CASE("iterated residue examples") {
    LinearSystem t = tri();
    ArrFraction<Rational> f;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}};
    CHECK(iterated_residue({0, 1}, f, t) == Rational(1));

    f.numerator = MPoly<Rational>::variable(1);
    f.denominator = {{0, 1}, {2, 2}};
    CHECK(iterated_residue({0, 2}, f, t) == Rational(1));

    f.numerator = MPoly<Rational>::variable(0);
    f.denominator = {{0, 2}, {1, 1}};
    CHECK(iterated_residue({0, 1}, f, t) == Rational(1));
}

TEST_CASE("iterated residue rejects bad subsets") {
    LinearSystem t = tri();
    ArrFraction<Rational> f;
    f.numerator = one();
    f.denominator = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(iterated_residue({0}, f, t), Error);        // wrong size
    CHECK_THROWS_AS(iterated_residue({0, 0}, f, t), Error);     // repeats
    CHECK_THROWS_AS(iterated_residue({1, 2}, f, t), Error);     // support not contained
    LinearSystem dup = new_system({{1, 0}, {2, 0}, {0, 1}});
    ArrFraction<Rational> g;
    g.numerator = one();
    g.denominator = {{0, 1}};
    CHECK_THROWS_AS(iterated_residue({0, 1}, g, dup), Error);   // dependent subset
}

TEST_CASE("iterated residue agrees with the terminal rule") {
    for (LinearSystem s : {tri(), new_system({{2, 1}, {1, 2}, {1, 1}})}) {
        for (const BasisInfo& b : s.bases) {
            // Chamber with sigma feasible: resolve at the center of Cone(sigma).
            RatVec center(s.r, Rational(0));
            for (int i : b.indices)
                for (int j = 0; j < s.r; ++j) center[j] += Rational(s.betas[i][j]);
            Chamber c = resolve_chamber(s, center);
            if (std::find(c.feasible_bases.begin(), c.feasible_bases.end(), b.indices) ==
                c.feasible_bases.end())
                continue;
            ArrFraction<Rational> f;
            MPoly<Rational> vsum;
            for (int j = 0; j < s.r; ++j) vsum += MPoly<Rational>::variable(j);
            f.numerator = vsum * vsum;
            f.denominator.clear();
            f.denominator[b.indices[0]] = 3;
            f.denominator[b.indices[1]] = 1;
            Rational via_terminal = jk_residue(f, s, c);
            // All feasible-basis terms other than sigma vanish: support == sigma.
            CHECK(via_terminal == iterated_residue(b.indices, f, s));
            std::vector<int> reversed{b.indices[1], b.indices[0]};
            CHECK(via_terminal == iterated_residue(reversed, f, s));
        }
    }
}

TEST_CASE("todd product truncation") {
    LinearSystem single = new_system({{1}});
    auto t2 = todd_product_truncation<Rational>(single, {Rational(0)}, 2);
    MPoly<Rational> want = MPoly<Rational>::constant(Rational(1)) +
                           MPoly<Rational>::variable(0).scaled_rational(Rational(1, 2)) +
                           MPoly<Rational>::variable(0, 2).scaled_rational(Rational(1, 12));
    CHECK(t2.poly == want);

    LinearSystem seg = new_system({{1}, {1}});
    using C = MPoly<Rational>;
    std::vector<C> sym{C::variable(0)};
    auto s1 = todd_product_truncation<C>(seg, sym, 1);
    // 1 + (xi + 1) v
    MPoly<C> expect = MPoly<C>::constant(RingTraits<C>::one()) +
                      MPoly<C>::variable(0).scaled(C::variable(0) + C::constant(Rational(1)));
    CHECK(s1.poly == expect);

    auto d0 = todd_product_truncation<Rational>(tri(), {Rational(5), Rational(7)}, 0);
    CHECK(d0.poly == MPoly<Rational>::constant(Rational(1)));

    CHECK_THROWS_AS(todd_product_truncation<Rational>(seg, {Rational(1)}, -1), Error);
    CHECK_THROWS_AS((todd_product_truncation<Rational>(tri(), {Rational(1)}, 2)), Error);
}

TEST_CASE("circuits of small systems") {
    LinearSystem t = tri();
    CircuitIndex idx(t);
    auto& circs = idx.circuits_within({0, 1, 2});
    REQUIRE(circs.size() == 1);
    CHECK(circs[0] == std::vector<int>{0, 1, 2});
    CHECK(idx.circuits_within({0, 1}).empty());

    LinearSystem s = new_system({{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    CircuitIndex idx2(s);
    CHECK(idx2.circuits_within({0, 1, 2, 3}).size() == 4); // every 3-subset is a circuit

    LinearSystem dup = new_system({{1, 0}, {2, 0}, {0, 1}});
    CircuitIndex idx3(dup);
    auto& c3 = idx3.circuits_within({0, 1, 2});
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == std::vector<int>{0, 1}); // parallel forms make a 2-circuit
}
