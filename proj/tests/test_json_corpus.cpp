#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "jkres/corpus.hpp"
#include "jkres/json_io.hpp"
#include "jkres/matrix.hpp"
#include "jkres/oracle.hpp"
#include "jkres/partition.hpp"
#include "jkres/simplex.hpp"

using namespace jkres;

TEST_CASE("system json round trip") {
    LinearSystem s = new_system({{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    LinearSystem back = system_from_json(system_to_json(s));
    CHECK(back.betas == s.betas);
    CHECK(back.n() == s.n());
    CHECK(back.r == s.r);
    CHECK(back.unimodular == s.unimodular);

    LinearSystem parsed = system_from_json(Json::parse(R"({"betas": [[1], [1]]})"));
    CHECK(parsed.n() == 2);
    CHECK(parsed.r == 1);
}

TEST_CASE("system json rejects bad shapes") {
    auto code_of = [](const char* text) {
        try {
            system_from_json(Json::parse(text));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    CHECK(code_of(R"({})") == ErrorCode::BadInput);
    CHECK(code_of(R"({"betas": []})") == ErrorCode::BadInput);
    CHECK(code_of(R"({"betas": [[1], [1, 0]]})") == ErrorCode::BadInput);
    CHECK(code_of(R"({"betas": [[1, "x"]]})") == ErrorCode::BadInput);
    CHECK(code_of(R"({"betas": 7})") == ErrorCode::BadInput);
    // Structural failures surface with their own codes.
    CHECK(code_of(R"({"betas": [[1], [-1]]})") == ErrorCode::NotPointed);
    CHECK(code_of(R"({"betas": [[1, 0], [2, 0]]})") == ErrorCode::NotSpanning);
}

TEST_CASE("vector json round trips keep big integers exact") {
    RatVec v{Rational::parse("123456789012345678901234567890"), Rational(-7, 3)};
    Json jv = rat_vec_to_json(v);
    CHECK(jv[0].is_string());
    CHECK(rat_vec_from_json(jv, 2) == v);

    IntVec w{parse_int("987654321098765432109876543210"), Int(-4)};
    Json jw = int_vec_to_json(w);
    CHECK(int_vec_from_json(jw, 2) == w);

    // Plain JSON numbers are accepted on input.
    CHECK(rat_vec_from_json(Json::parse("[3, \"1/2\"]"), 2) ==
          RatVec{Rational(3), Rational(1, 2)});
    CHECK(int_vec_from_json(Json::parse("[5, -2]"), 2) == IntVec{Int(5), Int(-2)});

    CHECK_THROWS_AS(rat_vec_from_json(Json::parse("[1, 2]"), 3), Error);
    CHECK_THROWS_AS(rat_vec_from_json(Json::parse("[\"x\"]"), 1), Error);
    CHECK_THROWS_AS(int_vec_from_json(Json::parse("[\"1/2\"]"), 1), Error);
}

TEST_CASE("chamber json shape") {
    LinearSystem tri = new_system({{1, 0}, {0, 1}, {1, 1}});
    Json j = chamber_to_json(chamber_of(tri, {Rational(2), Rational(1)}));
    REQUIRE(j.contains("representative"));
    REQUIRE(j.contains("feasible_bases"));
    CHECK(j["representative"].size() == 2);
    std::set<std::vector<int>> fbs;
    for (const auto& b : j["feasible_bases"]) fbs.insert(b.get<std::vector<int>>());
    CHECK(fbs == std::set<std::vector<int>>{{0, 1}, {0, 2}});
}

TEST_CASE("polynomial json round trip") {
    MPoly<Rational> p = MPoly<Rational>::monomial({2, 5}, Rational(7, 1680)) +
                        MPoly<Rational>::monomial({1, 6}, Rational(-7, 1680)) +
                        MPoly<Rational>::monomial({0, 0}, Rational(3));
    Json j = poly_to_json(p, 2);
    for (const auto& term : j) {
        REQUIRE(term.contains("coeff"));
        REQUIRE(term["exponents"].size() == 2);
    }
    CHECK(poly_from_json(j) == p);
    CHECK(poly_from_json(poly_to_json(MPoly<Rational>(), 3)) == MPoly<Rational>());
}

TEST_CASE("ehrhart json lists coefficients high to low") {
    LinearSystem seg3 = new_system({{1}, {1}, {1}});
    Json j = ehrhart_to_json(ehrhart(seg3, {Int(1)}));
    REQUIRE(j.is_array());
    std::vector<std::string> got = j.get<std::vector<std::string>>();
    CHECK(got == std::vector<std::string>{"1/2", "3/2", "1"});
}

TEST_CASE("random_systems is deterministic and well formed") {
    CorpusOptions opt;
    std::vector<LinearSystem> a = random_systems(25, 31337u, opt);
    std::vector<LinearSystem> b = random_systems(25, 31337u, opt);
    REQUIRE(a.size() == 25);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].betas == b[i].betas);

    for (const LinearSystem& s : a) {
        CHECK(s.r >= opt.min_rank);
        CHECK(s.r <= opt.max_rank);
        CHECK(s.n() <= opt.max_n);
        CHECK(s.n() >= s.r);
        CHECK(s.unimodular);
        // Pointedness witness: strictly positive on every generator.
        std::vector<RatVec> forms;
        for (const IntVec& bv : s.betas) {
            RatVec f;
            for (const Int& x : bv) f.emplace_back(x);
            forms.push_back(std::move(f));
        }
        auto w = pointedness_witness(forms);
        REQUIRE(w.has_value());
        for (const RatVec& f : forms) {
            Rational dot(0);
            for (int k = 0; k < s.r; ++k) dot += f[k] * (*w)[k];
            CHECK(dot > 0);
        }
        for (const IntVec& bv : s.betas)
            for (const Int& x : bv) {
                CHECK(x >= opt.entry_lo);
                CHECK(x <= opt.entry_hi);
            }
    }
    // Different seeds give different streams.
    std::vector<LinearSystem> c = random_systems(25, 424242u, opt);
    bool any_diff = false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].betas != c[i].betas) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("random_cone_point lands in the cone") {
    std::mt19937_64 rng(99u);
    std::vector<LinearSystem> systems = random_systems(10, 777u);
    for (const LinearSystem& s : systems)
        for (int t = 0; t < 5; ++t) {
            IntVec xi = random_cone_point(s, rng, 3);
            REQUIRE(static_cast<int>(xi.size()) == s.r);
            RatVec q;
            for (const Int& x : xi) q.emplace_back(x);
            CHECK(in_cone(s, q));
            CHECK(dp_count(s, xi) > 0);
        }
}
