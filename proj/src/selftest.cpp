#include "jkres/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "jkres/corpus.hpp"
#include "jkres/models.hpp"
#include "jkres/oracle.hpp"
#include "jkres/partition.hpp"
#include "jkres/residue.hpp"

namespace jkres {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

// {e1 x3, e2 x3, (e1+e2) x3}: the two-dimensional system whose chamber
// counting polynomials have a known closed form.
LinearSystem triple_system() {
    std::vector<IntVec> betas;
    for (int k = 0; k < 3; ++k) betas.push_back({1, 0});
    for (int k = 0; k < 3; ++k) betas.push_back({0, 1});
    for (int k = 0; k < 3; ++k) betas.push_back({1, 1});
    return new_system(betas);
}

// (b+1)(b+2)(b+3)(b+4)(b+5)(7a^2 - 7ab + 2b^2 + 21a - 9b + 14) / 1680
// in the variables (a, b) = (xi_1, xi_2): the counting polynomial of the
// a >= b chamber of triple_system().
MPoly<Rational> closed_form_count() {
    auto a = MPoly<Rational>::variable(0);
    auto b = MPoly<Rational>::variable(1);
    auto c = [](long v) { return MPoly<Rational>::constant(Rational(v)); };
    MPoly<Rational> prod = c(1);
    for (long k = 1; k <= 5; ++k) prod = prod * (b + c(k));
    MPoly<Rational> quad = c(7) * a * a - c(7) * a * b + c(2) * b * b + c(21) * a - c(9) * b + c(14);
    return (prod * quad).scaled_rational(Rational(1, 1680));
}

CriterionResult criterion1() {
    CriterionResult r{1, "chamber count polynomial (a >= b) closed form", false, "", 0.0};
    auto t0 = Clock::now();
    LinearSystem s = triple_system();
    Chamber upper = resolve_chamber(s, {Rational(2), Rational(1)});
    ChamberPolynomial cp = count_polynomial(s, upper);
    bool match = (cp.poly == closed_form_count());
    r.seconds = elapsed(t0);
    r.passed = match && r.seconds < 60.0;
    r.detail = match ? "polynomial identity holds, " + fmt_seconds(r.seconds)
                     : "polynomial mismatch: got " + poly_to_string(cp.poly, {"a", "b"});
    if (match && !r.passed) r.detail += " (over 60 s budget)";
    return r;
}

CriterionResult criterion2() {
    CriterionResult r{2, "chamber count polynomial (a <= b) is the swap", false, "", 0.0};
    auto t0 = Clock::now();
    LinearSystem s = triple_system();
    Chamber lower = resolve_chamber(s, {Rational(1), Rational(2)});
    ChamberPolynomial cp = count_polynomial(s, lower);
    MPoly<Rational> swapped = substitute(
        closed_form_count(),
        {MPoly<Rational>::variable(1), MPoly<Rational>::variable(0)});
    bool match = (cp.poly == swapped);
    r.seconds = elapsed(t0);
    r.passed = match;
    r.detail = match ? "polynomial identity holds, " + fmt_seconds(r.seconds)
                     : "polynomial mismatch: got " + poly_to_string(cp.poly, {"a", "b"});
    return r;
}

CriterionResult criterion3() {
    CriterionResult r{3, "exact count at xi = (10^6, 10^6 - 1)", false, "", 0.0};
    auto t0 = Clock::now();
    LinearSystem s = triple_system();
    Int big(1000000);
    CountResult got = count(s, {big, big - 1});
    Rational want = evaluate(closed_form_count(), {Rational(big), Rational(big - 1)});
    bool match = got.feasible && Rational(got.value) == want;
    r.seconds = elapsed(t0);
    r.passed = match && r.seconds < 5.0;
    r.detail = (match ? "count = " + int_to_string(got.value) + ", " : "value mismatch, ") +
               fmt_seconds(r.seconds);
    if (match && !r.passed) r.detail += " (over 5 s budget)";
    return r;
}

CriterionResult criterion4() {
    CriterionResult r{4, "residue pipeline vs enumeration oracles on random corpus", false, "", 0.0};
    auto t0 = Clock::now();
    auto systems = random_systems(200, 20260815u);
    std::mt19937_64 rng(987654321u);
    Int value_cap(100000);
    long points = 0;
    long ehrhart_checks = 0;
    for (size_t si = 0; si < systems.size(); ++si) {
        const LinearSystem& s = systems[si];
        int accepted = 0;
        for (int attempt = 0; attempt < 600 && accepted < 5; ++attempt) {
            int cap = attempt < 300 ? 2 : 1;
            IntVec xi = random_cone_point(s, rng, cap);
            Int dp;
            try {
                dp = dp_count(s, xi);
            } catch (const Error&) {
                continue;
            }
            if (dp > value_cap) continue;

            CountResult cr = count(s, xi);
            if (cr.value != dp) {
                r.detail = "count != dp_count on system " + std::to_string(si);
                r.seconds = elapsed(t0);
                return r;
            }
            RatVec xr = to_rational_vec(xi);
            if (volume(s, xr).value != oracle_volume(s, xi)) {
                r.detail = "volume != oracle_volume on system " + std::to_string(si);
                r.seconds = elapsed(t0);
                return r;
            }
            EhrhartPolynomial e = ehrhart(s, xi);
            bool dilates_ok = true;
            try {
                for (int t = 0; t <= s.n() - s.r + 2; ++t) {
                    IntVec txi(xi.size());
                    for (size_t j = 0; j < xi.size(); ++j) txi[j] = Int(t) * xi[j];
                    if (e.at(Rational(t)) != Rational(dp_count(s, txi))) {
                        r.detail = "ehrhart(t) != dp_count(t xi) on system " + std::to_string(si);
                        r.seconds = elapsed(t0);
                        return r;
                    }
                    ++ehrhart_checks;
                }
            } catch (const Error& err) {
                if (err.code() != ErrorCode::BudgetExceeded) throw;
                dilates_ok = false; // dilate too big to enumerate; resample
            }
            if (!dilates_ok) continue;
            ++accepted;
            ++points;
        }
        if (accepted < 5) {
            r.detail = "could not sample 5 admissible points on system " + std::to_string(si);
            r.seconds = elapsed(t0);
            return r;
        }
    }
    r.seconds = elapsed(t0);
    r.passed = r.seconds < 600.0;
    r.detail = std::to_string(systems.size()) + " systems, " + std::to_string(points) +
               " points, " + std::to_string(ehrhart_checks) + " dilate checks, " +
               fmt_seconds(r.seconds);
    if (!r.passed) r.detail += " (over 600 s budget)";
    return r;
}

CriterionResult criterion5() {
    CriterionResult r{5, "residue functional: axioms, degree kill, linearity, reduction invariance",
                      false, "", 0.0};
    auto t0 = Clock::now();

    std::vector<LinearSystem> systems;
    systems.push_back(new_system({{1}, {1}}));
    systems.push_back(new_system({{1}, {1}, {1}}));
    systems.push_back(new_system({{1, 0}, {0, 1}, {1, 1}}));
    systems.push_back(triple_system());
    systems.push_back(new_system({{1, 0}, {0, 1}, {1, 2}}));  // non-unimodular
    systems.push_back(new_system({{2, 1}, {1, 2}}));          // |det| = 3
    systems.push_back(new_system({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    systems.push_back(kostant_system(3));
    systems.push_back(transportation_system(2, 2));
    systems.push_back(transportation_system(2, 3));
    systems.push_back(new_system({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));

    long fractions = 0;
    auto fail = [&](const std::string& what, size_t si) {
        r.detail = what + " on system " + std::to_string(si);
        r.seconds = elapsed(t0);
        return r;
    };

    for (size_t si = 0; si < systems.size(); ++si) {
        const LinearSystem& s = systems[si];
        int n = s.n();
        RatVec interior(s.r, Rational(0));
        for (const IntVec& beta : s.betas)
            for (int j = 0; j < s.r; ++j) interior[j] += Rational(beta[j]);
        Chamber c = resolve_chamber(s, interior);

        // Axiom: 1/prod_{i in sigma} beta_i maps to 1/|det sigma| when the
        // chamber representative is interior to Cone(sigma), else to 0.
        for (const BasisInfo& b : s.bases) {
            ArrFraction<Rational> f;
            f.numerator = MPoly<Rational>::constant(Rational(1));
            for (int i : b.indices) f.denominator[i] += 1;
            ++fractions;
            Rational want =
                cone_contains(s, b.indices, c.representative) == ConeLocation::Interior
                    ? Rational(Int(1), b.abs_det)
                    : Rational(0);
            if (jk_residue(f, s, c) != want) return fail("basis axiom violated", si);
        }

        // Degree kill: homogeneous degree != -r gives 0.
        std::map<int, int> all_forms;
        for (int i = 0; i < n; ++i) all_forms[i] += 1;
        {
            ArrFraction<Rational> f;
            f.numerator = MPoly<Rational>::variable(0, n - s.r + 1); // degree -r + 1
            f.denominator = all_forms;
            ++fractions;
            if (!jk_residue(f, s, c).is_zero()) return fail("degree kill (too high) violated", si);
        }
        {
            ArrFraction<Rational> f;
            f.numerator = MPoly<Rational>::constant(Rational(1)); // degree -n < -r when n > r
            f.denominator = all_forms;
            for (int i : s.bases.front().indices) f.denominator[i] += 1; // degree -(n+r)
            ++fractions;
            if (!jk_residue(f, s, c).is_zero()) return fail("degree kill (too low) violated", si);
        }

        // A fraction with a generically nonzero value: dense numerator of the
        // degree that survives, over the product of all forms.
        MPoly<Rational> vsum;
        for (int j = 0; j < s.r; ++j) vsum = vsum + MPoly<Rational>::variable(j);
        ArrFraction<Rational> dense;
        dense.numerator = vsum.pow(n - s.r);
        dense.denominator = all_forms;
        ++fractions;
        Rational dense_val = jk_residue(dense, s, c);

        // Linearity over a two-term sum with rational weights.
        {
            ArrFraction<Rational> f1;
            f1.numerator = MPoly<Rational>::constant(Rational(1));
            for (int i : s.bases.front().indices) f1.denominator[i] += 1;
            Rational alpha(3, 2), gamma(-7, 5);
            ArrFraction<Rational> sf1 = f1, sf2 = dense;
            sf1.numerator = sf1.numerator.scaled_rational(alpha);
            sf2.numerator = sf2.numerator.scaled_rational(gamma);
            fractions += 2;
            Rational lhs = jk_residue(std::vector<ArrFraction<Rational>>{sf1, sf2}, s, c);
            Rational rhs = alpha * jk_residue(f1, s, c) + gamma * dense_val;
            if (lhs != rhs) return fail("linearity violated", si);
        }

        // Reduction well-definedness: the value must not depend on which
        // circuit the reducer picks.  Exercise the dense fraction and a
        // higher-multiplicity variant under 5 randomized selection seeds.
        ArrFraction<Rational> heavy;
        heavy.numerator = vsum.pow(n - s.r + 1);
        heavy.denominator = all_forms;
        heavy.denominator[0] += 1;
        ++fractions;
        Rational heavy_val = jk_residue(heavy, s, c);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            ReduceOptions opt;
            opt.seed = seed;
            if (jk_residue(dense, s, c, opt) != dense_val)
                return fail("reduction order changed a value", si);
            if (jk_residue(heavy, s, c, opt) != heavy_val)
                return fail("reduction order changed a value", si);
        }
    }

    r.seconds = elapsed(t0);
    r.passed = fractions >= 50 && systems.size() >= 10;
    r.detail = std::to_string(fractions) + " fractions over " + std::to_string(systems.size()) +
               " systems, " + fmt_seconds(r.seconds);
    return r;
}

// A wall of s: an independent (r-1)-subset tau together with two chambers
// obtained by nudging an interior point of Cone(tau) to either side.
struct WallPair {
    std::vector<int> tau;
    RatVec w;
    Chamber plus, minus;
};

std::optional<WallPair> find_wall(const LinearSystem& s, std::mt19937_64& rng) {
    int n = s.n();
    std::vector<int> subset(s.r - 1);
    std::function<std::optional<WallPair>(int, int)> rec =
        [&](int pos, int start) -> std::optional<WallPair> {
        if (pos == s.r - 1) {
            std::vector<RatVec> cols;
            for (int i : subset) cols.push_back(to_rational_vec(s.betas[i]));
            if (rank(RatMatrix::from_columns(cols)) != s.r - 1) return std::nullopt;
            RatVec w(s.r, Rational(0));
            for (int i : subset)
                for (int j = 0; j < s.r; ++j) w[j] += Rational(s.betas[i][j]);
            for (int a = 0; a < n; ++a) {
                cols.push_back(to_rational_vec(s.betas[a]));
                bool spans = rank(RatMatrix::from_columns(cols)) == s.r;
                cols.pop_back();
                if (!spans) continue;
                RatVec nu = to_rational_vec(s.betas[a]);
                RatVec neg(nu.size());
                for (size_t j = 0; j < nu.size(); ++j) neg[j] = -nu[j];
                auto plus = limit_chamber(s, w, nu);
                auto minus = limit_chamber(s, w, neg);
                if (!plus || !minus) continue;
                if (plus->feasible_bases == minus->feasible_bases) continue;
                return WallPair{subset, w, *plus, *minus};
            }
            return std::nullopt;
        }
        for (int i = start; i < n; ++i) {
            subset[pos] = i;
            if (auto found = rec(pos + 1, i + 1)) return found;
        }
        return std::nullopt;
    };
    (void)rng;
    return rec(0, 0);
}

CriterionResult criterion6() {
    CriterionResult r{6, "volume polynomials agree across shared walls", false, "", 0.0};
    auto t0 = Clock::now();
    CorpusOptions opt;
    opt.min_rank = 2;
    opt.max_n = 6;
    auto systems = random_systems(120, 424242u, opt);
    std::mt19937_64 rng(555u);
    int walls_checked = 0;
    long points_checked = 0;
    for (size_t si = 0; si < systems.size() && walls_checked < 20; ++si) {
        const LinearSystem& s = systems[si];
        if (s.r < 2) continue;
        auto wall = find_wall(s, rng);
        if (!wall) continue;

        // Sample 3 points on the shared wall: random positive combinations of
        // tau when they stay on the common boundary, multiples of w otherwise.
        std::vector<RatVec> pts;
        std::uniform_int_distribution<int> lam(1, 5);
        for (int tries = 0; tries < 30 && pts.size() < 3; ++tries) {
            RatVec x(s.r, Rational(0));
            for (int i : wall->tau) {
                Rational l(lam(rng));
                for (int j = 0; j < s.r; ++j) x[j] += l * Rational(s.betas[i][j]);
            }
            if (closure_contains(s, wall->plus, x) && closure_contains(s, wall->minus, x))
                pts.push_back(x);
        }
        for (int j = 1; pts.size() < 3; ++j) {
            RatVec x(s.r);
            for (int k = 0; k < s.r; ++k) x[k] = Rational(j) * wall->w[k];
            pts.push_back(x);
        }

        ChamberPolynomial vp = volume_polynomial(s, wall->plus);
        ChamberPolynomial vm = volume_polynomial(s, wall->minus);
        for (const RatVec& x : pts) {
            if (evaluate(vp.poly, x) != evaluate(vm.poly, x)) {
                r.detail = "volume jump across a wall on system " + std::to_string(si);
                r.seconds = elapsed(t0);
                return r;
            }
            ++points_checked;
        }
        ++walls_checked;
    }
    r.seconds = elapsed(t0);
    r.passed = walls_checked >= 20;
    r.detail = std::to_string(walls_checked) + " walls, " + std::to_string(points_checked) +
               " wall points, " + fmt_seconds(r.seconds);
    if (walls_checked < 20) r.detail = "only " + r.detail;
    return r;
}

CriterionResult criterion7() {
    CriterionResult r{7, "Ehrhart constant term 1 and leading coefficient = volume", false, "", 0.0};
    auto t0 = Clock::now();
    auto systems = random_systems(200, 20260815u);
    std::mt19937_64 rng(13131313u);
    long instances = 0;
    for (size_t si = 0; si < systems.size(); ++si) {
        const LinearSystem& s = systems[si];
        for (int k = 0; k < 2; ++k) {
            IntVec xi = random_cone_point(s, rng, 2);
            EhrhartPolynomial e = ehrhart(s, xi);
            if (e.coefficients.back() != Rational(1)) {
                r.detail = "E(0) != 1 on system " + std::to_string(si);
                r.seconds = elapsed(t0);
                return r;
            }
            if (e.leading() != volume(s, to_rational_vec(xi)).value) {
                r.detail = "leading coefficient != volume on system " + std::to_string(si);
                r.seconds = elapsed(t0);
                return r;
            }
            ++instances;
        }
    }
    r.seconds = elapsed(t0);
    r.passed = true;
    r.detail = std::to_string(instances) + " instances, " + fmt_seconds(r.seconds);
    return r;
}

CriterionResult criterion8() {
    CriterionResult r{8, "3x3 transportation count at margins ~10^6; 2x2 vs enumeration",
                      false, "", 0.0};
    auto t0 = Clock::now();
    LinearSystem t33 = transportation_system(3, 3);
    Int m(1000000);
    IntVec xi = margins_to_xi({m, m - 1, m - 2}, {m - 1, m - 1, m - 1});

    auto tc = Clock::now();
    CountResult via_residues = count(t33, xi);
    double count_seconds = elapsed(tc);

    Chamber c = resolve_chamber(t33, to_rational_vec(xi));
    ChamberPolynomial cp = count_polynomial(t33, c);
    Rational via_polynomial = evaluate(cp.poly, to_rational_vec(xi));
    bool match33 = via_residues.feasible && Rational(via_residues.value) == via_polynomial;

    LinearSystem t22 = transportation_system(2, 2);
    IntVec xi22 = margins_to_xi({Int(37), Int(54)}, {Int(49), Int(42)});
    bool match22 = count(t22, xi22).value == dp_count(t22, xi22);

    r.seconds = elapsed(t0);
    r.passed = match33 && match22 && count_seconds < 30.0;
    std::ostringstream os;
    os << (match33 ? "3x3 count = " + int_to_string(via_residues.value) : "3x3 mismatch")
       << " in " << fmt_seconds(count_seconds) << "; 2x2 "
       << (match22 ? "matches enumeration" : "MISMATCH");
    if (match33 && match22 && count_seconds >= 30.0) os << " (over 30 s budget)";
    r.detail = os.str();
    return r;
}

CriterionResult criterion9() {
    CriterionResult r{9, "Kostant values for A2 and A3 vs enumeration on [0,6]^r", false, "", 0.0};
    auto t0 = Clock::now();
    long checked = 0;
    for (int ell = 2; ell <= 3; ++ell) {
        LinearSystem s = kostant_system(ell);
        IntVec xi(ell, Int(0));
        while (true) {
            if (count(s, xi).value != dp_count(s, xi)) {
                std::string pt;
                for (const Int& x : xi) pt += (pt.empty() ? "" : ",") + int_to_string(x);
                r.detail = "mismatch for A" + std::to_string(ell) + " at (" + pt + ")";
                r.seconds = elapsed(t0);
                return r;
            }
            ++checked;
            int j = 0;
            while (j < ell && xi[j] == 6) xi[j++] = 0;
            if (j == ell) break;
            xi[j] += 1;
        }
    }
    r.seconds = elapsed(t0);
    r.passed = true;
    r.detail = std::to_string(checked) + " lattice points, " + fmt_seconds(r.seconds);
    return r;
}

CriterionResult guarded(CriterionResult (*fn)(), int number, const char* name) {
    auto t0 = Clock::now();
    try {
        return fn();
    } catch (const std::exception& e) {
        CriterionResult r{number, name, false, std::string("exception: ") + e.what(), elapsed(t0)};
        return r;
    }
}

} // namespace

std::vector<CriterionResult> run_selftest(bool quick) {
    struct Entry {
        int number;
        const char* name;
        CriterionResult (*fn)();
    };
    static const Entry entries[] = {
        {1, "chamber count polynomial (a >= b) closed form", criterion1},
        {2, "chamber count polynomial (a <= b) is the swap", criterion2},
        {3, "exact count at xi = (10^6, 10^6 - 1)", criterion3},
        {4, "residue pipeline vs enumeration oracles on random corpus", criterion4},
        {5, "residue functional: axioms, degree kill, linearity, reduction invariance", criterion5},
        {6, "volume polynomials agree across shared walls", criterion6},
        {7, "Ehrhart constant term 1 and leading coefficient = volume", criterion7},
        {8, "3x3 transportation count at margins ~10^6; 2x2 vs enumeration", criterion8},
        {9, "Kostant values for A2 and A3 vs enumeration on [0,6]^r", criterion9},
    };
    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        if (quick && e.number != 1 && e.number != 2 && e.number != 5) continue;
        out.push_back(guarded(e.fn, e.number, e.name));
    }
    return out;
}

} // namespace jkres
