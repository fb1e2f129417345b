#include "jkres/corpus.hpp"

#include <algorithm>

#include "jkres/matrix.hpp"

namespace jkres {

namespace {

bool keeps_unimodular(const std::vector<IntVec>& cols, const IntVec& cand, int r) {
    if (r == 1) return cand[0] == 1 || cand[0] == -1;
    // Every determinant formed by r-1 existing columns plus the candidate
    // must stay in {-1, 0, 1}.
    int n = static_cast<int>(cols.size());
    std::vector<int> picked;
    bool ok = true;
    auto rec = [&](auto&& self, int from) -> void {
        if (!ok) return;
        if (static_cast<int>(picked.size()) == r - 1) {
            std::vector<RatVec> m;
            m.reserve(r);
            for (int i : picked) m.push_back(to_rational_vec(cols[i]));
            m.push_back(to_rational_vec(cand));
            Rational d = det(RatMatrix::from_columns(m));
            Rational a = d.abs();
            if (a != Rational(0) && a != Rational(1)) ok = false;
            return;
        }
        for (int i = from; i < n; ++i) {
            picked.push_back(i);
            self(self, i + 1);
            picked.pop_back();
            if (!ok) return;
        }
    };
    rec(rec, 0);
    return ok;
}

std::optional<LinearSystem> try_generate(std::mt19937_64& rng, const CorpusOptions& opt) {
    std::uniform_int_distribution<int> rank_dist(opt.min_rank, opt.max_rank);
    int r = rank_dist(rng);
    std::uniform_int_distribution<int> n_dist(r, opt.max_n);
    int n = n_dist(rng);
    std::uniform_int_distribution<int> entry(opt.entry_lo, opt.entry_hi);

    std::vector<IntVec> cols;
    int tries = 0;
    while (static_cast<int>(cols.size()) < n && tries < 400) {
        ++tries;
        IntVec cand(r);
        bool zero = true;
        for (int i = 0; i < r; ++i) {
            cand[i] = entry(rng);
            if (cand[i] != 0) zero = false;
        }
        if (zero) continue;
        if (opt.require_unimodular && !keeps_unimodular(cols, cand, r)) continue;
        cols.push_back(std::move(cand));
    }
    if (static_cast<int>(cols.size()) < n) return std::nullopt;
    try {
        LinearSystem s = new_system(cols);
        if (opt.require_unimodular && !s.unimodular) return std::nullopt;
        return s;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

std::vector<LinearSystem> random_systems(int count, std::uint64_t seed, const CorpusOptions& opt) {
    std::mt19937_64 rng(seed);
    std::vector<LinearSystem> out;
    out.reserve(count);
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 1000 * count)
            throw Error(ErrorCode::Internal, "system generation is not converging");
        auto s = try_generate(rng, opt);
        if (s) out.push_back(std::move(*s));
    }
    return out;
}

IntVec random_cone_point(const LinearSystem& s, std::mt19937_64& rng, int max_coeff) {
    std::uniform_int_distribution<int> coeff(0, max_coeff);
    IntVec xi(s.r, 0);
    for (const IntVec& beta : s.betas) {
        int c = coeff(rng);
        for (int i = 0; i < s.r; ++i) xi[i] += c * beta[i];
    }
    return xi;
}

} // namespace jkres
