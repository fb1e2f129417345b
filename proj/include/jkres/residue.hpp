#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/mpoly.hpp"
#include "jkres/todd.hpp"

namespace jkres {

// L(v) / prod_a beta_a(v)^{m_a}: a rational function on the complement of the
// arrangement.  The denominator refers to the system's forms by index.
template <typename C>
struct ArrFraction {
    MPoly<C> numerator;
    std::map<int, int> denominator; // index -> multiplicity >= 1

    int denominator_degree() const {
        int d = 0;
        for (const auto& [i, m] : denominator) d += m;
        return d;
    }
};

struct ReduceOptions {
    // When set, the circuit used at each reduction step is chosen by a seeded
    // RNG among all circuits of the current support (the pivot is always the
    // circuit's maximal index, which is what termination needs).  Unset: the
    // lexicographically smallest circuit.
    std::optional<std::uint64_t> seed;
    // When set, appends one JSON object per reduction step for audit.
    std::string* trace = nullptr;
};

// Circuits (minimal dependent subsets) of a system, computed once on demand.
class CircuitIndex {
  public:
    explicit CircuitIndex(const LinearSystem& s) : s_(s) {}

    // All circuits contained in the given (ascending) support; cached per
    // support, since reductions revisit the same supports constantly.
    const std::vector<std::vector<int>>& circuits_within(const std::vector<int>& support);

  private:
    void build();
    const LinearSystem& s_;
    bool built_ = false;
    std::vector<std::vector<int>> all_; // lex-sorted
    std::map<std::vector<int>, std::vector<std::vector<int>>> by_support_;
};

// Coefficients d for the relation beta[pivot] = sum_{i in circuit, i != pivot}
// d_i * beta_i, where pivot = max(circuit).  Returned aligned with the
// circuit's non-pivot elements in ascending order.
RatVec circuit_relation(const LinearSystem& s, const std::vector<int>& circuit);

// Denominator multiset with independent support, as a canonical sorted list.
using DenomKey = std::vector<std::pair<int, int>>;

// Core reduction: rewrite 1/prod beta^m as a sum of fractions with
// independent denominator supports.  The numerator never changes, so the
// whole reduction is bookkeeping on (rational coefficient, multiplicities).
// Returns terminal denominators with their accumulated coefficients.
std::map<DenomKey, Rational> reduce_denominator(const LinearSystem& s, CircuitIndex& circuits,
                                                const std::map<int, int>& denominator,
                                                const ReduceOptions& opt = {});

// Public partial-fraction op: sum of returned fractions equals f, every
// returned denominator support is independent.
template <typename C>
std::vector<ArrFraction<C>> partial_fractions(const ArrFraction<C>& f, const LinearSystem& s,
                                              const ReduceOptions& opt = {}) {
    CircuitIndex circuits(s);
    auto terminal = reduce_denominator(s, circuits, f.denominator, opt);
    std::vector<ArrFraction<C>> out;
    for (const auto& [key, coeff] : terminal) {
        ArrFraction<C> term;
        term.numerator = f.numerator.scaled_rational(coeff);
        if (term.numerator.is_zero()) continue;
        for (const auto& [idx, mult] : key) term.denominator[idx] = mult;
        out.push_back(std::move(term));
    }
    return out;
}

// Expansion of the v-monomial `vmono` in the coordinates u_i = beta_{sigma_i}(v)
// of the given basis: returns map u-monomial -> rational coefficient.
std::map<std::vector<int>, Rational> u_expansion(const BasisInfo& basis,
                                                 const std::vector<int>& vmono, int rank);

// The Jeffrey-Kirwan residue of a sum of arrangement fractions against a
// chamber: partial-fraction reduction, then for each terminal term with
// r-element support sigma in FB(c), the coefficient of prod u_i^{m_i - 1} in
// the numerator's degree-(sum m - r) component rewritten in u-coordinates,
// divided by |det sigma|.
template <typename C>
C jk_residue(const std::vector<ArrFraction<C>>& fractions, const LinearSystem& s,
             const Chamber& chamber, const ReduceOptions& opt = {}) {
    C result = RingTraits<C>::zero();
    std::set<std::vector<int>> fb(chamber.feasible_bases.begin(), chamber.feasible_bases.end());
    CircuitIndex circuits(s);
    for (const ArrFraction<C>& f : fractions) {
        int slice_deg = f.denominator_degree() - s.r;
        if (slice_deg < 0) continue;
        MPoly<C> slice = f.numerator.homogeneous_component(slice_deg);
        if (slice.is_zero()) continue;
        auto terminal = reduce_denominator(s, circuits, f.denominator, opt);

        // Group terminal terms by their (full-rank, feasible) support.
        std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, Rational>>> by_basis;
        for (const auto& [key, coeff] : terminal) {
            if (static_cast<int>(key.size()) != s.r) continue;
            std::vector<int> support, mults;
            support.reserve(key.size());
            mults.reserve(key.size());
            for (const auto& [idx, m] : key) {
                support.push_back(idx);
                mults.push_back(m);
            }
            if (!fb.count(support)) continue;
            by_basis[support].emplace_back(std::move(mults), coeff);
        }

        for (const auto& [support, terms] : by_basis) {
            const BasisInfo* basis = s.find_basis(support);
            if (!basis) throw Error(ErrorCode::Internal, "terminal support is not a known basis");
            Rational det_inv = Rational(Int(1), basis->abs_det);
            // For each monomial of the slice, gather the total rational weight
            // across all terminal multiplicity vectors, then scale-add the
            // (possibly symbolic) numerator coefficients once.
            for (const auto& [vmono, ccoeff] : slice.terms()) {
                auto expansion = u_expansion(*basis, vmono, s.r);
                Rational weight(0);
                for (const auto& [mults, coeff] : terms) {
                    std::vector<int> target(mults.size());
                    for (size_t i = 0; i < mults.size(); ++i) target[i] = mults[i] - 1;
                    while (!target.empty() && target.back() == 0) target.pop_back();
                    auto it = expansion.find(target);
                    if (it != expansion.end()) weight += coeff * it->second;
                }
                if (weight.is_zero()) continue;
                result = result + RingTraits<C>::scale(ccoeff, weight * det_inv);
            }
        }
    }
    return result;
}

template <typename C>
C jk_residue(const ArrFraction<C>& f, const LinearSystem& s, const Chamber& chamber,
             const ReduceOptions& opt = {}) {
    return jk_residue(std::vector<ArrFraction<C>>{f}, s, chamber, opt);
}

// Sequential route: rewrite f in the u-coordinates of the ordered independent
// subset gamma by explicit substitution, then extract univariate residues one
// variable at a time.  Agrees with jk_residue's terminal rule (including the
// 1/|det gamma| factor); kept as an independent code path for cross-checking.
template <typename C>
C iterated_residue(const std::vector<int>& gamma, const ArrFraction<C>& f, const LinearSystem& s) {
    if (static_cast<int>(gamma.size()) != s.r)
        throw Error(ErrorCode::BadInput, "ordered subset must have exactly rank elements");
    std::vector<int> sorted = gamma;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::BadInput, "ordered subset has repeats");
    for (const auto& [idx, m] : f.denominator)
        if (!std::binary_search(sorted.begin(), sorted.end(), idx))
            throw Error(ErrorCode::BadInput, "denominator support not contained in the subset");
    const BasisInfo* basis = s.find_basis(sorted);
    if (!basis) throw Error(ErrorCode::BadInput, "subset is linearly dependent");

    // Position of each gamma element in the sorted basis: u-variable k of the
    // iteration corresponds to the form gamma[k].
    std::vector<int> pos(gamma.size());
    for (size_t k = 0; k < gamma.size(); ++k)
        pos[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), gamma[k]) -
                                  sorted.begin());

    // v_j = sum_i inverse[i][j] u_i  (u ordered by the sorted basis).
    std::vector<MPoly<Rational>> images(s.r);
    for (int j = 0; j < s.r; ++j) {
        MPoly<Rational> form;
        for (int i = 0; i < s.r; ++i) {
            const Rational& c = basis->inverse.entries[i][j];
            if (!c.is_zero()) form += MPoly<Rational>::variable(i).scaled_rational(c);
        }
        images[j] = form;
    }
    MPoly<C> numerator = substitute(f.numerator, images);

    // One variable at a time, in gamma order: residue in u_{pos[k]} of
    // numerator / u^{mult} is the coefficient of u_{pos[k]}^{mult-1}.
    for (size_t k = 0; k < gamma.size(); ++k) {
        int var = pos[k];
        auto it = f.denominator.find(gamma[k]);
        int mult = (it == f.denominator.end()) ? 0 : it->second;
        // The residue in u_var of numerator/u_var^mult is the coefficient of
        // u_var^{mult-1}; with no pole (mult 0) it vanishes identically.
        MPoly<C> picked;
        for (const auto& [e, c] : numerator.terms()) {
            int ev = var < static_cast<int>(e.size()) ? e[var] : 0;
            if (ev != mult - 1) continue;
            std::vector<int> rest = e;
            if (var < static_cast<int>(rest.size())) rest[var] = 0;
            picked.add_term(std::move(rest), c);
        }
        numerator = std::move(picked);
    }
    C scalar = numerator.coefficient({});
    return RingTraits<C>::scale(scalar, Rational(Int(1), basis->abs_det));
}

// Truncated expansion of e^{<xi,v>} * prod_a Todd(beta_a(v)) to total degree
// d.  xi is given in the coefficient ring (numbers or symbolic variables).
template <typename C>
TruncSeries<C> todd_product_truncation(const LinearSystem& s, const std::vector<C>& xi, int d) {
    if (d < 0) throw Error(ErrorCode::BadInput, "negative truncation degree");
    if (static_cast<int>(xi.size()) != s.r)
        throw Error(ErrorCode::BadInput, "xi has wrong length");
    RatVec todd = todd_coefficients(d);

    // The Todd factors have purely rational coefficients; multiply them first.
    TruncSeries<Rational> prod(RingTraits<MPoly<Rational>>::one(), d);
    for (const IntVec& beta : s.betas) {
        MPoly<Rational> form;
        for (int i = 0; i < s.r; ++i)
            if (beta[i] != 0)
                form += MPoly<Rational>::variable(i).scaled_rational(Rational(beta[i]));
        prod = prod * series_compose(todd, form, d);
    }

    MPoly<C> pairing;
    for (int i = 0; i < s.r; ++i)
        pairing += MPoly<C>::variable(i).scaled(xi[i]);
    TruncSeries<C> expo = exp_truncated(pairing, d);

    TruncSeries<C> lifted(lift_poly<C>(prod.poly), d);
    return expo * lifted;
}

} // namespace jkres
