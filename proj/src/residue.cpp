#include "jkres/residue.hpp"

#include <random>
#include <sstream>

namespace jkres {

namespace {

std::vector<RatVec> columns_of(const LinearSystem& s, const std::vector<int>& indices) {
    std::vector<RatVec> cols;
    cols.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || i >= s.n()) throw Error(ErrorCode::BadInput, "form index out of range");
        cols.push_back(to_rational_vec(s.betas[i]));
    }
    return cols;
}

// A subset is a circuit iff its kernel is one-dimensional with a fully
// nonzero kernel vector (every element participates in the dependency).
std::optional<RatVec> circuit_kernel(const LinearSystem& s, const std::vector<int>& subset) {
    auto ker = kernel(RatMatrix::from_columns(columns_of(s, subset)));
    if (ker.size() != 1) return std::nullopt;
    for (const Rational& c : ker[0])
        if (c.is_zero()) return std::nullopt;
    return ker[0];
}

long potential(const DenomKey& key) {
    long p = 0;
    for (const auto& [idx, mult] : key) p += static_cast<long>(idx) * mult;
    return p;
}

} // namespace

void CircuitIndex::build() {
    if (built_) return;
    built_ = true;
    int n = s_.n();
    int max_size = std::min(n, s_.r + 1);
    std::vector<int> subset;
    auto rec = [&](auto&& self, int from) -> void {
        if (subset.size() >= 2 && circuit_kernel(s_, subset)) all_.push_back(subset);
        if (static_cast<int>(subset.size()) == max_size) return;
        for (int i = from; i < n; ++i) {
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(all_.begin(), all_.end());
}

const std::vector<std::vector<int>>& CircuitIndex::circuits_within(
    const std::vector<int>& support) {
    auto it = by_support_.find(support);
    if (it != by_support_.end()) return it->second;
    build();
    std::vector<std::vector<int>> out;
    for (const auto& circuit : all_) {
        if (std::includes(support.begin(), support.end(), circuit.begin(), circuit.end()))
            out.push_back(circuit);
    }
    return by_support_.emplace(support, std::move(out)).first->second;
}

RatVec circuit_relation(const LinearSystem& s, const std::vector<int>& circuit) {
    auto ker = circuit_kernel(s, circuit);
    if (!ker) throw Error(ErrorCode::BadInput, "subset is not a circuit");
    // sum_i ker[i] * beta_{circuit[i]} = 0; pivot is the last (max) element.
    size_t p = circuit.size() - 1;
    RatVec d;
    d.reserve(p);
    Rational scale = -(*ker)[p].inverse();
    for (size_t i = 0; i < p; ++i) d.push_back((*ker)[i] * scale);
    return d;
}

std::map<DenomKey, Rational> reduce_denominator(const LinearSystem& s, CircuitIndex& circuits,
                                                const std::map<int, int>& denominator,
                                                const ReduceOptions& opt) {
    for (const auto& [idx, mult] : denominator) {
        if (idx < 0 || idx >= s.n()) throw Error(ErrorCode::BadInput, "form index out of range");
        if (mult < 1) throw Error(ErrorCode::BadInput, "multiplicity must be positive");
    }
    DenomKey start(denominator.begin(), denominator.end());

    std::mt19937_64 rng(opt.seed.value_or(0));
    std::map<std::pair<long, DenomKey>, Rational> active;
    std::map<DenomKey, Rational> done;
    active.emplace(std::make_pair(potential(start), start), Rational(1));

    std::ostringstream trace;
    bool tracing = opt.trace != nullptr;
    if (tracing) trace << "[";
    bool first_step = true;

    while (!active.empty()) {
        auto it = active.begin();
        DenomKey key = it->first.second;
        Rational coeff = it->second;
        active.erase(it);

        std::vector<int> support;
        support.reserve(key.size());
        for (const auto& [idx, mult] : key) support.push_back(idx);
        const auto& circs = circuits.circuits_within(support);
        if (circs.empty()) { // independent support: terminal
            auto [dit, inserted] = done.emplace(key, coeff);
            if (!inserted) {
                dit->second += coeff;
                if (dit->second.is_zero()) done.erase(dit);
            }
            continue;
        }
        const std::vector<int>& chosen =
            opt.seed ? circs[rng() % circs.size()] : circs.front();
        int pivot = chosen.back();
        RatVec d = circuit_relation(s, chosen);

        if (tracing) {
            if (!first_step) trace << ",";
            first_step = false;
            trace << "{\"denominator\":[";
            for (size_t i = 0; i < key.size(); ++i)
                trace << (i ? "," : "") << "[" << key[i].first << "," << key[i].second << "]";
            trace << "],\"circuit\":[";
            for (size_t i = 0; i < chosen.size(); ++i)
                trace << (i ? "," : "") << chosen[i];
            trace << "],\"pivot\":" << pivot << "}";
        }

        for (size_t i = 0; i + 1 < chosen.size(); ++i) {
            Rational child_coeff = coeff * d[i];
            if (child_coeff.is_zero()) continue;
            DenomKey child;
            child.reserve(key.size() + 1);
            bool pivot_seen = false;
            for (const auto& [idx, mult] : key) {
                int m = mult;
                if (idx == chosen[i]) m -= 1;
                if (idx == pivot) {
                    m += 1;
                    pivot_seen = true;
                }
                if (m > 0) child.emplace_back(idx, m);
            }
            if (!pivot_seen) throw Error(ErrorCode::Internal, "pivot missing from support");
            auto [ait, inserted] =
                active.emplace(std::make_pair(potential(child), child), child_coeff);
            if (!inserted) {
                ait->second += child_coeff;
                if (ait->second.is_zero()) active.erase(ait);
            }
        }
    }
    if (tracing) {
        trace << "]";
        *opt.trace += trace.str();
    }
    return done;
}

std::map<std::vector<int>, Rational> u_expansion(const BasisInfo& basis,
                                                 const std::vector<int>& vmono, int rank) {
    MPoly<Rational> prod = RingTraits<MPoly<Rational>>::one();
    for (size_t j = 0; j < vmono.size(); ++j) {
        if (vmono[j] == 0) continue;
        if (static_cast<int>(j) >= rank)
            throw Error(ErrorCode::BadInput, "monomial uses a variable beyond the rank");
        MPoly<Rational> form; // v_j = sum_i inverse[i][j] * u_i
        for (int i = 0; i < rank; ++i) {
            const Rational& c = basis.inverse.entries[i][j];
            if (!c.is_zero()) form += MPoly<Rational>::variable(i).scaled_rational(c);
        }
        prod = prod * form.pow(vmono[j]);
    }
    std::map<std::vector<int>, Rational> out;
    for (const auto& [e, c] : prod.terms()) out.emplace(e, c);
    return out;
}

} // namespace jkres
