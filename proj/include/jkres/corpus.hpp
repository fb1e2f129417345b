#pragma once

#include <cstdint>
#include <random>

#include "jkres/arrangement.hpp"

namespace jkres {

struct CorpusOptions {
    int min_rank = 1;
    int max_rank = 3;
    int max_n = 8;
    int entry_lo = -2;
    int entry_hi = 2;
    bool require_unimodular = true;
};

// Deterministic (seeded) stream of random pointed systems.  Unimodular
// instances are built by incremental rejection: a column is kept only if
// every r-subset determinant it creates stays in {-1,0,1}.
std::vector<LinearSystem> random_systems(int count, std::uint64_t seed,
                                         const CorpusOptions& opt = {});

// A random lattice point of Cone(B): a small nonnegative integer combination
// of the forms.
IntVec random_cone_point(const LinearSystem& s, std::mt19937_64& rng, int max_coeff);

} // namespace jkres
