#pragma once

#include "supertriv/supermod.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace supertriv {

// ---- Radical / socle / rank (exterior-algebra modules) ----

Matrix radical_basis(const Supermodule& m); // columns
Matrix socle_basis(const Supermodule& m);   // columns
std::size_t rk(const Supermodule& m);       // dim M - dim Rad M

// Composite action a_r o ... o a_1 (matrix product A_r ... A_1); its rank
// counts free summands.
GradedMap top_action(const Supermodule& m);

// ---- Projective stripping ----

struct StripResult {
    Supermodule core; // projective-free part
    std::size_t proj_mult_even = 0;
    std::size_t proj_mult_odd = 0;
    // Isomorphism decomposed -> m, where decomposed is the canonical free
    // module on the witness generators followed by the core.
    Supermodule decomposed;
    Matrix iso;
};

StripResult strip_projectives(const Supermodule& m);
bool is_projective(const Supermodule& m);

// ---- Covers and syzygies ----

// Free module on generators of the given parities: basis (block, subset) in
// even-first order, with subset labels exposed for callers building maps.
struct FreeModule {
    Supermodule module;
    std::vector<int> gen_parities;
    // basis position of (block i, subset mask s)
    std::vector<std::vector<std::size_t>> pos;
    // label of each basis position
    std::vector<std::pair<std::size_t, std::uint32_t>> labels;
};

FreeModule free_module(const SuperAlgebra& ext, const std::vector<int>& gen_parities);

struct Cover {
    FreeModule proj;
    ModuleMap onto;           // proj.module -> m, surjective
    Matrix kernel_basis;      // columns, in proj coordinates, parity-pure
    Supermodule kernel;       // the kernel as a module (even-first basis)
};

Cover projective_cover(const Supermodule& m);

// Omega^n for any integer n; the result is projective-free.
Supermodule syzygy(const Supermodule& m, long n);

// ---- Hom spaces ----

// Basis of all maps commuting strictly with the action (both parity
// components of any homomorphism appear; no degree filter).
std::vector<Matrix> hom_space(const Supermodule& m, const Supermodule& n);
std::size_t stable_hom_dim(const Supermodule& m, const Supermodule& n);
std::size_t ext1_dim(const Supermodule& m, const Supermodule& n);

// Invertible degree-0 module map m -> n, if the seeded search finds one.
std::optional<Matrix> find_isomorphism(const Supermodule& m, const Supermodule& n,
                                       std::uint64_t seed = 1);

// ---- Weight decomposition (E/F families) ----

struct WeightComponent {
    std::vector<Rational> weight; // one eigenvalue per torus generator
    Supermodule piece;            // over the same algebra
    Matrix embedding;             // columns: basis of the piece inside m
};

std::vector<WeightComponent> weight_decompose(const Supermodule& m);

// Weight-zero component re-expressed over the principal quotient algebra.
Supermodule principal_block(const Supermodule& m);

// ---- Rank-1 standard modules ----

Supermodule simple_q1(const Rational& lambda, int parity);
Supermodule proj_cover_q1();
Supermodule induced_sl11(const Rational& lambda);
Supermodule simple_sl11(const Rational& lambda, int parity);

struct SimpleDetectingResult {
    Supermodule module;   // smallest summand obtained over Q
    int multiplicity = 1; // summands of that dimension in the outer product
    bool fully_split = false;
};

SimpleDetectingResult simple_detecting(const SuperAlgebra& alg,
                                       const std::vector<Rational>& lambda, int parity);

// Number of nonzero weight coordinates.
int weight_height(const std::vector<Rational>& lambda);

} // namespace supertriv
