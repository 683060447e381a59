#pragma once

#include "supertriv/graded.hpp"
#include "supertriv/superalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supertriv {

struct Supermodule {
    SuperAlgebra algebra;
    GradedSpace space;
    std::vector<Matrix> actions; // one per generator, in generator order

    std::size_t dim() const { return space.total(); }
};

struct ValidationError {
    enum class Kind { ParityImpure, RelationFailed, TorusNotDiagonalizable } kind;
    std::string detail;
};

// Checks parity purity of every action, the bracket relations
// A_g A_h - (-1)^{|g||h|} A_h A_g = A_{[g,h]}, and rational
// diagonalizability of the torus actions.
std::optional<ValidationError> validate(const Supermodule& m);

Supermodule trivial_module(const SuperAlgebra& alg, int parity);
Supermodule zero_module(const SuperAlgebra& alg);

// The free rank-1 module over an exterior algebra: basis indexed by subsets
// in even-first mask order, generators acting by left multiplication.
Supermodule lambda_regular(const SuperAlgebra& ext);

// Even/odd swapped; actions conjugated by the basis swap. An involution on
// the nose.
Supermodule parity_shift(const Supermodule& m);

// Block-diagonal sum with basis re-sorted even-first.
Supermodule direct_sum(const Supermodule& a, const Supermodule& b);
// Where basis vector i of a (then of b, offset by dim a) lands in the sum.
std::vector<std::size_t> direct_sum_perm(const GradedSpace& a, const GradedSpace& b);

// Graded tensor product with the Koszul sign: x.(v (x) w) =
// (x.v) (x) w + (-1)^{|x||v|} v (x) (x.w). Basis: lexicographic pairs,
// re-sorted even-first.
Supermodule tensor(const Supermodule& a, const Supermodule& b);
// Where pair (i,j) (flattened i*dim_b+j) lands in the tensor basis.
std::vector<std::size_t> tensor_perm(const GradedSpace& a, const GradedSpace& b);

// Module over the rank-sum algebra of the same family; first-factor
// generators act on the left slot, second-factor ones on the right with the
// Koszul sign.
Supermodule outer_tensor(const Supermodule& a, const Supermodule& b);

// Dual with action (x.f)(v) = -(-1)^{|x||f|} f(x.v) on the dual basis.
Supermodule dual(const Supermodule& m);

// Internal Hom: underlying space Hom_k(m, n) with action
// (x.f)(v) = x.f(v) - (-1)^{|x||f|} f(x.v). Realized as tensor(n, dual(m));
// the basis pair (i, j) corresponds to the elementary map e_j |-> e_i.
Supermodule hom_module(const Supermodule& m, const Supermodule& n);

// Restriction of an exterior-algebra module to the subalgebra spanned by
// the given independent odd vectors (coefficients over a1..ar).
Supermodule restrict_module(const Supermodule& m,
                            const std::vector<std::vector<Rational>>& vs);

struct ModuleMap {
    Supermodule source;
    Supermodule target;
    GradedMap map; // degree 0
};

// Strict commutation f A_g = B_g f for every generator (no parity filter).
bool commutes_with_actions(const Supermodule& src, const Supermodule& dst, const Matrix& f);
// Degree-0 module map check: block purity plus commutation.
bool is_module_map(const ModuleMap& f);

// Evaluation tensor(m, dual(m)) -> k_ev, (v (x) f) |-> (-1)^{|v|} f(v).
ModuleMap evaluation_map(const Supermodule& m);

// diag((-1)^{parity of basis vector i}).
Matrix parity_sign_matrix(const GradedSpace& s);

} // namespace supertriv
