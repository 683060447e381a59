#pragma once

#include "supertriv/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supertriv {

enum class Family { E, F, Exterior, GL11 };

std::string family_name(Family f);

// Finite presentation of a Lie superalgebra: generators with parity and a
// full bracket table with values expressed over the generators.
struct SuperAlgebra {
    Family family = Family::Exterior;
    int rank = 0; // m for E, n for F, r for Exterior, 1 for GL11
    std::vector<std::string> gen_names;
    std::vector<int> parities; // per generator
    // bracket[i][j] = coefficients of [g_i, g_j] over the generators
    std::vector<std::vector<std::vector<Rational>>> bracket;
    std::vector<std::size_t> torus_indices;

    std::size_t gens() const { return gen_names.size(); }
    std::vector<std::size_t> odd_indices() const;

    bool same_presentation(const SuperAlgebra& o) const; // ignores names
    bool operator==(const SuperAlgebra& o) const;
};

// q(1)^m: generators t1..tm (even), e1..em (odd); [ei,ei] = 2ti.
SuperAlgebra detecting_e(int m);
// sl(1|1)^n: generators t1..tn (even), x1,y1..xn,yn (odd); [xi,yi] = ti.
SuperAlgebra detecting_f(int n);
// Exterior algebra generators a1..ar, all odd, all brackets zero.
SuperAlgebra exterior(int r);
// gl(1|1): t1, t2 even, x, y odd; [x,y] = t1+t2, [t1,x] = x, [t2,x] = -x,
// [t1,y] = -y, [t2,y] = y (matrix realization t1 = E11, t2 = E22).
SuperAlgebra gl11();

// Super-anticommutativity and super Jacobi identity on all generator
// triples; returns a description of the first failure.
std::optional<std::string> check_algebra(const SuperAlgebra& alg);

enum class Finiteness { Finite, Infinite };

// Finitely many one-dimensional modules iff the even part lies in the span
// of the bracket values.
Finiteness one_dim_finiteness(const SuperAlgebra& alg);

// The exterior algebra on the odd generators (E and F families only).
SuperAlgebra principal_quotient(const SuperAlgebra& alg);

} // namespace supertriv
