#pragma once

#include "supertriv/matrix.hpp"

#include <vector>

namespace supertriv {

// Polynomials over Q as coefficient vectors, low degree first.
using Poly = std::vector<Rational>;

Poly poly_derivative(const Poly& p);
Poly poly_monic_gcd(Poly a, Poly b);
Rational poly_eval(const Poly& p, const Rational& x);

// Minimal polynomial of a square matrix (monic), by Krylov iteration on the
// powers of the matrix.
Poly min_poly(const Matrix& a);

struct EigenInfo {
    bool diagonalizable_rational = false;
    std::vector<Rational> eigenvalues; // distinct, sorted
};

// Decides whether the matrix is diagonalizable with all-rational eigenvalues
// (minimal polynomial squarefree and split over Q) and returns the spectrum.
EigenInfo rational_eigen(const Matrix& a);

} // namespace supertriv
