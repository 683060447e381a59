#pragma once

#include "supertriv/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace supertriv {

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column indices, left to right
    Matrix rref;                     // reduced row echelon form
    Matrix kernel_basis;             // columns span the null space
    Matrix image_basis;              // the original pivot columns
};

// Gauss-Jordan elimination over Q. Pivot rule: scan columns left to right,
// take the first row with a nonzero entry. Deterministic by construction.
RrefResult rref(const Matrix& m);

std::size_t rank_of(const Matrix& m);

// One exact solution x of a*x = b (b may have several columns), or nullopt
// when some column of b is outside the column space of a.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

} // namespace supertriv
