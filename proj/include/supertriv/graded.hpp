#pragma once

#include "supertriv/matrix.hpp"

#include <cstddef>
#include <vector>

namespace supertriv {

// Z2-graded vector space. Basis convention everywhere: even vectors first.
struct GradedSpace {
    std::size_t dim_even = 0;
    std::size_t dim_odd = 0;

    std::size_t total() const { return dim_even + dim_odd; }
    int parity(std::size_t i) const { return i < dim_even ? 0 : 1; }

    bool operator==(const GradedSpace& o) const {
        return dim_even == o.dim_even && dim_odd == o.dim_odd;
    }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }
};

// Parity-homogeneous linear map with its degree recorded.
struct GradedMap {
    GradedSpace source;
    GradedSpace target;
    Matrix matrix; // target.total() x source.total()
    int degree = 0;
};

// Entrywise block-purity check: a degree-0 map vanishes between unequal
// parities, a degree-1 map between equal parities.
bool block_pure(const GradedMap& f);

// f after g; degrees add mod 2.
GradedMap graded_compose(const GradedMap& f, const GradedMap& g);

// Stable permutation sending a parity-labelled basis to even-first order.
// Returns new_of_old: basis vector i moves to position new_of_old[i].
std::vector<std::size_t> even_first_perm(const std::vector<int>& parities);

// B with B[new_of_old[i]][new_of_old[j]] = A[i][j].
Matrix apply_perm(const Matrix& a, const std::vector<std::size_t>& new_of_old);

// Rows only: B[new_of_old[i]][j] = A[i][j].
Matrix apply_row_perm(const Matrix& a, const std::vector<std::size_t>& new_of_old);

} // namespace supertriv
