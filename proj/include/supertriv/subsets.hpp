#pragma once

#include "supertriv/matrix.hpp"

#include <cstdint>
#include <vector>

// Subset bookkeeping for exterior-algebra bases. A subset S of {0..r-1} is a
// bitmask; the associated monomial is the product of generators in increasing
// index order.

namespace supertriv::subsets {

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

// All 2^r masks, even-sized subsets first; within a parity class, ordered by
// mask value. This is the basis order of the regular module.
inline std::vector<std::uint32_t> even_first_masks(int r) {
    std::vector<std::uint32_t> out;
    out.reserve(std::size_t(1) << r);
    for (int par = 0; par < 2; ++par)
        for (std::uint32_t m = 0; m < (1u << r); ++m)
            if (popcount(m) % 2 == par) out.push_back(m);
    return out;
}

// Sign of a_i * a_S = sign * a_{S+i}: the number of generators in S with a
// smaller index. Requires i not in S.
inline int insert_sign(std::uint32_t s, int i) {
    const std::uint32_t below = s & ((1u << i) - 1);
    return popcount(below) % 2 == 0 ? 1 : -1;
}

// Sign eps(S) with a_{S^c} * a_S = eps(S) * a_{top}: inversions between the
// complement and S in the concatenated word (S^c, S).
inline int eps_sign(std::uint32_t s, int r) {
    int inv = 0;
    for (int i = 0; i < r; ++i) {
        if (!(s & (1u << i))) continue;
        for (int j = i + 1; j < r; ++j)
            if (!(s & (1u << j))) ++inv; // j in complement, j > i in S
    }
    return inv % 2 == 0 ? 1 : -1;
}

// a_S . v via iterated matrix-vector products: generators applied in
// decreasing index order so the product reads in increasing order.
inline Matrix apply_subset(const std::vector<Matrix>& actions, std::uint32_t s,
                           Matrix v) {
    for (int i = int(actions.size()) - 1; i >= 0; --i)
        if (s & (1u << i)) v = actions[std::size_t(i)] * v;
    return v;
}

// Row-functional version: (f^T . a_S) as a row vector, same operator order.
inline std::vector<Rational> apply_subset_row(const std::vector<Matrix>& actions,
                                              std::uint32_t s,
                                              std::vector<Rational> f) {
    for (std::size_t i = 0; i < actions.size(); ++i)
        if (s & (1u << i)) f = row_times(f, actions[i]);
    return f;
}

} // namespace supertriv::subsets
