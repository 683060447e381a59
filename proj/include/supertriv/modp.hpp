#pragma once

#include "supertriv/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace supertriv {

// Arithmetic modulo word-size primes, used strictly as an accelerator:
// every result consumed downstream is either a certified one-sided bound
// (rank mod p <= rank over Q) or is reconstructed to Q and re-verified
// with exact arithmetic.

// Primes below 2^30 so a product of two residues fits comfortably in 64 bits.
extern const std::vector<std::uint32_t> kPrimes;

struct MatP {
    std::size_t rows = 0, cols = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> a;
    MatP() = default;
    MatP(std::size_t r, std::size_t c, std::uint32_t prime)
        : rows(r), cols(c), p(prime), a(r * c, 0) {}
    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduce a rational matrix mod p; nullopt if p divides any denominator.
std::optional<MatP> reduce_mod(const Matrix& m, std::uint32_t p);

MatP matmul_p(const MatP& a, const MatP& b);

struct RrefPResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    MatP rref;
    MatP kernel_basis;
};

RrefPResult rref_p(const MatP& m);
std::size_t rank_p(const MatP& m);

// Rational reconstruction of u mod m (both nonnegative, u < m): the unique
// p/q with |p|, q <= sqrt(m/2) and p = q*u mod m, if one exists.
std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m);

// Entrywise reconstruction of a matrix known modulo several primes
// (residues[k] taken mod primes[k]); nullopt when some entry fails.
std::optional<Matrix> reconstruct_matrix(const std::vector<MatP>& residues);

// Sparse matrix mod p in CSR form, for cases too large to hold densely.
struct CsrP {
    std::size_t rows = 0, cols = 0;
    std::uint32_t p = 0;
    std::vector<std::size_t> row_start; // size rows+1
    std::vector<std::uint32_t> col;
    std::vector<std::uint32_t> val;
};

std::optional<CsrP> to_csr_mod(const Matrix& m, std::uint32_t p);

// y = a * x with x dense (cols-of-x many right-hand sides).
MatP csr_mul(const CsrP& a, const MatP& x);

} // namespace supertriv
