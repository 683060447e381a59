#include "doctest.h"

#include "supertriv/linalg.hpp"
#include "supertriv/modp.hpp"
#include "supertriv/prng.hpp"

using namespace supertriv;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

// Independent rank oracle: largest k with a nonzero k x k minor, by brute
// force over all row/column subsets. Only usable for tiny matrices.
Rational minor_det(const Matrix& m, const std::vector<std::size_t>& ri,
                   const std::vector<std::size_t>& ci) {
    const std::size_t n = ri.size();
    if (n == 0) return 1;
    Rational det = 0;
    std::vector<std::size_t> sub_ci;
    for (std::size_t k = 0; k < n; ++k) {
        sub_ci.clear();
        for (std::size_t t = 0; t < n; ++t)
            if (t != k) sub_ci.push_back(ci[t]);
        std::vector<std::size_t> sub_ri(ri.begin() + 1, ri.end());
        const Rational cof = m.at(ri[0], ci[k]) * minor_det(m, sub_ri, sub_ci);
        if (k % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

void subsets_of(std::size_t n, std::size_t k, std::size_t start,
                std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_of(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::size_t rank_by_minors(const Matrix& m) {
    const std::size_t maxk = std::min(m.rows(), m.cols());
    for (std::size_t k = maxk; k >= 1; --k) {
        std::vector<std::vector<std::size_t>> rsub, csub;
        std::vector<std::size_t> cur;
        subsets_of(m.rows(), k, 0, cur, rsub);
        subsets_of(m.cols(), k, 0, cur, csub);
        for (const auto& ri : rsub)
            for (const auto& ci : csub)
                if (!is_zero(minor_det(m, ri, ci))) return k;
    }
    return 0;
}

Matrix random_matrix(Mcg64& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng.below(3) == 0) m.at(i, j) = rat(rng.range(-4, 4), 1 + long(rng.below(3)));
    return m;
}

} // namespace

TEST_CASE("rref on a worked 3x4 example") {
    const Matrix m = from_rows({{1, 2, 0, 3}, {2, 4, 1, 7}, {1, 2, 1, 4}});
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    // Row-reduced form: pivot columns are unit vectors.
    CHECK(r.rref.at(0, 0) == 1);
    CHECK(r.rref.at(0, 1) == 2);
    CHECK(r.rref.at(0, 2) == 0);
    CHECK(r.rref.at(0, 3) == 3);
    CHECK(r.rref.at(1, 2) == 1);
    CHECK(r.rref.at(1, 3) == 1);
    // Kernel: one column per free column, and m * kernel = 0.
    CHECK(r.kernel_basis.cols() == 2);
    CHECK((m * r.kernel_basis).is_zero());
    // Image basis: original pivot columns.
    CHECK(r.image_basis.at(0, 0) == 1);
    CHECK(r.image_basis.at(1, 0) == 2);
    CHECK(r.image_basis.at(0, 1) == 0);
    CHECK(r.image_basis.at(1, 1) == 1);
}

TEST_CASE("rank agrees with the brute-force minor oracle on random matrices") {
    Mcg64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4));
        CHECK(rank_of(m) == rank_by_minors(m));
    }
}

TEST_CASE("kernel columns span the exact kernel") {
    Mcg64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, 2 + rng.below(3), 2 + rng.below(4));
        const auto r = rref(m);
        CHECK((m * r.kernel_basis).is_zero());
        CHECK(r.kernel_basis.cols() == m.cols() - r.rank);
        CHECK(rank_of(r.kernel_basis) == r.kernel_basis.cols());
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    const Matrix a = from_rows({{2, 0}, {0, 3}, {2, 3}});
    Matrix b(3, 1);
    b.at(0, 0) = 4;
    b.at(1, 0) = 6;
    b.at(2, 0) = 10;
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    b.at(2, 0) = 11; // now inconsistent
    CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("inverse of a random invertible matrix") {
    const Matrix a = from_rows({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(3));
    CHECK(*inv * a == Matrix::identity(3));
    CHECK_FALSE(inverse(Matrix(2, 2)).has_value());
}

TEST_CASE("mod-p rank is a lower bound and usually equals the rational rank") {
    Mcg64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, 2 + rng.below(4), 2 + rng.below(4));
        const std::size_t exact = rank_of(m);
        const auto mp = reduce_mod(m, kPrimes[0]);
        REQUIRE(mp.has_value());
        CHECK(rank_p(*mp) <= exact);
        CHECK(rank_p(*mp) == exact); // these primes do not divide the tiny pivots
    }
}

TEST_CASE("rational reconstruction round-trips matrices through CRT residues") {
    Mcg64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix m = random_matrix(rng, 3, 3);
        std::vector<MatP> residues;
        for (std::size_t k = 0; k < 2; ++k) {
            auto r = reduce_mod(m, kPrimes[k]);
            REQUIRE(r.has_value());
            residues.push_back(std::move(*r));
        }
        const auto back = reconstruct_matrix(residues);
        REQUIRE(back.has_value());
        CHECK(*back == m);
    }
}

TEST_CASE("sparse CSR product matches the dense mod-p product") {
    Mcg64 rng(5);
    const Matrix a = random_matrix(rng, 6, 5);
    const Matrix x = random_matrix(rng, 5, 4);
    const std::uint32_t p = kPrimes[1];
    const auto ap = reduce_mod(a, p);
    const auto xp = reduce_mod(x, p);
    const auto ac = to_csr_mod(a, p);
    REQUIRE(ap.has_value());
    REQUIRE(xp.has_value());
    REQUIRE(ac.has_value());
    const MatP dense = matmul_p(*ap, *xp);
    const MatP sparse = csr_mul(*ac, *xp);
    CHECK(dense.a == sparse.a);
}
