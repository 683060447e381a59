#include "supertriv/modp.hpp"

#include <stdexcept>

namespace supertriv {

const std::vector<std::uint32_t> kPrimes = {
    998244353u, 1004535809u, 754974721u, 469762049u, 167772161u, 104857601u,
};

namespace {

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t)a * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
    return powmod(a, p - 2, p); // p prime
}

std::optional<std::uint32_t> reduce_rational(const Rational& q, std::uint32_t p) {
    const std::uint32_t num =
        static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
    const std::uint32_t den =
        static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
    if (den == 0) return std::nullopt;
    return mulmod(num, invmod(den, p), p);
}

} // namespace

std::optional<MatP> reduce_mod(const Matrix& m, std::uint32_t p) {
    MatP out(m.rows(), m.cols(), p);
    for (std::size_t i = 0; i < m.rows() * m.cols(); ++i) {
        const Rational& q = m.data()[i];
        if (is_zero(q)) continue;
        auto r = reduce_rational(q, p);
        if (!r) return std::nullopt;
        out.a[i] = *r;
    }
    return out;
}

MatP matmul_p(const MatP& a, const MatP& b) {
    if (a.cols != b.rows || a.p != b.p) throw std::invalid_argument("matmul_p mismatch");
    MatP out(a.rows, b.cols, a.p);
    const std::uint64_t p = a.p;
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            const std::uint32_t* brow = &b.a[k * b.cols];
            std::uint32_t* orow = &out.a[i * b.cols];
            for (std::size_t j = 0; j < b.cols; ++j) {
                if (brow[j]) orow[j] = static_cast<std::uint32_t>((orow[j] + aik * brow[j]) % p);
            }
        }
    }
    return out;
}

RrefPResult rref_p(const MatP& m) {
    RrefPResult out;
    MatP a = m;
    const std::uint32_t p = a.p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t piv = r;
        while (piv < a.rows && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const std::uint32_t inv = invmod(a.at(r, c), p);
        if (inv != 1)
            for (std::size_t j = c; j < a.cols; ++j)
                if (a.at(r, j)) a.at(r, j) = mulmod(a.at(r, j), inv, p);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r) continue;
            const std::uint64_t f = a.at(i, c);
            if (f == 0) continue;
            a.at(i, c) = 0;
            const std::uint32_t* rrow = &a.a[r * a.cols];
            std::uint32_t* irow = &a.a[i * a.cols];
            for (std::size_t j = c + 1; j < a.cols; ++j)
                if (rrow[j])
                    irow[j] = static_cast<std::uint32_t>(
                        (irow[j] + (std::uint64_t)p - f * rrow[j] % p) % p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = out.pivots.size();
    out.rref = a;

    std::vector<bool> is_pivot(a.cols, false);
    for (auto c : out.pivots) is_pivot[c] = true;
    out.kernel_basis = MatP(a.cols, a.cols - out.rank, p);
    std::size_t k = 0;
    for (std::size_t j = 0; j < a.cols; ++j) {
        if (is_pivot[j]) continue;
        out.kernel_basis.at(j, k) = 1;
        for (std::size_t pr = 0; pr < out.rank; ++pr) {
            const std::uint32_t v = a.at(pr, j);
            if (v) out.kernel_basis.at(out.pivots[pr], k) = p - v;
        }
        ++k;
    }
    return out;
}

std::size_t rank_p(const MatP& m) {
    // Row echelon only (no back substitution) for speed.
    MatP a = m;
    const std::uint32_t p = a.p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t piv = r;
        while (piv < a.rows && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const std::uint32_t inv = invmod(a.at(r, c), p);
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            const std::uint64_t f = mulmod(a.at(i, c), inv, p);
            if (f == 0) continue;
            a.at(i, c) = 0;
            const std::uint32_t* rrow = &a.a[r * a.cols];
            std::uint32_t* irow = &a.a[i * a.cols];
            for (std::size_t j = c + 1; j < a.cols; ++j)
                if (rrow[j])
                    irow[j] = static_cast<std::uint32_t>((irow[j] + (std::uint64_t)p - f * rrow[j] % p) % p);
        }
        ++r;
    }
    return r;
}

std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
    // Half-extended Euclid: stop when remainder drops below sqrt(m/2).
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = u % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class num = r1, den = t1;
    if (den < 0) { den = -den; num = -num; }
    if (den > bound) return std::nullopt;
    if (gcd(num, den) != 1) return std::nullopt;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Matrix> reconstruct_matrix(const std::vector<MatP>& residues) {
    if (residues.empty()) return std::nullopt;
    const std::size_t rows = residues[0].rows, cols = residues[0].cols;
    // CRT modulus.
    mpz_class m = 1;
    for (const auto& r : residues) m *= r.p;
    Matrix out(rows, cols);
    for (std::size_t idx = 0; idx < rows * cols; ++idx) {
        // CRT combine.
        mpz_class x = 0, mod = 1;
        for (const auto& r : residues) {
            // x' = x + mod * ((r - x) * mod^-1 mod p)
            const std::uint32_t p = r.p;
            std::uint32_t xi = static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), p));
            std::uint32_t mi = static_cast<std::uint32_t>(mpz_fdiv_ui(mod.get_mpz_t(), p));
            std::uint32_t delta = (r.a[idx] + p - xi) % p;
            std::uint32_t step = mulmod(delta, invmod(mi, p), p);
            x += mod * step;
            mod *= p;
        }
        auto q = rational_reconstruct(x, m);
        if (!q) return std::nullopt;
        out.data()[idx] = *q;
    }
    return out;
}

std::optional<CsrP> to_csr_mod(const Matrix& m, std::uint32_t p) {
    CsrP out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.p = p;
    out.row_start.assign(m.rows() + 1, 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out.row_start[i] = out.col.size();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            if (is_zero(q)) continue;
            auto r = reduce_rational(q, p);
            if (!r) return std::nullopt;
            if (*r == 0) continue;
            out.col.push_back(static_cast<std::uint32_t>(j));
            out.val.push_back(*r);
        }
    }
    out.row_start[m.rows()] = out.col.size();
    return out;
}

MatP csr_mul(const CsrP& a, const MatP& x) {
    if (a.cols != x.rows || a.p != x.p) throw std::invalid_argument("csr_mul mismatch");
    MatP out(a.rows, x.cols, a.p);
    const std::uint64_t p = a.p;
    std::vector<std::uint64_t> acc(x.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        std::size_t budget = 0;
        for (std::size_t e = a.row_start[i]; e < a.row_start[i + 1]; ++e) {
            const std::uint64_t v = a.val[e];
            const std::uint32_t* xrow = &x.a[(std::size_t)a.col[e] * x.cols];
            for (std::size_t j = 0; j < x.cols; ++j) acc[j] += v * xrow[j] % p;
            if (++budget == 16) { // keep accumulators far from overflow
                for (std::size_t j = 0; j < x.cols; ++j) acc[j] %= p;
                budget = 0;
            }
        }
        std::uint32_t* orow = &out.a[i * x.cols];
        for (std::size_t j = 0; j < x.cols; ++j)
            orow[j] = static_cast<std::uint32_t>(acc[j] % p);
    }
    return out;
}

} // namespace supertriv
