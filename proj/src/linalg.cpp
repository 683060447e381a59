#include "supertriv/linalg.hpp"

#include <stdexcept>

namespace supertriv {

namespace {

// Row echelon core shared by rref/solve: eliminates in place over the first
// `lead_cols` columns (trailing columns ride along as augmentation).
struct Echelon {
    Matrix a;
    std::vector<std::size_t> pivots; // column index per pivot row
    explicit Echelon(Matrix m) : a(std::move(m)) {}

    void run(std::size_t lead_cols) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < lead_cols && r < a.rows(); ++c) {
            std::size_t p = r;
            while (p < a.rows() && is_zero(a.at(p, c))) ++p;
            if (p == a.rows()) continue;
            if (p != r) swap_rows(p, r);
            normalize_row(r, c);
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (i == r || is_zero(a.at(i, c))) continue;
                eliminate(i, r, c);
            }
            pivots.push_back(c);
            ++r;
        }
    }

private:
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    }
    void normalize_row(std::size_t r, std::size_t c) {
        const Rational inv = 1 / a.at(r, c);
        if (inv == 1) return;
        for (std::size_t j = c; j < a.cols(); ++j) {
            if (sgn(a.at(r, j)) != 0) a.at(r, j) *= inv;
        }
    }
    void eliminate(std::size_t i, std::size_t r, std::size_t c) {
        const Rational f = a.at(i, c);
        a.at(i, c) = 0;
        for (std::size_t j = c + 1; j < a.cols(); ++j) {
            const Rational& rv = a.at(r, j);
            if (sgn(rv) != 0) a.at(i, j) -= f * rv;
        }
    }
};

} // namespace

RrefResult rref(const Matrix& m) {
    Echelon e(m);
    e.run(m.cols());
    RrefResult out;
    out.rank = e.pivots.size();
    out.pivots = e.pivots;
    out.rref = std::move(e.a);
    out.image_basis = m.columns(out.pivots);

    // Kernel: one column per free variable j, with 1 at j and -R(pr, j) at
    // each pivot column.
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : out.pivots) is_pivot[c] = true;
    const std::size_t nullity = m.cols() - out.rank;
    out.kernel_basis = Matrix(m.cols(), nullity);
    std::size_t k = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        out.kernel_basis.at(j, k) = 1;
        for (std::size_t pr = 0; pr < out.rank; ++pr)
            out.kernel_basis.at(out.pivots[pr], k) = -out.rref.at(pr, j);
        ++k;
    }
    return out;
}

std::size_t rank_of(const Matrix& m) {
    Echelon e(m);
    e.run(m.cols());
    return e.pivots.size();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Echelon e(Matrix::hcat(a, b));
    e.run(a.cols());
    // Rows below the last pivot must be zero in the augmented part.
    const std::size_t rank = e.pivots.size();
    for (std::size_t i = rank; i < e.a.rows(); ++i)
        for (std::size_t j = a.cols(); j < e.a.cols(); ++j)
            if (!is_zero(e.a.at(i, j))) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t pr = 0; pr < rank; ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivots[pr], j) = e.a.at(pr, a.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x) return std::nullopt;
    if (rank_of(a) != a.rows()) return std::nullopt;
    return x;
}

} // namespace supertriv
