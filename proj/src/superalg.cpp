#include "supertriv/superalg.hpp"

#include "supertriv/linalg.hpp"

#include <stdexcept>

namespace supertriv {

namespace {

std::vector<Rational> zero_vec(std::size_t n) { return std::vector<Rational>(n); }

SuperAlgebra blank(Family fam, int rank, std::size_t gens) {
    SuperAlgebra a;
    a.family = fam;
    a.rank = rank;
    a.gen_names.resize(gens);
    a.parities.assign(gens, 0);
    a.bracket.assign(gens, std::vector<std::vector<Rational>>(gens, zero_vec(gens)));
    return a;
}

// [a, b] extended bilinearly to coefficient vectors.
std::vector<Rational> bracket_vec(const SuperAlgebra& alg, const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) {
    std::vector<Rational> out(alg.gens());
    for (std::size_t i = 0; i < alg.gens(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < alg.gens(); ++j) {
            if (is_zero(b[j])) continue;
            const Rational c = a[i] * b[j];
            for (std::size_t k = 0; k < alg.gens(); ++k)
                out[k] += c * alg.bracket[i][j][k];
        }
    }
    return out;
}

std::vector<Rational> unit_vec(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::Exterior: return "Exterior";
        case Family::GL11: return "GL11";
    }
    return "?";
}

std::vector<std::size_t> SuperAlgebra::odd_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens(); ++i)
        if (parities[i] % 2 != 0) out.push_back(i);
    return out;
}

bool SuperAlgebra::same_presentation(const SuperAlgebra& o) const {
    return parities == o.parities && bracket == o.bracket && torus_indices == o.torus_indices;
}

bool SuperAlgebra::operator==(const SuperAlgebra& o) const {
    return family == o.family && rank == o.rank && gen_names == o.gen_names &&
           same_presentation(o);
}

SuperAlgebra detecting_e(int m) {
    if (m < 1) throw std::invalid_argument("detecting_e: rank must be positive");
    SuperAlgebra a = blank(Family::E, m, 2 * std::size_t(m));
    for (int i = 0; i < m; ++i) {
        a.gen_names[i] = "t" + std::to_string(i + 1);
        a.parities[i] = 0;
        a.torus_indices.push_back(i);
        a.gen_names[m + i] = "e" + std::to_string(i + 1);
        a.parities[m + i] = 1;
        a.bracket[m + i][m + i][i] = 2; // [ei, ei] = 2 ti
    }
    return a;
}

SuperAlgebra detecting_f(int n) {
    if (n < 1) throw std::invalid_argument("detecting_f: rank must be positive");
    SuperAlgebra a = blank(Family::F, n, 3 * std::size_t(n));
    for (int i = 0; i < n; ++i) {
        const std::size_t t = i, x = n + 2 * std::size_t(i), y = x + 1;
        a.gen_names[t] = "t" + std::to_string(i + 1);
        a.parities[t] = 0;
        a.torus_indices.push_back(t);
        a.gen_names[x] = "x" + std::to_string(i + 1);
        a.parities[x] = 1;
        a.gen_names[y] = "y" + std::to_string(i + 1);
        a.parities[y] = 1;
        a.bracket[x][y][t] = 1; // [xi, yi] = ti
        a.bracket[y][x][t] = 1; // symmetric for odd-odd
    }
    return a;
}

SuperAlgebra exterior(int r) {
    if (r < 1) throw std::invalid_argument("exterior: rank must be positive");
    SuperAlgebra a = blank(Family::Exterior, r, std::size_t(r));
    for (int i = 0; i < r; ++i) {
        a.gen_names[i] = "a" + std::to_string(i + 1);
        a.parities[i] = 1;
    }
    return a;
}

SuperAlgebra gl11() {
    SuperAlgebra a = blank(Family::GL11, 1, 4);
    a.gen_names = {"t1", "t2", "x", "y"};
    a.parities = {0, 0, 1, 1};
    a.torus_indices = {0, 1};
    const std::size_t t1 = 0, t2 = 1, x = 2, y = 3;
    a.bracket[x][y][t1] = 1;
    a.bracket[x][y][t2] = 1;
    a.bracket[y][x][t1] = 1;
    a.bracket[y][x][t2] = 1;
    a.bracket[t1][x][x] = 1;
    a.bracket[x][t1][x] = -1;
    a.bracket[t2][x][x] = -1;
    a.bracket[x][t2][x] = 1;
    a.bracket[t1][y][y] = -1;
    a.bracket[y][t1][y] = 1;
    a.bracket[t2][y][y] = 1;
    a.bracket[y][t2][y] = -1;
    return a;
}

std::optional<std::string> check_algebra(const SuperAlgebra& alg) {
    const std::size_t n = alg.gens();
    // Super-anticommutativity: [g,h] = -(-1)^{|g||h|} [h,g].
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int sign = (alg.parities[i] * alg.parities[j]) % 2 ? 1 : -1;
            for (std::size_t k = 0; k < n; ++k)
                if (alg.bracket[i][j][k] != sign * alg.bracket[j][i][k])
                    return "anticommutativity fails on [" + alg.gen_names[i] + "," +
                           alg.gen_names[j] + "]";
        }
    // Parity of bracket values.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(alg.bracket[i][j][k]) &&
                    (alg.parities[i] + alg.parities[j]) % 2 != alg.parities[k] % 2)
                    return "bracket value parity fails on [" + alg.gen_names[i] + "," +
                           alg.gen_names[j] + "]";
    // Super Jacobi: (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]]
    //             + (-1)^{|c||b|}[c,[a,b]] = 0.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const auto ei = unit_vec(n, i), ej = unit_vec(n, j), el = unit_vec(n, l);
                auto term = [&](const std::vector<Rational>& a, const std::vector<Rational>& b,
                                const std::vector<Rational>& c, int pa, int pc) {
                    auto v = bracket_vec(alg, a, bracket_vec(alg, b, c));
                    if ((pa * pc) % 2)
                        for (auto& e : v) e = -e;
                    return v;
                };
                auto s1 = term(ei, ej, el, alg.parities[i], alg.parities[l]);
                auto s2 = term(ej, el, ei, alg.parities[j], alg.parities[i]);
                auto s3 = term(el, ei, ej, alg.parities[l], alg.parities[j]);
                for (std::size_t k = 0; k < n; ++k)
                    if (!is_zero(s1[k] + s2[k] + s3[k]))
                        return "Jacobi fails on (" + alg.gen_names[i] + "," + alg.gen_names[j] +
                               "," + alg.gen_names[l] + ")";
            }
    return std::nullopt;
}

Finiteness one_dim_finiteness(const SuperAlgebra& alg) {
    const std::size_t n = alg.gens();
    // Span of all bracket values, as columns.
    Matrix span(n, n * n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j, ++c)
            for (std::size_t k = 0; k < n; ++k) span.at(k, c) = alg.bracket[i][j][k];
    Matrix evens(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        if (alg.parities[k] % 2 != 0) continue;
        Matrix e(n, 1);
        e.at(k, 0) = 1;
        evens = Matrix::hcat(evens, e);
    }
    return solve(span, evens) ? Finiteness::Finite : Finiteness::Infinite;
}

SuperAlgebra principal_quotient(const SuperAlgebra& alg) {
    if (alg.family != Family::E && alg.family != Family::F)
        throw std::invalid_argument("principal_quotient: E or F family required");
    return exterior(int(alg.odd_indices().size()));
}

} // namespace supertriv
