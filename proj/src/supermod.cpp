#include "supertriv/supermod.hpp"

#include "supertriv/linalg.hpp"
#include "supertriv/minpoly.hpp"
#include "supertriv/subsets.hpp"

#include <stdexcept>

namespace supertriv {

namespace {

std::vector<int> space_parities(const GradedSpace& s) {
    std::vector<int> p(s.total());
    for (std::size_t i = 0; i < s.total(); ++i) p[i] = s.parity(i);
    return p;
}

} // namespace

std::optional<ValidationError> validate(const Supermodule& m) {
    const auto& alg = m.algebra;
    if (m.actions.size() != alg.gens())
        return ValidationError{ValidationError::Kind::RelationFailed,
                               "action count does not match generator count"};
    for (std::size_t g = 0; g < alg.gens(); ++g) {
        GradedMap gm{m.space, m.space, m.actions[g], alg.parities[g]};
        if (m.actions[g].rows() != m.dim() || m.actions[g].cols() != m.dim() ||
            !block_pure(gm))
            return ValidationError{ValidationError::Kind::ParityImpure,
                                   "action of " + alg.gen_names[g] +
                                       " is not parity-pure of degree " +
                                       std::to_string(alg.parities[g])};
    }
    for (std::size_t g = 0; g < alg.gens(); ++g)
        for (std::size_t h = 0; h < alg.gens(); ++h) {
            Matrix lhs = m.actions[g] * m.actions[h];
            const Matrix hg = m.actions[h] * m.actions[g];
            if ((alg.parities[g] * alg.parities[h]) % 2)
                lhs = lhs + hg;
            else
                lhs = lhs - hg;
            Matrix rhs(m.dim(), m.dim());
            for (std::size_t k = 0; k < alg.gens(); ++k)
                if (!is_zero(alg.bracket[g][h][k]))
                    rhs = rhs + m.actions[k].scaled(alg.bracket[g][h][k]);
            if (lhs != rhs)
                return ValidationError{ValidationError::Kind::RelationFailed,
                                       "bracket relation fails on (" + alg.gen_names[g] +
                                           "," + alg.gen_names[h] + ")"};
        }
    for (auto t : alg.torus_indices) {
        const auto info = rational_eigen(m.actions[t]);
        if (!info.diagonalizable_rational)
            return ValidationError{ValidationError::Kind::TorusNotDiagonalizable,
                                   alg.gen_names[t] +
                                       " does not act diagonalizably with rational "
                                       "eigenvalues"};
    }
    return std::nullopt;
}

Supermodule trivial_module(const SuperAlgebra& alg, int parity) {
    Supermodule m;
    m.algebra = alg;
    m.space = parity % 2 == 0 ? GradedSpace{1, 0} : GradedSpace{0, 1};
    m.actions.assign(alg.gens(), Matrix(1, 1));
    return m;
}

Supermodule zero_module(const SuperAlgebra& alg) {
    Supermodule m;
    m.algebra = alg;
    m.space = GradedSpace{0, 0};
    m.actions.assign(alg.gens(), Matrix(0, 0));
    return m;
}

Supermodule lambda_regular(const SuperAlgebra& ext) {
    if (ext.family != Family::Exterior)
        throw std::invalid_argument("lambda_regular: exterior algebra required");
    const int r = ext.rank;
    const auto masks = subsets::even_first_masks(r);
    std::vector<std::size_t> pos(std::size_t(1) << r);
    for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
    Supermodule m;
    m.algebra = ext;
    m.space = GradedSpace{std::size_t(1) << (r - 1), std::size_t(1) << (r - 1)};
    if (r == 0) m.space = GradedSpace{1, 0};
    m.actions.assign(ext.gens(), Matrix(masks.size(), masks.size()));
    for (int i = 0; i < r; ++i)
        for (std::size_t c = 0; c < masks.size(); ++c) {
            const std::uint32_t s = masks[c];
            if (s & (1u << i)) continue;
            m.actions[i].at(pos[s | (1u << i)], c) = subsets::insert_sign(s, i);
        }
    return m;
}

Supermodule parity_shift(const Supermodule& m) {
    Supermodule out;
    out.algebra = m.algebra;
    out.space = GradedSpace{m.space.dim_odd, m.space.dim_even};
    // New order: old odd block first, then old even block, orders preserved.
    std::vector<std::size_t> perm(m.dim());
    for (std::size_t i = 0; i < m.space.dim_even; ++i) perm[i] = m.space.dim_odd + i;
    for (std::size_t i = 0; i < m.space.dim_odd; ++i) perm[m.space.dim_even + i] = i;
    out.actions.reserve(m.actions.size());
    for (const auto& a : m.actions) out.actions.push_back(apply_perm(a, perm));
    return out;
}

std::vector<std::size_t> direct_sum_perm(const GradedSpace& a, const GradedSpace& b) {
    std::vector<int> parities = space_parities(a);
    const auto pb = space_parities(b);
    parities.insert(parities.end(), pb.begin(), pb.end());
    return even_first_perm(parities);
}

Supermodule direct_sum(const Supermodule& a, const Supermodule& b) {
    if (!a.algebra.same_presentation(b.algebra) || a.algebra.family != b.algebra.family)
        throw std::invalid_argument("direct_sum: algebra mismatch");
    const auto perm = direct_sum_perm(a.space, b.space);
    Supermodule out;
    out.algebra = a.algebra;
    out.space = GradedSpace{a.space.dim_even + b.space.dim_even,
                            a.space.dim_odd + b.space.dim_odd};
    out.actions.reserve(a.actions.size());
    for (std::size_t g = 0; g < a.actions.size(); ++g) {
        Matrix block(a.dim() + b.dim(), a.dim() + b.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (sgn(a.actions[g].at(i, j)) != 0) block.at(i, j) = a.actions[g].at(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                if (sgn(b.actions[g].at(i, j)) != 0)
                    block.at(a.dim() + i, a.dim() + j) = b.actions[g].at(i, j);
        out.actions.push_back(apply_perm(block, perm));
    }
    return out;
}

std::vector<std::size_t> tensor_perm(const GradedSpace& a, const GradedSpace& b) {
    std::vector<int> parities(a.total() * b.total());
    for (std::size_t i = 0; i < a.total(); ++i)
        for (std::size_t j = 0; j < b.total(); ++j)
            parities[i * b.total() + j] = (a.parity(i) + b.parity(j)) % 2;
    return even_first_perm(parities);
}

Supermodule tensor(const Supermodule& a, const Supermodule& b) {
    if (!a.algebra.same_presentation(b.algebra) || a.algebra.family != b.algebra.family)
        throw std::invalid_argument("tensor: algebra mismatch");
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    const auto perm = tensor_perm(a.space, b.space);
    Supermodule out;
    out.algebra = a.algebra;
    out.space.dim_even = a.space.dim_even * b.space.dim_even + a.space.dim_odd * b.space.dim_odd;
    out.space.dim_odd = d - out.space.dim_even;
    out.actions.reserve(a.actions.size());
    for (std::size_t g = 0; g < a.actions.size(); ++g) {
        const int pg = a.algebra.parities[g];
        Matrix t(d, d);
        // (A x I) part.
        for (std::size_t i2 = 0; i2 < da; ++i2)
            for (std::size_t i = 0; i < da; ++i) {
                const Rational& v = a.actions[g].at(i2, i);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < db; ++j)
                    t.at(perm[i2 * db + j], perm[i * db + j]) += v;
            }
        // Sign-twisted (I x B) part.
        for (std::size_t i = 0; i < da; ++i) {
            const bool neg = (pg * a.space.parity(i)) % 2 != 0;
            for (std::size_t j2 = 0; j2 < db; ++j2)
                for (std::size_t j = 0; j < db; ++j) {
                    const Rational& v = b.actions[g].at(j2, j);
                    if (is_zero(v)) continue;
                    if (neg)
                        t.at(perm[i * db + j2], perm[i * db + j]) -= v;
                    else
                        t.at(perm[i * db + j2], perm[i * db + j]) += v;
                }
        }
        out.actions.push_back(std::move(t));
    }
    return out;
}

Supermodule outer_tensor(const Supermodule& a, const Supermodule& b) {
    if (a.algebra.family != b.algebra.family ||
        (a.algebra.family != Family::E && a.algebra.family != Family::F))
        throw std::invalid_argument("outer_tensor: both factors must be E family or F family");
    const SuperAlgebra alg = a.algebra.family == Family::E
                                 ? detecting_e(a.algebra.rank + b.algebra.rank)
                                 : detecting_f(a.algebra.rank + b.algebra.rank);
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    const auto perm = tensor_perm(a.space, b.space);
    Supermodule out;
    out.algebra = alg;
    out.space.dim_even = a.space.dim_even * b.space.dim_even + a.space.dim_odd * b.space.dim_odd;
    out.space.dim_odd = d - out.space.dim_even;
    out.actions.assign(alg.gens(), Matrix(d, d));

    // Map each generator of the product algebra to (factor, local index).
    // Generator naming in detecting_e/f is positional, so factor-a generators
    // are the first-rank ones of each kind.
    auto local = [&](std::size_t g) -> std::pair<int, std::size_t> {
        if (alg.family == Family::E) {
            const int m1 = a.algebra.rank, mm = alg.rank;
            if (g < std::size_t(mm)) // torus
                return g < std::size_t(m1) ? std::make_pair(0, g)
                                           : std::make_pair(1, g - m1);
            const std::size_t o = g - mm;
            return o < std::size_t(m1) ? std::make_pair(0, std::size_t(m1) + o)
                                       : std::make_pair(1, std::size_t(b.algebra.rank) + (o - m1));
        }
        const int n1 = a.algebra.rank, nn = alg.rank;
        if (g < std::size_t(nn))
            return g < std::size_t(n1) ? std::make_pair(0, g) : std::make_pair(1, g - n1);
        const std::size_t o = g - nn; // pairs (x_i, y_i)
        return o < 2 * std::size_t(n1)
                   ? std::make_pair(0, std::size_t(n1) + o)
                   : std::make_pair(1, std::size_t(b.algebra.rank) + (o - 2 * n1));
    };

    for (std::size_t g = 0; g < alg.gens(); ++g) {
        const auto [factor, lg] = local(g);
        const int pg = alg.parities[g];
        Matrix& t = out.actions[g];
        if (factor == 0) {
            const Matrix& A = a.actions[lg];
            for (std::size_t i2 = 0; i2 < da; ++i2)
                for (std::size_t i = 0; i < da; ++i) {
                    const Rational& v = A.at(i2, i);
                    if (is_zero(v)) continue;
                    for (std::size_t j = 0; j < db; ++j)
                        t.at(perm[i2 * db + j], perm[i * db + j]) += v;
                }
        } else {
            const Matrix& B = b.actions[lg];
            for (std::size_t i = 0; i < da; ++i) {
                const bool neg = (pg * a.space.parity(i)) % 2 != 0;
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    for (std::size_t j = 0; j < db; ++j) {
                        const Rational& v = B.at(j2, j);
                        if (is_zero(v)) continue;
                        if (neg)
                            t.at(perm[i * db + j2], perm[i * db + j]) -= v;
                        else
                            t.at(perm[i * db + j2], perm[i * db + j]) += v;
                    }
            }
        }
    }
    return out;
}

Supermodule dual(const Supermodule& m) {
    Supermodule out;
    out.algebra = m.algebra;
    out.space = m.space;
    out.actions.reserve(m.actions.size());
    for (std::size_t g = 0; g < m.actions.size(); ++g) {
        const int pg = m.algebra.parities[g];
        Matrix d(m.dim(), m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) {
                const Rational& v = m.actions[g].at(j, i);
                if (is_zero(v)) continue;
                // (x.f_j) = sum_i D_ij f_i with D_ij = -(-1)^{|x| p_j} A_ji.
                d.at(i, j) = (pg * m.space.parity(j)) % 2 ? v : -v;
            }
        out.actions.push_back(std::move(d));
    }
    return out;
}

Supermodule hom_module(const Supermodule& m, const Supermodule& n) {
    // Identical matrices to the elementary-map realization: the pair basis
    // (i, j) of tensor(n, dual(m)) is the map e_j |-> e_i.
    return tensor(n, dual(m));
}

Supermodule restrict_module(const Supermodule& m,
                            const std::vector<std::vector<Rational>>& vs) {
    if (m.algebra.family != Family::Exterior)
        throw std::invalid_argument("restrict_module: exterior algebra required");
    const std::size_t r = m.algebra.gens();
    Matrix coeffs(r, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
        if (vs[j].size() != r)
            throw std::invalid_argument("restrict_module: vector length mismatch");
        for (std::size_t i = 0; i < r; ++i) coeffs.at(i, j) = vs[j][i];
    }
    if (rank_of(coeffs) != vs.size())
        throw std::invalid_argument("restrict_module: dependent vectors");
    Supermodule out;
    out.algebra = exterior(int(vs.size()));
    out.space = m.space;
    for (std::size_t j = 0; j < vs.size(); ++j) {
        Matrix b(m.dim(), m.dim());
        for (std::size_t i = 0; i < r; ++i)
            if (!is_zero(vs[j][i])) b = b + m.actions[i].scaled(vs[j][i]);
        out.actions.push_back(std::move(b));
    }
    return out;
}

bool commutes_with_actions(const Supermodule& src, const Supermodule& dst, const Matrix& f) {
    if (!src.algebra.same_presentation(dst.algebra)) return false;
    for (std::size_t g = 0; g < src.actions.size(); ++g)
        if (f * src.actions[g] != dst.actions[g] * f) return false;
    return true;
}

bool is_module_map(const ModuleMap& f) {
    return f.map.degree == 0 && f.map.source == f.source.space &&
           f.map.target == f.target.space && block_pure(f.map) &&
           commutes_with_actions(f.source, f.target, f.map.matrix);
}

ModuleMap evaluation_map(const Supermodule& m) {
    const Supermodule src = tensor(m, dual(m));
    const Supermodule tgt = trivial_module(m.algebra, 0);
    const auto perm = tensor_perm(m.space, m.space);
    Matrix ev(1, src.dim());
    // (-1)^{|v|} f(v): the sign that makes evaluation commute with odd
    // generators under the dual convention (x.f)(v) = -(-1)^{|x||f|} f(x.v).
    for (std::size_t i = 0; i < m.dim(); ++i)
        ev.at(0, perm[i * m.dim() + i]) = m.space.parity(i) ? -1 : 1;
    return ModuleMap{src, tgt, GradedMap{src.space, tgt.space, std::move(ev), 0}};
}

Matrix parity_sign_matrix(const GradedSpace& s) {
    Matrix out(s.total(), s.total());
    for (std::size_t i = 0; i < s.total(); ++i) out.at(i, i) = s.parity(i) ? -1 : 1;
    return out;
}

} // namespace supertriv
