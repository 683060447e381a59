#include "supertriv/graded.hpp"

#include <stdexcept>

namespace supertriv {

bool block_pure(const GradedMap& f) {
    if (f.matrix.rows() != f.target.total() || f.matrix.cols() != f.source.total())
        return false;
    for (std::size_t i = 0; i < f.matrix.rows(); ++i)
        for (std::size_t j = 0; j < f.matrix.cols(); ++j) {
            if (is_zero(f.matrix.at(i, j))) continue;
            const int d = (f.target.parity(i) + f.source.parity(j)) % 2;
            if (d != (f.degree % 2 + 2) % 2) return false;
        }
    return true;
}

GradedMap graded_compose(const GradedMap& f, const GradedMap& g) {
    if (g.target != f.source) throw std::invalid_argument("graded_compose: spaces mismatch");
    return GradedMap{g.source, f.target, f.matrix * g.matrix, (f.degree + g.degree) % 2};
}

std::vector<std::size_t> even_first_perm(const std::vector<int>& parities) {
    std::vector<std::size_t> out(parities.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < parities.size(); ++i)
        if (parities[i] % 2 == 0) out[i] = next++;
    for (std::size_t i = 0; i < parities.size(); ++i)
        if (parities[i] % 2 != 0) out[i] = next++;
    return out;
}

Matrix apply_perm(const Matrix& a, const std::vector<std::size_t>& new_of_old) {
    if (a.rows() != a.cols() || a.rows() != new_of_old.size())
        throw std::invalid_argument("apply_perm: size mismatch");
    Matrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a.at(i, j)) != 0) b.at(new_of_old[i], new_of_old[j]) = a.at(i, j);
        }
    return b;
}

Matrix apply_row_perm(const Matrix& a, const std::vector<std::size_t>& new_of_old) {
    if (a.rows() != new_of_old.size())
        throw std::invalid_argument("apply_row_perm: size mismatch");
    Matrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            b.at(new_of_old[i], j) = a.at(i, j);
    return b;
}

} // namespace supertriv
