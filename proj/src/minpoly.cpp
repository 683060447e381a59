#include "supertriv/minpoly.hpp"

#include "supertriv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace supertriv {

namespace {

void poly_trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Remainder of a by b (b nonzero).
Poly poly_mod(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

void poly_make_monic(Poly& p) {
    poly_trim(p);
    if (p.empty()) return;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
}

Matrix vec_of(const Matrix& a) {
    Matrix v(a.rows() * a.cols(), 1);
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) v.at(i, 0) = a.data()[i];
    return v;
}

// All positive divisors of |n| (n nonzero), from trial division up to 1e6
// with any remaining cofactor treated as a single prime. Capped to avoid
// pathological blowups; eigenvalues at desk scale are small.
std::vector<mpz_class> divisors_of(mpz_class n, std::size_t cap = 100000) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class d = 2; d * d <= n && d < 1000000; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            fac.emplace_back(d, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap) throw std::runtime_error("divisor enumeration overflow");
            }
        }
    }
    return divs;
}

} // namespace

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
    poly_trim(d);
    return d;
}

Poly poly_monic_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    poly_make_monic(a);
    return a;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Poly min_poly(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("min_poly: not square");
    const std::size_t n = a.rows();
    if (n == 0) return Poly{Rational(1)};
    Matrix power = Matrix::identity(n);
    Matrix krylov = vec_of(power); // columns: vec(I), vec(A), ...
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * a;
        const Matrix vk = vec_of(power);
        if (auto c = solve(krylov, vk)) {
            Poly m(k + 1);
            m[k] = 1;
            for (std::size_t i = 0; i < k; ++i) m[i] = -c->at(i, 0);
            return m;
        }
        krylov = Matrix::hcat(krylov, vk);
    }
    throw std::runtime_error("min_poly: no dependency found (unreachable)");
}

EigenInfo rational_eigen(const Matrix& a) {
    EigenInfo out;
    if (a.rows() == 0) {
        out.diagonalizable_rational = true;
        return out;
    }
    Poly m = min_poly(a);
    // Squarefree test.
    const Poly g = poly_monic_gcd(m, poly_derivative(m));
    const bool squarefree = g.size() <= 1;

    // Rational roots: clear denominators, use the rational root theorem.
    mpz_class lcm = 1;
    for (const auto& c : m) lcm = lcm * c.get_den() / gcd(lcm, mpz_class(c.get_den()));
    std::vector<mpz_class> ic(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        ic[i] = mpz_class(m[i].get_num() * (lcm / m[i].get_den()));

    Poly rem = m;
    std::vector<Rational> roots;
    // Root zero first.
    while (rem.size() > 1 && is_zero(rem[0])) {
        roots.push_back(Rational(0));
        rem.erase(rem.begin());
    }
    if (rem.size() > 1) {
        std::size_t lo = 0;
        while (is_zero(Rational(ic[lo]))) ++lo; // matches the zero roots stripped above
        std::vector<mpz_class> ps, qs;
        try {
            ps = divisors_of(ic[lo]);
            qs = divisors_of(ic.back());
        } catch (const std::runtime_error&) {
            out.diagonalizable_rational = false;
            out.eigenvalues = roots;
            return out;
        }
        std::vector<Rational> candidates;
        for (const auto& p : ps)
            for (const auto& q : qs) {
                Rational r(p, q);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            while (rem.size() > 1 && is_zero(poly_eval(rem, r))) {
                roots.push_back(r);
                // Synthetic division by (x - r).
                Poly q(rem.size() - 1);
                Rational carry = 0;
                for (std::size_t i = rem.size(); i-- > 1;) {
                    carry = rem[i] + carry * r;
                    q[i - 1] = carry;
                }
                rem = std::move(q);
            }
        }
    }
    const bool split = rem.size() <= 1;
    std::sort(roots.begin(), roots.end());
    const bool distinct = std::adjacent_find(roots.begin(), roots.end()) == roots.end();
    out.diagonalizable_rational = squarefree && split && distinct;
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    out.eigenvalues = roots;
    return out;
}

} // namespace supertriv
