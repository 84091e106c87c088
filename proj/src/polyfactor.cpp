#include "toral/polyfactor.hpp"

#include <algorithm>

namespace toral {

namespace {

Int isqrt_ceil(const Int& n) {
    if (n <= 0) return 0;
    Int r = sqrt(n);
    if (r * r < n) ++r;
    return r;
}

// Mignotte-style height bound for monic divisors: 2^{deg f} * (||f||_2 + |lead f|).
Int divisor_coeff_bound(const IntPolynomial& f) {
    Int sq = 0;
    for (const auto& c : f.coefficients()) sq += c * c;
    Int bound = isqrt_ceil(sq) + abs(f.leading());
    return bound << static_cast<unsigned>(f.degree());
}

// All integer roots of f (f with nonzero constant term): divisors of f(0).
std::vector<Int> integer_roots(const IntPolynomial& f) {
    std::vector<Int> roots;
    Int c0 = abs(f.coeff(0));
    for (Int d = 1; d * d <= c0; ++d) {
        if (c0 % d != 0) continue;
        Int q = c0 / d;
        for (const Int& cand : {d, Int(-d), q, Int(-q)})
            if (f.eval(cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
    }
    return roots;
}

}  // namespace

MultiplicitySplit split_at_one(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("split_at_one: zero polynomial");
    const IntPolynomial x_minus_1{-1, 1};
    MultiplicitySplit s;
    IntPolynomial h = f;
    while (!h.is_zero() && h.degree() >= 1 && h.eval(1) == 0) {
        h = *poly_divide_exact(h, x_minus_1);
        ++s.k;
    }
    // f = (x-1)^k h = (1-x)^k (-1)^k h
    IntPolynomial g = (s.k % 2 == 0) ? h : -h;
    if (g.leading() < 0) {
        s.g = -g;
        s.sign = -1;
    } else {
        s.g = g;
        s.sign = 1;
    }
    return s;
}

bool is_unimodular(const IntPolynomial& p) {
    return p.degree() >= 1 && p.leading() == 1 && (p.coeff(0) == 1 || p.coeff(0) == -1);
}

UnimodularWitness find_unimodular_divisor(const IntPolynomial& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("find_unimodular_divisor: zero polynomial");
    IntPolynomial f = f_in.leading() < 0 ? -f_in : f_in;
    if (f.degree() > 4)
        throw std::invalid_argument(
            "find_unimodular_divisor: degree > 4 unsupported (search not exhaustive)");
    if (f.leading() != 1)
        throw std::invalid_argument("find_unimodular_divisor: polynomial not monic up to sign");

    // x^m factors carry constant term 0 and are coprime to any unimodular
    // divisor; strip them.
    {
        std::vector<Int> c = f.coefficients();
        std::size_t shift = 0;
        while (shift < c.size() && c[shift] == 0) ++shift;
        if (shift > 0) f = IntPolynomial(std::vector<Int>(c.begin() + static_cast<long>(shift), c.end()));
    }
    if (f.degree() < 1) return {};

    // Degree-1 divisors are x-1 and x+1.
    if (f.eval(1) == 0) return {IntPolynomial{-1, 1}};
    if (f.eval(-1) == 0) return {IntPolynomial{1, 1}};

    if (is_unimodular(f)) return {f};

    // A divisor of degree deg f - 1 has a monic linear cofactor x - r with r
    // an integer root of f.
    if (f.degree() >= 3) {
        for (const Int& r : integer_roots(f)) {
            IntPolynomial q = *poly_divide_exact(f, IntPolynomial{-r, 1});
            if (is_unimodular(q)) return {q};
        }
    }

    // Remaining case: quadratic divisors of a quartic, x^2 + bx +- 1 with
    // |b| within the Mignotte bound.
    if (f.degree() == 4) {
        Int bound = divisor_coeff_bound(f);
        for (Int b = -bound; b <= bound; ++b)
            for (int c : {1, -1}) {
                IntPolynomial cand{Int(c), b, Int(1)};
                if (poly_divide_exact(f, cand)) return {cand};
            }
    }
    return {};
}

}  // namespace toral
