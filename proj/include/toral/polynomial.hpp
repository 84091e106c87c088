#pragma once

#include "toral/types.hpp"

#include <optional>

namespace toral {

/// Integer polynomial, coefficients stored in ascending degree.
/// The zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { normalize(); }
    IntPolynomial(std::initializer_list<Int> ascending) : coeffs_(ascending) { normalize(); }

    static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }
    static IntPolynomial monomial(long degree, Int c = 1);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const Int& coeff(long k) const;  // 0 beyond the stored range
    const Int& leading() const;
    const std::vector<Int>& coefficients() const { return coeffs_; }

    Int eval(const Int& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    IntPolynomial operator-() const { return (*this) * Int(-1); }
    bool operator==(const IntPolynomial& o) const = default;

    std::string str() const;  // "x^2 - 3x + 1"

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Exact division over Z: returns q with f = g*q, or nullopt when no such
/// integer polynomial exists. Throws on zero divisor.
std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace toral
