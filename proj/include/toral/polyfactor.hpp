#pragma once

#include "toral/polynomial.hpp"

namespace toral {

/// f = (1-x)^k * sign * g, with g(1) != 0 and g normalized to a positive
/// leading coefficient.
struct MultiplicitySplit {
    long k = 0;
    IntPolynomial g;
    int sign = 1;
};

MultiplicitySplit split_at_one(const IntPolynomial& f);

/// A monic integer divisor of the queried polynomial with constant term +-1
/// and degree >= 1, when one exists.
struct UnimodularWitness {
    std::optional<IntPolynomial> divisor;
    bool present() const { return divisor.has_value(); }
};

/// Exhaustive unimodular-divisor search for deg f <= 4; throws
/// std::invalid_argument beyond that (the search would no longer be provably
/// complete). f must be monic up to sign.
UnimodularWitness find_unimodular_divisor(const IntPolynomial& f);

/// True for non-constant monic integer polynomials with constant term +-1.
bool is_unimodular(const IntPolynomial& p);

}  // namespace toral
