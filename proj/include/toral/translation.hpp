#pragma once

#include "toral/types.hpp"

#include <map>

namespace toral {

/// A real number of the form q + sum_j c_j * theta_j with q, c_j rational and
/// the theta_j formal symbols declared Q-linearly independent together with 1.
struct SymbolicReal {
    Rational rational;
    std::map<std::string, Rational> terms;

    SymbolicReal() = default;
    explicit SymbolicReal(Rational q) : rational(std::move(q)) {}

    bool is_rational() const;
    SymbolicReal& operator+=(const SymbolicReal& o);
    SymbolicReal operator*(const Rational& s) const;
    bool operator==(const SymbolicReal& o) const = default;
    std::string str() const;  // "1/2 + 3*theta1"
};

/// Exponent vector alpha of a torus translation lambda = e^{2 pi i alpha}:
/// exact rational part plus rational combinations of declared-independent
/// irrational symbols.
struct TranslationVector {
    struct IrrationalTerm {
        std::string symbol;
        std::vector<Rational> coefficients;  // length n
    };

    long n = 0;
    std::vector<Rational> rational_part;  // length n
    std::vector<IrrationalTerm> irrational_terms;

    static TranslationVector zero(long n);

    /// Component alpha_i as a symbolic real.
    SymbolicReal component(long i) const;

    /// <m, alpha> for an integer character m.
    SymbolicReal pair(const IntVector& m) const;

    bool is_rational() const { return irrational_terms.empty(); }
    void validate() const;  // dimension consistency
    std::string str() const;
};

}  // namespace toral
