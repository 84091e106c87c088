#include "toral/polynomial.hpp"

#include <sstream>

namespace toral {

namespace {
const Int kZero = 0;
}

IntPolynomial IntPolynomial::monomial(long degree, Int c) {
    std::vector<Int> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(static_cast<long>(i)) + o.coeff(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(static_cast<long>(i)) - o.coeff(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    std::vector<Int> r(coeffs_);
    for (auto& c : r) c *= s;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("poly_divide_exact: zero divisor");
    if (f.is_zero()) return IntPolynomial{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Int> rem(f.coefficients());
    std::vector<Int> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
    const Int& lead = g.leading();
    for (long k = f.degree() - g.degree(); k >= 0; --k) {
        Int top = rem[static_cast<std::size_t>(k + g.degree())];
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q != 0)
            for (long j = 0; j <= g.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= q * g.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

}  // namespace toral
