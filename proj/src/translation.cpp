#include "toral/translation.hpp"

#include <sstream>
#include <stdexcept>

namespace toral {

bool SymbolicReal::is_rational() const { return terms.empty(); }

SymbolicReal& SymbolicReal::operator+=(const SymbolicReal& o) {
    rational += o.rational;
    for (const auto& [sym, c] : o.terms) {
        Rational& acc = terms[sym];
        acc += c;
        if (acc == 0) terms.erase(sym);
    }
    return *this;
}

SymbolicReal SymbolicReal::operator*(const Rational& s) const {
    SymbolicReal out;
    if (s == 0) return out;
    out.rational = rational * s;
    for (const auto& [sym, c] : terms) out.terms[sym] = c * s;
    return out;
}

std::string SymbolicReal::str() const {
    std::ostringstream os;
    bool first = true;
    if (rational != 0 || terms.empty()) {
        os << rational;
        first = false;
    }
    for (const auto& [sym, c] : terms) {
        if (!first) os << " + ";
        if (c != 1) os << c << "*";
        os << sym;
        first = false;
    }
    return os.str();
}

TranslationVector TranslationVector::zero(long n) {
    TranslationVector a;
    a.n = n;
    a.rational_part.assign(static_cast<std::size_t>(n), Rational(0));
    return a;
}

SymbolicReal TranslationVector::component(long i) const {
    if (i < 0 || i >= n) throw std::out_of_range("translation component index");
    SymbolicReal v(rational_part[static_cast<std::size_t>(i)]);
    for (const auto& t : irrational_terms) {
        const Rational& c = t.coefficients[static_cast<std::size_t>(i)];
        if (c != 0) v.terms[t.symbol] += c;
    }
    return v;
}

SymbolicReal TranslationVector::pair(const IntVector& m) const {
    if (static_cast<long>(m.size()) != n)
        throw std::invalid_argument("character dimension mismatch");
    SymbolicReal v;
    for (long i = 0; i < n; ++i) {
        const Int& mi = m[static_cast<std::size_t>(i)];
        if (mi == 0) continue;
        v += component(i) * Rational(mi);
    }
    return v;
}

void TranslationVector::validate() const {
    if (n < 1) throw std::invalid_argument("translation dimension must be positive");
    if (static_cast<long>(rational_part.size()) != n)
        throw std::invalid_argument("rational part dimension mismatch");
    for (const auto& t : irrational_terms) {
        if (t.symbol.empty())
            throw std::invalid_argument("irrational term needs a symbol name");
        if (static_cast<long>(t.coefficients.size()) != n)
            throw std::invalid_argument("irrational term dimension mismatch");
    }
}

std::string TranslationVector::str() const {
    std::ostringstream os;
    os << "(";
    for (long i = 0; i < n; ++i) {
        if (i) os << ", ";
        os << component(i).str();
    }
    os << ")";
    return os.str();
}

}  // namespace toral
