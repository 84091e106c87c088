#include "toral/classify.hpp"

#include <stdexcept>

namespace toral {

std::string case_tag_str(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1_Exact: return "Case1_Exact";
        case CaseTag::Case2_ConditionallyTransitive:
            return "Case2_ConditionallyTransitive";
        case CaseTag::Case3_Never: return "Case3_Never";
    }
    return "?";
}

bool is_local_homeomorphism(const IntMatrix& A) { return determinant(A) != 0; }

bool is_exact_endomorphism(const IntMatrix& A) {
    if (determinant(A) == 0)
        throw out_of_regime_error("phi_A is not a local homeomorphism (det A = 0)");
    return !find_unimodular_divisor(char_poly(A)).present();
}

namespace {

// Least common multiple of the denominators appearing in v.
Int denominator_lcm(const std::vector<Rational>& v) {
    Int l = 1;
    for (const auto& q : v) {
        Int d = boost::multiprecision::denominator(q);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    return l;
}

}  // namespace

LambdaInS lambda_in_S(const IntMatrix& A, const TranslationVector& alpha) {
    const long n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("square matrix required");
    if (alpha.n != n) throw std::invalid_argument("translation dimension mismatch");
    alpha.validate();

    std::vector<IntVector> kernel = kernel_lattice(A.transpose() - IntMatrix::identity(n));
    const long r = static_cast<long>(kernel.size());
    if (r == 0) return {true, std::nullopt};

    // Coordinates c in Z^r parameterize m = sum c_i * kernel[i].  m is an
    // obstruction iff it annihilates every irrational coefficient vector, i.e.
    // c lies in the kernel of the (terms x r) matrix of pairings <kernel[i], q_j>
    // (denominators cleared row by row).
    const auto& terms = alpha.irrational_terms;
    std::optional<IntVector> c_witness;
    if (terms.empty()) {
        c_witness = IntVector(static_cast<std::size_t>(r), Int(0));
        (*c_witness)[0] = 1;
    } else {
        IntMatrix pairings(static_cast<long>(terms.size()), r);
        for (long j = 0; j < static_cast<long>(terms.size()); ++j) {
            const auto& q = terms[static_cast<std::size_t>(j)].coefficients;
            Int scale = denominator_lcm(q);
            for (long i = 0; i < r; ++i) {
                Rational entry = 0;
                const IntVector& b = kernel[static_cast<std::size_t>(i)];
                for (long t = 0; t < n; ++t)
                    entry += q[static_cast<std::size_t>(t)] *
                             Rational(b[static_cast<std::size_t>(t)]);
                entry *= Rational(scale);
                pairings(j, i) = boost::multiprecision::numerator(entry);
            }
        }
        std::vector<IntVector> null = kernel_lattice(pairings);
        if (!null.empty()) c_witness = null.front();
    }

    if (!c_witness) return {true, std::nullopt};

    IntVector m(static_cast<std::size_t>(n), Int(0));
    for (long i = 0; i < r; ++i) {
        const Int& c = (*c_witness)[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const IntVector& b = kernel[static_cast<std::size_t>(i)];
        for (long t = 0; t < n; ++t) m[static_cast<std::size_t>(t)] += c * b[static_cast<std::size_t>(t)];
    }
    return {false, m};
}

TransitivityVerdict classify_transitivity(const IntMatrix& A,
                                          const TranslationVector& alpha) {
    Int det = determinant(A);
    if (det == 0)
        throw out_of_regime_error("phi_A is not a local homeomorphism (det A = 0)");

    TransitivityVerdict v;
    v.local_homeo = true;
    v.homeomorphism = (det == 1 || det == -1);

    IntPolynomial f = char_poly(A);
    MultiplicitySplit split = split_at_one(f);
    v.multiplicity_k = split.k;

    UnimodularWitness wg;  // unimodular divisor of g, if any
    if (split.g.degree() >= 1) wg = find_unimodular_divisor(split.g);

    if (wg.present()) {
        v.case_tag = CaseTag::Case3_Never;
        v.witness = wg;
        v.strongly_transitive = false;
        v.exact = false;
    } else if (split.k >= 1) {
        v.case_tag = CaseTag::Case2_ConditionallyTransitive;
        v.witness.divisor = IntPolynomial({-1, 1});  // x - 1 divides f_A
        v.exact = false;
        LambdaInS s = lambda_in_S(A, alpha);
        v.strongly_transitive = s.in_S;
        if (!s.in_S) v.dual_obstruction = s.obstruction;
    } else {
        v.case_tag = CaseTag::Case1_Exact;
        v.strongly_transitive = true;
        v.exact = true;
    }
    return v;
}

}  // namespace toral
