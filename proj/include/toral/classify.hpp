#pragma once

#include "toral/linalg.hpp"
#include "toral/polyfactor.hpp"
#include "toral/translation.hpp"
#include "toral/types.hpp"

#include <optional>

namespace toral {

enum class CaseTag {
    Case1_Exact,
    Case2_ConditionallyTransitive,
    Case3_Never,
};

std::string case_tag_str(CaseTag tag);

/// Full transitivity/exactness verdict for T(x) = lambda * phi_A(x).
struct TransitivityVerdict {
    bool local_homeo = false;
    bool homeomorphism = false;  // |det A| == 1
    CaseTag case_tag = CaseTag::Case3_Never;
    bool strongly_transitive = false;
    bool exact = false;
    long multiplicity_k = 0;          // multiplicity of eigenvalue 1 in f_A
    UnimodularWitness witness;        // unimodular divisor blocking case 1/2
    std::optional<IntVector> dual_obstruction;  // nonzero m with (A^t - I)m = 0
                                                // and <m, alpha> rational
};

/// True iff phi_A is a local homeomorphism of the torus, i.e. det A != 0.
bool is_local_homeomorphism(const IntMatrix& A);

/// True iff phi_A is exact: no unimodular polynomial divides char_poly(A).
/// Requires det A != 0.
bool is_exact_endomorphism(const IntMatrix& A);

struct LambdaInS {
    bool in_S = false;
    std::optional<IntVector> obstruction;  // present iff !in_S
};

/// Decides whether the closed subgroup generated by lambda and the range of
/// x^{-1} phi_A(x) is the whole torus, by duality: true iff no nonzero
/// m in ker(A^t - I) pairs rationally with alpha.
LambdaInS lambda_in_S(const IntMatrix& A, const TranslationVector& alpha);

/// Case analysis of strong transitivity / exactness for the affine map.
/// Throws out_of_regime_error when det A == 0.
TransitivityVerdict classify_transitivity(const IntMatrix& A,
                                          const TranslationVector& alpha);

}  // namespace toral
