#pragma once

#include "toral/classify.hpp"
#include "toral/groups.hpp"
#include "toral/linalg.hpp"
#include "toral/translation.hpp"
#include "toral/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toral {

/// Integer-matrix shadows of the two K-theory endomorphisms for n in {2,3};
/// normalized with W = identity.
struct MuPair {
    long n = 0;
    IntMatrix mu0;
    IntMatrix mu1;
    std::string conjugation_note;
};

MuPair compute_mu(const IntMatrix& A);

/// Ordered K0 data for the minimal n = 3, det = 1 regime: trace pairing
/// through the linear form eta(x) = sum_i x_i alpha_i on ker(1 - (A^t)^{-1}).
struct OrderedK0Report {
    FgAbelianGroup K0;
    FgAbelianGroup K1;
    std::vector<IntVector> kernel_basis;    // basis of ker(A^t - 1)
    std::vector<SymbolicReal> eta_values;   // eta on that basis
    long trace_range_rank = 0;
    std::string positive_cone_description;
};

struct KTheoryReport {
    long n = 0;
    Int det;
    bool k_data_valid = false;  // false: out-of-regime, groups not claimed
    FgAbelianGroup K0;
    FgAbelianGroup K1;
    MarkedGroup k0_marked;            // K0 with the class of the unit
    std::string k0_presentation;      // summand order of the case table
    std::string unit_description;
    bool simple = false;
    bool purely_infinite = false;
    std::string case_label;
    std::string regime_note;
    std::optional<OrderedK0Report> trace_order;
};

/// K-groups with unit class for the endomorphism algebra of phi_A,
/// n in {1,2,3}, det A != 0.  Case-table result, cross-checked internally
/// against the six-term assembly; a mismatch throws std::logic_error.
KTheoryReport k_groups_endomorphism(const IntMatrix& A);

/// Six-term assembly K0 = coker(1 - D mu0^{-1}) (+) ker(1 - D mu1^{-1}),
/// K1 = coker(1 - D mu1^{-1}) (+) ker(1 - D mu0^{-1}), with D = |det A| and
/// D mu^{-1} kept integral via adjugates.  The K0 marking is the class of e1.
struct GenericKGroups {
    MarkedGroup K0;
    FgAbelianGroup K1;
};
GenericKGroups k_groups_generic(const IntMatrix& A);

/// K-data for the affine algebra of T = lambda phi_A, with the section-6
/// case label and simplicity/pure-infiniteness flags; outside the simple
/// regime the report carries the label and note but no group claims.
KTheoryReport k_groups_affine(const IntMatrix& A, const TranslationVector& alpha);

/// Ordered K0 for the minimal n = 3 homeomorphism case; preconditions
/// (n = 3, det = 1, char poly (x-1)^3, minimality) are checked and violations
/// throw out_of_regime_error naming the failed hypothesis.
OrderedK0Report trace_on_k0_minimal(const IntMatrix& A, const TranslationVector& alpha);

/// Universal generators-and-relations presentation of the algebra.
struct AlgebraPresentation {
    long n = 0;
    Int det;
    IntMatrix dual_action;                 // A^t on Z^n
    std::vector<IntVector> coset_reps;     // representatives of Z^n / A^t Z^n
    std::vector<SymbolicReal> characters;  // <rep, alpha> per representative
    std::vector<std::string> relations;
};
AlgebraPresentation presentation(const IntMatrix& A, const TranslationVector& alpha);

}  // namespace toral
