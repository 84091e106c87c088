#pragma once

#include "toral/polynomial.hpp"
#include "toral/types.hpp"

namespace toral {

/// U*A*V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r > 0
/// followed by zeros.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::vector<Int> invariant_factors;  // the nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Exact determinant via fraction-free Bareiss elimination.
Int determinant(const IntMatrix& a);

/// Matrix of signed minors: entry (i,j) = (-1)^{i+j} * minor(i,j).
/// Satisfies A^t * cof(A) = det(A) * I. Requires n >= 2.
IntMatrix cofactor_matrix(const IntMatrix& a);

/// adj(A) = cof(A)^t, so A * adj(A) = det(A) * I.
IntMatrix adjugate(const IntMatrix& a);

/// Integer inverse of a unimodular matrix (|det| = 1).
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Monic characteristic polynomial det(xI - A), via Faddeev-LeVerrier
/// (all divisions exact over Z).
IntPolynomial char_poly(const IntMatrix& a);

/// Basis of the integer kernel { m in Z^cols : A*m = 0 }.
std::vector<IntVector> kernel_lattice(const IntMatrix& a);

/// Finitely generated abelian group in canonical invariant-factor form:
/// Z^free_rank + Z_{d_1} + ... + Z_{d_k} with 2 <= d_1 | d_2 | ... | d_k.
struct FgAbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbelianGroup& o) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    Int torsion_order() const;
    Int exponent() const { return torsion.empty() ? Int(1) : torsion.back(); }
    std::string str() const;  // e.g. "Z^2 + Z_3 + Z_6", "0"

    /// Canonicalize an arbitrary list of cyclic moduli (>= 1; 0 means Z).
    static FgAbelianGroup from_moduli(long free_rank, const std::vector<Int>& moduli);
    FgAbelianGroup direct_sum(const FgAbelianGroup& o) const;
    static FgAbelianGroup free(long rank) { return FgAbelianGroup{rank, {}}; }
    static FgAbelianGroup cyclic(const Int& d) { return from_moduli(0, {d}); }
};

/// Z^rows / image(A), in canonical form.
FgAbelianGroup cokernel_group(const IntMatrix& a);

long rank(const IntMatrix& a);

/// Exactly |det A| representatives of Z^n / A^t Z^n, pairwise incongruent.
/// Throws out_of_regime_error when det A = 0.
std::vector<IntVector> coset_representatives(const IntMatrix& a);

}  // namespace toral
