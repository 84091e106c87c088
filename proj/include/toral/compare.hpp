#pragma once

#include "toral/groups.hpp"
#include "toral/ktheory.hpp"
#include "toral/translation.hpp"
#include "toral/types.hpp"

#include <string>
#include <vector>

namespace toral {

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };

std::string iso_verdict_str(IsoVerdict v);

/// Is there a group isomorphism carrying the marked element of G to the
/// marked element of H?  Screens (group equality, element order,
/// divisibility) followed by an exact automorphism-orbit search; torsion
/// beyond the orbit bound yields Undecided.
IsoVerdict marked_group_iso(const MarkedGroup& G, const MarkedGroup& H,
                            long max_component_size = 10000);

struct ComparisonReport {
    IsoVerdict verdict = IsoVerdict::Undecided;
    std::vector<std::string> reasons;
};

/// Isomorphism of the algebras of two strongly transitive, non-injective
/// affine maps, decided on (K0, [1], K1).  Out-of-regime inputs (singular,
/// injective, or not strongly transitive) throw out_of_regime_error naming
/// the failed hypothesis.
ComparisonReport same_algebra(const IntMatrix& A, const TranslationVector& alpha,
                              const IntMatrix& B, const TranslationVector& beta);

}  // namespace toral
