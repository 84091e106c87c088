#include "toral/compare.hpp"

#include "toral/classify.hpp"

#include <algorithm>
#include <sstream>

namespace toral {

std::string iso_verdict_str(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Isomorphic: return "Isomorphic";
        case IsoVerdict::NotIsomorphic: return "NotIsomorphic";
        case IsoVerdict::Undecided: return "Undecided";
    }
    return "?";
}

namespace {

Int gcd_of(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

}  // namespace

IsoVerdict marked_group_iso(const MarkedGroup& G, const MarkedGroup& H,
                            long max_component_size) {
    G.validate();
    H.validate();

    if (!(G.group == H.group)) return IsoVerdict::NotIsomorphic;
    if (G.element_order() != H.element_order()) return IsoVerdict::NotIsomorphic;

    // Divisibility screen: g in kG must match h in kH for k up to the
    // exponent of the torsion part (capped; the exact search below decides).
    Int exponent = G.group.exponent();
    Int screen_cap = exponent < 1000 ? exponent : Int(1000);
    for (Int k = 2; k <= screen_cap; ++k)
        if (G.element_in_k_multiples(k) != H.element_in_k_multiples(k))
            return IsoVerdict::NotIsomorphic;

    // Free-part normal form: any automorphism maps the free coordinates of
    // the marked element to a vector with the same content gcd.
    Int eg = gcd_of(G.free_coords);
    Int eh = gcd_of(H.free_coords);
    if (eg != eh) return IsoVerdict::NotIsomorphic;

    if (G.group.torsion.empty()) return IsoVerdict::Isomorphic;
    // Zero torsion markings match via the identity on the torsion part.
    if (is_zero(G.torsion_coords) && is_zero(H.torsion_coords))
        return IsoVerdict::Isomorphic;
    if (is_zero(G.torsion_coords) != is_zero(H.torsion_coords) && eg == 0)
        return IsoVerdict::NotIsomorphic;

    try {
        TorsionAutOrbit orbit(G.group.torsion, G.torsion_coords, max_component_size);
        if (eg == 0) {
            // Marked elements lie in (or project trivially to) the torsion
            // subgroup: the orbit decides exactly.
            return orbit.contains(H.torsion_coords) ? IsoVerdict::Isomorphic
                                                    : IsoVerdict::NotIsomorphic;
        }
        // Free part normalized to e*(basis vector); the homomorphism block
        // from the free part can shift the torsion component by anything in
        // e*T, so compare orbits modulo e*T.
        return orbit.contains_mod(H.torsion_coords, eg) ? IsoVerdict::Isomorphic
                                                        : IsoVerdict::NotIsomorphic;
    } catch (const out_of_regime_error&) {
        return IsoVerdict::Undecided;
    }
}

ComparisonReport same_algebra(const IntMatrix& A, const TranslationVector& alpha,
                              const IntMatrix& B, const TranslationVector& beta) {
    ComparisonReport rep;
    if (A.rows() != B.rows())
        throw out_of_regime_error("comparison requires equal dimensions");
    const long n = A.rows();
    if (n < 1 || n > 3)
        throw out_of_regime_error("comparison supports n in {1,2,3}");

    auto check_regime = [&](const IntMatrix& M, const TranslationVector& t,
                            const char* which) {
        Int det = determinant(M);
        if (det == 0) {
            std::ostringstream os;
            os << which << " input is not a local homeomorphism (det = 0)";
            throw out_of_regime_error(os.str());
        }
        if (det == 1 || det == -1) {
            std::ostringstream os;
            os << which
               << " input is injective (|det| = 1): classification invariant "
                  "comparison only covers the non-injective regime";
            throw out_of_regime_error(os.str());
        }
        TransitivityVerdict v = classify_transitivity(M, t);
        if (!v.strongly_transitive) {
            std::ostringstream os;
            os << which << " input is not strongly transitive ("
               << case_tag_str(v.case_tag) << ")";
            throw out_of_regime_error(os.str());
        }
    };
    check_regime(A, alpha, "first");
    check_regime(B, beta, "second");

    if (A == B) {
        rep.verdict = IsoVerdict::Isomorphic;
        rep.reasons.push_back(
            "identical linear parts: the algebra does not depend on the "
            "translation in this regime");
        return rep;
    }

    KTheoryReport ka = k_groups_endomorphism(A);
    KTheoryReport kb = k_groups_endomorphism(B);
    rep.reasons.push_back("first:  K0 = " + ka.K0.str() + ", unit " +
                          ka.unit_description + ", K1 = " + ka.K1.str());
    rep.reasons.push_back("second: K0 = " + kb.K0.str() + ", unit " +
                          kb.unit_description + ", K1 = " + kb.K1.str());

    if (!(ka.K1 == kb.K1)) {
        rep.verdict = IsoVerdict::NotIsomorphic;
        rep.reasons.push_back("K1 groups differ");
        return rep;
    }
    IsoVerdict k0 = marked_group_iso(ka.k0_marked, kb.k0_marked);
    rep.verdict = k0;
    switch (k0) {
        case IsoVerdict::Isomorphic:
            rep.reasons.push_back(
                "K1 groups agree and unit-marked K0 groups are isomorphic: "
                "classification invariant matches");
            break;
        case IsoVerdict::NotIsomorphic:
            rep.reasons.push_back("no K0 isomorphism carries one unit class to the other");
            break;
        case IsoVerdict::Undecided:
            rep.reasons.push_back(
                "marked K0 comparison exceeded the torsion search bound");
            break;
    }
    return rep;
}

}  // namespace toral
