#pragma once

#include "toral/linalg.hpp"
#include "toral/types.hpp"

#include <set>
#include <string>
#include <vector>

namespace toral {

/// A finitely generated abelian group in canonical form together with a
/// distinguished element, given by coordinates: free_coords over the Z
/// summands, torsion_coords reduced modulo the invariant factors.
struct MarkedGroup {
    FgAbelianGroup group;
    IntVector free_coords;
    IntVector torsion_coords;

    void validate() const;        // throws std::invalid_argument
    Int element_order() const;    // 0 = infinite order
    bool element_is_zero() const;
    /// Distinguished element divisible by k (i.e. lies in k*G)?
    bool element_in_k_multiples(const Int& k) const;
    std::string str() const;
};

/// Ordered direct sum of named summands (Z slots and Z_m slots) with a
/// distinguished element tracked through canonicalization.  Used to build
/// K-groups in a fixed presentation order while still producing canonical
/// invariant-factor output.
class MarkedAssembly {
public:
    /// modulus 0 adds a Z summand, modulus m >= 1 adds Z_m (m = 1 is a
    /// trivial slot, kept so unit positions in the fixed case tables line up).
    long add_slot(const Int& modulus, const std::string& label);
    /// Adds free rank + torsion of g as consecutive slots.
    void add_group(const FgAbelianGroup& g, const std::string& label);

    void set_unit(long slot, const Int& value);

    long slot_count() const { return static_cast<long>(moduli_.size()); }
    const Int& modulus(long slot) const { return moduli_[static_cast<std::size_t>(slot)]; }
    const std::string& label(long slot) const { return labels_[static_cast<std::size_t>(slot)]; }

    FgAbelianGroup canonical_group() const;
    MarkedGroup canonical_marked() const;
    /// Human-readable unit position, e.g. "1 in Z_3" or "(1,0) in Z^2".
    std::string unit_description() const;
    /// Summand list in assembly order, e.g. "Z (+) Z_3 (+) Z_2".
    std::string presentation_str() const;

private:
    std::vector<Int> moduli_;
    std::vector<Int> unit_;
    std::vector<std::string> labels_;
};

/// Orbit of a torsion element under the automorphism group of
/// Z_{d_1} (+) ... (+) Z_{d_k} (invariant factors d_1 | ... | d_k),
/// computed per primary component with elementary generators (unit
/// scalings and admissible transvections).  Throws out_of_regime_error
/// when the component being explored exceeds max_component_size.
class TorsionAutOrbit {
public:
    TorsionAutOrbit(std::vector<Int> moduli, IntVector element,
                    long max_component_size = 10000);

    /// Is `other` in the Aut-orbit of `element`?
    bool contains(const IntVector& other) const;
    /// Is some orbit member congruent to `other` modulo e*T?
    bool contains_mod(const IntVector& other, const Int& e) const;

private:
    struct PrimaryComponent {
        long prime;
        std::vector<long> exponents;       // p^e_i per affected coordinate
        std::vector<std::size_t> coords;   // indices into the full vector
        std::set<std::vector<long>> orbit;
    };
    std::vector<Int> moduli_;
    std::vector<PrimaryComponent> components_;

    std::vector<long> project(const IntVector& v, const PrimaryComponent& c) const;
};

}  // namespace toral
