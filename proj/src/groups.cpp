#include "toral/groups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace toral {

namespace {

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

Int positive_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

std::string cyclic_str(const Int& m) {
    if (m == 0) return "Z";
    std::ostringstream os;
    os << "Z_" << m;
    return os.str();
}

}  // namespace

void MarkedGroup::validate() const {
    if (static_cast<long>(free_coords.size()) != group.free_rank)
        throw std::invalid_argument("marked group: free coordinate count mismatch");
    if (torsion_coords.size() != group.torsion.size())
        throw std::invalid_argument("marked group: torsion coordinate count mismatch");
    for (std::size_t i = 0; i < torsion_coords.size(); ++i)
        if (torsion_coords[i] < 0 || torsion_coords[i] >= group.torsion[i])
            throw std::invalid_argument("marked group: torsion coordinate not reduced");
}

Int MarkedGroup::element_order() const {
    for (const Int& c : free_coords)
        if (c != 0) return 0;
    Int order = 1;
    for (std::size_t i = 0; i < torsion_coords.size(); ++i) {
        const Int& d = group.torsion[i];
        order = lcm(order, d / boost::multiprecision::gcd(torsion_coords[i], d));
    }
    return order;
}

bool MarkedGroup::element_is_zero() const {
    return is_zero(free_coords) && is_zero(torsion_coords);
}

bool MarkedGroup::element_in_k_multiples(const Int& k) const {
    if (k == 0) return element_is_zero();
    for (const Int& c : free_coords)
        if (c % k != 0) return false;
    for (std::size_t i = 0; i < torsion_coords.size(); ++i) {
        Int g = boost::multiprecision::gcd(k, group.torsion[i]);
        if (torsion_coords[i] % g != 0) return false;
    }
    return true;
}

std::string MarkedGroup::str() const {
    std::ostringstream os;
    os << group.str() << " with marked element (";
    bool first = true;
    for (const Int& c : free_coords) {
        if (!first) os << ",";
        os << c;
        first = false;
    }
    for (const Int& c : torsion_coords) {
        if (!first) os << ",";
        os << c;
        first = false;
    }
    os << ")";
    return os.str();
}

long MarkedAssembly::add_slot(const Int& modulus, const std::string& label) {
    if (modulus < 0) throw std::invalid_argument("slot modulus must be >= 0");
    moduli_.push_back(modulus);
    unit_.push_back(0);
    labels_.push_back(label);
    return static_cast<long>(moduli_.size()) - 1;
}

void MarkedAssembly::add_group(const FgAbelianGroup& g, const std::string& label) {
    for (long i = 0; i < g.free_rank; ++i) add_slot(0, label);
    for (const Int& d : g.torsion) add_slot(d, label);
}

void MarkedAssembly::set_unit(long slot, const Int& value) {
    unit_.at(static_cast<std::size_t>(slot)) = value;
}

MarkedGroup MarkedAssembly::canonical_marked() const {
    MarkedGroup out;
    std::vector<std::size_t> torsion_slots;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] == 0) {
            out.group.free_rank += 1;
            out.free_coords.push_back(unit_[i]);
        } else {
            torsion_slots.push_back(i);
        }
    }
    const long k = static_cast<long>(torsion_slots.size());
    if (k > 0) {
        IntMatrix diag = IntMatrix::zero(k, k);
        for (long i = 0; i < k; ++i)
            diag(i, i) = moduli_[torsion_slots[static_cast<std::size_t>(i)]];
        SmithDecomposition snf = smith_normal_form(diag);
        // diag Z^k = U^{-1} D Z^k, so coordinates transform by t -> U t.
        IntVector t(static_cast<std::size_t>(k));
        for (long i = 0; i < k; ++i)
            t[static_cast<std::size_t>(i)] = unit_[torsion_slots[static_cast<std::size_t>(i)]];
        IntVector ct = snf.U * t;
        for (long i = 0; i < k; ++i) {
            const Int& d = snf.D(i, i);
            if (d == 1) continue;
            out.group.torsion.push_back(d);
            out.torsion_coords.push_back(positive_mod(ct[static_cast<std::size_t>(i)], d));
        }
    }
    out.validate();
    return out;
}

FgAbelianGroup MarkedAssembly::canonical_group() const {
    return canonical_marked().group;
}

std::string MarkedAssembly::unit_description() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (unit_[i] == 0) continue;
        if (!first) os << " (+) ";
        os << unit_[i] << " in " << cyclic_str(moduli_[i]);
        if (!labels_[i].empty()) os << " [" << labels_[i] << "]";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string MarkedAssembly::presentation_str() const {
    if (moduli_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i) os << " (+) ";
        os << cyclic_str(moduli_[i]);
    }
    return os.str();
}

namespace {

long pow_long(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long mulmod(long a, long b, long m) { return (a * b) % m; }

long powmod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Generators of the unit group (Z/p^e)^*.
std::vector<long> unit_group_generators(long p, long e) {
    long m = pow_long(p, e);
    if (p == 2) {
        if (e == 1) return {};
        if (e == 2) return {3};
        return {m - 1, 5};
    }
    long phi = pow_long(p, e - 1) * (p - 1);
    std::vector<long> qs = prime_factors(phi);
    for (long g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (long q : qs)
            if (powmod(g, phi / q, m) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return {g};
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

TorsionAutOrbit::TorsionAutOrbit(std::vector<Int> moduli, IntVector element,
                                 long max_component_size)
    : moduli_(std::move(moduli)) {
    if (element.size() != moduli_.size())
        throw std::invalid_argument("element/moduli size mismatch");

    // Collect the primes dividing any modulus; moduli must fit in long for
    // the orbit search (the caller bounds torsion size anyway).
    std::map<long, PrimaryComponent> comps;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (moduli_[i] < 1)
            throw std::invalid_argument("torsion moduli must be positive");
        if (moduli_[i] > Int(std::numeric_limits<long>::max()))
            throw out_of_regime_error("torsion modulus exceeds orbit search bound");
        long d = static_cast<long>(moduli_[i]);
        for (long p : prime_factors(d)) {
            long e = 0;
            long q = d;
            while (q % p == 0) {
                q /= p;
                ++e;
            }
            PrimaryComponent& c = comps[p];
            c.prime = p;
            c.exponents.push_back(e);
            c.coords.push_back(i);
        }
    }

    for (auto& [p, c] : comps) {
        long size = 1;
        for (long e : c.exponents) {
            size *= pow_long(p, e);
            if (size > max_component_size)
                throw out_of_regime_error("primary component exceeds orbit search bound");
        }
        const std::size_t m = c.exponents.size();
        std::vector<long> mods(m);
        for (std::size_t i = 0; i < m; ++i) mods[i] = pow_long(p, c.exponents[i]);

        // Elementary automorphism generators acting on residue vectors:
        // per-coordinate unit scalings and transvections x_j += c*x_i with
        // the admissible multiplier c = p^max(0, e_j - e_i).
        struct Gen {
            std::size_t i, j;  // i == j: scaling by mult; else transvection
            long mult;
        };
        std::vector<Gen> gens;
        for (std::size_t i = 0; i < m; ++i)
            for (long u : unit_group_generators(p, c.exponents[i]))
                gens.push_back({i, i, u});
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                long shift = std::max<long>(0, c.exponents[j] - c.exponents[i]);
                gens.push_back({i, j, pow_long(p, shift)});
            }

        std::vector<long> start = project(element, c);
        std::deque<std::vector<long>> queue{start};
        c.orbit.insert(start);
        while (!queue.empty()) {
            std::vector<long> x = queue.front();
            queue.pop_front();
            for (const Gen& g : gens) {
                std::vector<long> y = x;
                if (g.i == g.j)
                    y[g.i] = mulmod(x[g.i], g.mult, mods[g.i]);
                else
                    y[g.j] = (x[g.j] + mulmod(x[g.i], g.mult, mods[g.j])) % mods[g.j];
                if (c.orbit.insert(y).second) queue.push_back(y);
            }
        }
        components_.push_back(std::move(c));
    }
}

std::vector<long> TorsionAutOrbit::project(const IntVector& v,
                                           const PrimaryComponent& c) const {
    std::vector<long> out(c.coords.size());
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        long mod = pow_long(c.prime, c.exponents[i]);
        out[i] = static_cast<long>(positive_mod(v[c.coords[i]], Int(mod)));
    }
    return out;
}

bool TorsionAutOrbit::contains(const IntVector& other) const {
    if (other.size() != moduli_.size())
        throw std::invalid_argument("element/moduli size mismatch");
    for (const PrimaryComponent& c : components_)
        if (!c.orbit.count(project(other, c))) return false;
    return true;
}

bool TorsionAutOrbit::contains_mod(const IntVector& other, const Int& e) const {
    if (e == 0) return contains(other);
    if (other.size() != moduli_.size())
        throw std::invalid_argument("element/moduli size mismatch");
    for (const PrimaryComponent& c : components_) {
        // e*T meets this component in p^{v_p(e)} * T_p.
        long f = 0;
        Int q = e;
        while (q % c.prime == 0) {
            q /= c.prime;
            ++f;
        }
        std::vector<long> target = project(other, c);
        bool found = false;
        for (const std::vector<long>& o : c.orbit) {
            bool match = true;
            for (std::size_t i = 0; i < target.size() && match; ++i) {
                long red = pow_long(c.prime, std::min<long>(f, c.exponents[i]));
                if ((o[i] - target[i]) % red != 0) match = false;
            }
            if (match) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace toral
