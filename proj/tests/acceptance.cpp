// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each check re-derives its expectations from first principles
// rather than trusting intermediate library state.

#include "toral/circle.hpp"
#include "toral/classify.hpp"
#include "toral/compare.hpp"
#include "toral/ktheory.hpp"
#include "toral/linalg.hpp"
#include "toral/polyfactor.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace toral;

namespace {

std::mt19937 rng(123456789);
int failures = 0;

void report(int index, const char* title, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title
              << "\n";
    if (!ok) ++failures;
}

IntMatrix random_nonsingular(long n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    for (;;) {
        IntMatrix a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) a(i, j) = Int(d(rng));
        if (determinant(a) != 0) return a;
    }
}

FgAbelianGroup grp(long fr, std::vector<Int> tors) {
    return FgAbelianGroup::from_moduli(fr, std::move(tors));
}

TranslationVector sym(long n,
                      std::vector<std::pair<std::string, std::vector<Rational>>> terms) {
    TranslationVector t = TranslationVector::zero(n);
    for (auto& [s, c] : terms) t.irrational_terms.push_back({s, std::move(c)});
    return t;
}

double now_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

// ---------------------------------------------------------------------------

bool criterion1_circle_table() {
    auto t0 = std::chrono::steady_clock::now();
    struct Row {
        int a;
        FgAbelianGroup k0, k1;
    };
    const std::vector<Row> rows = {
        {2, grp(1, {}), grp(1, {})},          {3, grp(1, {Int(2)}), grp(1, {})},
        {5, grp(1, {Int(4)}), grp(1, {})},    {-2, grp(0, {}), grp(0, {Int(2)})},
        {-3, grp(0, {Int(2)}), grp(0, {Int(2)})}, {1, grp(2, {}), grp(2, {})},
        {-1, grp(1, {}), grp(1, {Int(2)})},
    };
    bool ok = true;
    for (const Row& r : rows) {
        KTheoryReport rep = k_groups_endomorphism(IntMatrix{{Int(r.a)}});
        ok = ok && rep.K0 == r.k0 && rep.K1 == r.k1;
    }
    // Spot-check units: a=3 has unit 1 in Z_2; a=2 has unit in the collapsed
    // Z_1 slot, i.e. the zero class.
    KTheoryReport three = k_groups_endomorphism(IntMatrix{{Int(3)}});
    ok = ok && three.k0_marked.torsion_coords == IntVector{Int(1)} &&
         three.k0_marked.free_coords == IntVector{Int(0)};
    KTheoryReport two = k_groups_endomorphism(IntMatrix{{Int(2)}});
    ok = ok && two.k0_marked.element_is_zero();
    return ok && now_ms(t0) < 1000.0;
}

bool criterion2_tables_vs_assembly() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (long n : {2L, 3L}) {
        for (int trial = 0; trial < 50; ++trial) {
            IntMatrix a = random_nonsingular(n, 5);
            try {
                KTheoryReport rep = k_groups_endomorphism(a);  // self-checks
                GenericKGroups gen = k_groups_generic(a);
                ok = ok && rep.K0 == gen.K0.group && rep.K1 == gen.K1;
            } catch (const std::exception&) {
                ok = false;
            }
        }
    }
    return ok && now_ms(t0) < 10000.0;
}

bool criterion3_worked_instances() {
    KTheoryReport two2 =
        k_groups_endomorphism(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(2)}});
    KTheoryReport two3 = k_groups_endomorphism(IntMatrix{
        {Int(2), Int(0), Int(0)}, {Int(0), Int(2), Int(0)}, {Int(0), Int(0), Int(2)}});
    bool ok = two2.K0 == grp(1, {Int(3)}) && two2.K1 == grp(1, {});
    ok = ok && two2.k0_marked.torsion_coords == IntVector{Int(1)};
    ok = ok && two3.K0 == grp(1, {Int(7)}) &&
         two3.K1 == grp(1, {Int(3), Int(3), Int(3)});
    return ok;
}

bool criterion4_conformance_suite() {
    constexpr double kGolden = 0.6180339887498949;
    struct Probe {
        IntMatrix a;
        std::vector<double> alpha_num;
        TranslationVector alpha;
        bool expect_transitive;
    };
    std::vector<Probe> probes;
    probes.push_back({IntMatrix{{Int(2)}}, {0.0}, TranslationVector::zero(1), true});
    probes.push_back({IntMatrix{{Int(2), Int(1)}, {Int(1), Int(1)}},
                      {0.0, 0.0},
                      TranslationVector::zero(2),
                      false});
    probes.push_back({IntMatrix{{Int(1)}},
                      {kGolden},
                      sym(1, {{"t", {Rational(1)}}}),
                      true});
    {
        TranslationVector third = TranslationVector::zero(1);
        third.rational_part[0] = Rational(1, 3);
        probes.push_back({IntMatrix{{Int(1)}}, {1.0 / 3.0}, third, false});
    }
    probes.push_back({IntMatrix{{Int(1), Int(1)}, {Int(0), Int(1)}},
                      {0.0, kGolden},
                      sym(2, {{"t", {Rational(0), Rational(1)}}}),
                      true});

    bool ok = true;
    for (const Probe& p : probes) {
        TransitivityVerdict v = classify_transitivity(p.a, p.alpha);
        ok = ok && v.strongly_transitive == p.expect_transitive;

        auto t0 = std::chrono::steady_clock::now();
        std::vector<double> center(p.alpha_num.size(), 0.5);
        GridCoverResult g =
            grid_transitivity_oracle(p.a, p.alpha_num, center, 0.15, 256, 200);
        ok = ok && g.covered == p.expect_transitive && now_ms(t0) < 5000.0;
    }
    return ok;
}

bool criterion5_linalg_properties() {
    std::uniform_int_distribution<int> d(-6, 6);
    auto rand_mat = [&](long n) {
        IntMatrix a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) a(i, j) = Int(d(rng));
        return a;
    };
    auto minor_gcd = [](const IntMatrix& a, long k) {
        std::vector<std::vector<long>> idx;
        std::vector<long> cur;
        std::function<void(long)> rec = [&](long start) {
            if (static_cast<long>(cur.size()) == k) {
                idx.push_back(cur);
                return;
            }
            for (long i = start; i < a.rows(); ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        Int g = 0;
        for (const auto& r : idx)
            for (const auto& c : idx) {
                IntMatrix sub(k, k);
                for (long i = 0; i < k; ++i)
                    for (long j = 0; j < k; ++j)
                        sub(i, j) = a(r[static_cast<std::size_t>(i)],
                                      c[static_cast<std::size_t>(j)]);
                g = boost::multiprecision::gcd(g, determinant(sub));
            }
        return g < 0 ? Int(-g) : g;
    };

    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        long n = 1 + trial % 4;
        IntMatrix a = rand_mat(n);
        SmithDecomposition s = smith_normal_form(a);
        ok = ok && s.U * a * s.V == s.D;
        Int du = determinant(s.U), dv = determinant(s.V);
        ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
        Int prefix = 1;
        for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
            if (i > 0) ok = ok && s.invariant_factors[i] % s.invariant_factors[i - 1] == 0;
            prefix *= s.invariant_factors[i];
            ok = ok && prefix == minor_gcd(a, static_cast<long>(i) + 1);
        }

        // Cayley-Hamilton.
        IntPolynomial p = char_poly(a);
        IntMatrix acc = IntMatrix::zero(n, n);
        IntMatrix pw = IntMatrix::identity(n);
        for (const Int& c : p.coefficients()) {
            acc = acc + pw * c;
            pw = pw * a;
        }
        ok = ok && acc.is_zero();

        if (n >= 2) {
            IntMatrix b = rand_mat(n);
            ok = ok && a.transpose() * cofactor_matrix(a) ==
                           IntMatrix::identity(n) * determinant(a);
            ok = ok &&
                 cofactor_matrix(a * b) == cofactor_matrix(a) * cofactor_matrix(b);
        }
        if (!ok) return false;
    }
    return ok;
}

bool criterion6_unimodular_completeness() {
    std::uniform_int_distribution<int> d(-10, 10);
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
        IntPolynomial f{Int(d(rng)), Int(d(rng)), Int(d(rng)), Int(1)};
        bool expected = f.eval(1) == 0 || f.eval(-1) == 0 || is_unimodular(f);
        for (int b = -25; b <= 25 && !expected; ++b)
            for (int c : {1, -1})
                if (poly_divide_exact(f, IntPolynomial{Int(c), Int(b), Int(1)}))
                    expected = true;
        auto w = find_unimodular_divisor(f);
        ok = ok && w.present() == expected;
        if (w.present())
            ok = ok && is_unimodular(*w.divisor) &&
                 poly_divide_exact(f, *w.divisor).has_value();
    }
    // |det A| = 1 always yields a witness.
    std::uniform_int_distribution<int> d3(-3, 3);
    int found = 0;
    while (found < 50) {
        long n = 2 + found % 3;
        IntMatrix a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) a(i, j) = Int(d3(rng));
        Int det = determinant(a);
        if (det != 1 && det != -1) continue;
        ++found;
        ok = ok && find_unimodular_divisor(char_poly(a)).present();
    }
    return ok;
}

bool criterion7_trace_report() {
    auto alpha = sym(3, {{"t1", {Rational(1), Rational(0), Rational(0)}},
                         {"t2", {Rational(0), Rational(0), Rational(1)}}});
    IntMatrix a001{
        {Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(1)}, {Int(0), Int(0), Int(1)}};
    OrderedK0Report r1 = trace_on_k0_minimal(a001, alpha);
    bool ok = r1.kernel_basis.size() == 2 && r1.trace_range_rank == 3;
    for (const IntVector& b : r1.kernel_basis) ok = ok && b[1] == 0;

    IntMatrix a101{
        {Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(1)}, {Int(0), Int(0), Int(1)}};
    ok = ok && trace_on_k0_minimal(a101, alpha).trace_range_rank == 2;

    auto alpha3 = sym(3, {{"t1", {Rational(1), Rational(0), Rational(0)}},
                          {"t2", {Rational(0), Rational(1), Rational(0)}},
                          {"t3", {Rational(0), Rational(0), Rational(1)}}});
    ok = ok &&
         trace_on_k0_minimal(IntMatrix::identity(3), alpha3).trace_range_rank == 4;
    return ok;
}

bool criterion8_boyland_conjugacy() {
    auto t0 = std::chrono::steady_clock::now();
    CircleLift lift;
    lift.sample_count = 4096;
    lift.g = [](double t) { return 2 * t + 0.1 * std::sin(2 * std::numbers::pi * t); };
    ConjugacyResult res = conjugacy_to_power_map(lift, 1e-10, 60);
    bool ok = res.residual < 1e-8 && res.iterations <= 60;
    for (std::size_t i = 1; i < res.step_sizes.size(); ++i)
        ok = ok && res.step_sizes[i] <= 0.5 * res.step_sizes[i - 1] + 1e-12;
    for (std::size_t i = 1; i < res.h_samples.size(); ++i)
        ok = ok && res.h_samples[i] >= res.h_samples[i - 1] - 1e-12;
    return ok && now_ms(t0) < 1000.0;
}

bool criterion9_comparator() {
    bool ok = true;
    // Same linear part, different strongly transitive translations.
    IntMatrix a2{{Int(2), Int(0)}, {Int(0), Int(2)}};
    ok = ok && same_algebra(a2, TranslationVector::zero(2), a2,
                            sym(2, {{"t", {Rational(1), Rational(1, 2)}}}))
                       .verdict == IsoVerdict::Isomorphic;
    ok = ok && same_algebra(IntMatrix{{Int(3)}}, TranslationVector::zero(1),
                            IntMatrix{{Int(-3)}}, TranslationVector::zero(1))
                       .verdict == IsoVerdict::NotIsomorphic;

    // Brute-force agreement on all marked torsion groups of order <= 200: the
    // decision must match the height-sequence characterization of the
    // automorphism orbits (exact for finite abelian groups).
    auto pow_l = [](long b, long e) {
        long r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    auto heights = [&](long p, const std::vector<long>& exps, std::vector<long> x) {
        std::vector<long> mods(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i) mods[i] = pow_l(p, exps[i]);
        std::vector<long> seq;
        for (;;) {
            bool zero = true;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] % mods[i] != 0) zero = false;
            if (zero) break;
            long h = 0;
            for (;; ++h) {
                bool in = true;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    long q = pow_l(p, std::min<long>(h + 1, exps[i]));
                    if (h + 1 >= exps[i] ? x[i] % mods[i] != 0 : x[i] % q != 0)
                        in = false;
                }
                if (!in) break;
            }
            seq.push_back(h);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * p) % mods[i];
        }
        return seq;
    };
    auto oracle = [&](const std::vector<long>& mods, const std::vector<long>& g,
                      const std::vector<long>& h) {
        std::map<long, std::pair<std::vector<long>, std::pair<std::vector<long>, std::vector<long>>>>
            comp;
        for (std::size_t i = 0; i < mods.size(); ++i) {
            long d = mods[i];
            for (long p = 2; p <= d; ++p) {
                if (d % p != 0) continue;
                long e = 0;
                while (d % p == 0) d /= p, ++e;
                long q = pow_l(p, e);
                auto& c = comp[p];
                c.first.push_back(e);
                long cof = mods[i] / q;
                c.second.first.push_back(g[i] % q * (cof % q) % q);
                c.second.second.push_back(h[i] % q * (cof % q) % q);
            }
        }
        for (auto& [p, c] : comp)
            if (heights(p, c.first, c.second.first) !=
                heights(p, c.first, c.second.second))
                return false;
        return true;
    };

    std::vector<std::vector<long>> chains;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long last, long prod) {
        for (long d = last; prod * d <= 200; ++d) {
            if (last > 1 && d % last != 0) continue;
            cur.push_back(d);
            chains.push_back(cur);
            rec(d, prod * d);
            cur.pop_back();
        }
    };
    rec(2, 1);

    std::uniform_int_distribution<long> pickv(0, 1L << 30);
    for (const auto& chain : chains) {
        long order = 1;
        for (long d : chain) order *= d;
        std::vector<Int> moduli(chain.begin(), chain.end());
        int pairs = order <= 16 ? static_cast<int>(order * order) : 20;
        for (int t = 0; t < pairs; ++t) {
            std::vector<long> g, h;
            if (order <= 16) {
                long gi = t / order, hi = t % order;
                for (long d : chain) {
                    g.push_back(gi % d);
                    gi /= d;
                    h.push_back(hi % d);
                    hi /= d;
                }
            } else {
                for (long d : chain) {
                    g.push_back(pickv(rng) % d);
                    h.push_back(pickv(rng) % d);
                }
            }
            MarkedGroup G{FgAbelianGroup::from_moduli(0, moduli), {},
                          IntVector(g.begin(), g.end())};
            MarkedGroup H{FgAbelianGroup::from_moduli(0, moduli), {},
                          IntVector(h.begin(), h.end())};
            IsoVerdict got = marked_group_iso(G, H);
            if (got == IsoVerdict::Undecided) return false;
            ok = ok && (got == IsoVerdict::Isomorphic) == oracle(chain, g, h);
            if (!ok) return false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "circle endomorphism K-theory table (a in {2,3,5,-2,-3,1,-1})",
           criterion1_circle_table());
    report(2, "n=2,3 case tables equal the six-term assembly on 50 random matrices each",
           criterion2_tables_vs_assembly());
    report(3, "worked instances 2I_2 and 2I_3", criterion3_worked_instances());
    report(4, "transitivity classifier matches the grid oracle on the conformance suite",
           criterion4_conformance_suite());
    report(5, "exact linear algebra property suite (SNF, minors, Cayley-Hamilton, cofactors)",
           criterion5_linalg_properties());
    report(6, "unimodular-divisor search complete on 500 random cubics; |det|=1 implies witness",
           criterion6_unimodular_completeness());
    report(7, "minimal 3-torus trace report ranks (3, 2, and 4 realizable)",
           criterion7_trace_report());
    report(8, "power-map conjugacy: residual < 1e-8, contraction <= 1/2, monotone h",
           criterion8_boyland_conjugacy());
    report(9, "comparator verdicts and marked-group decision vs brute force (order <= 200)",
           criterion9_comparator());
    return failures == 0 ? 0 : 1;
}
