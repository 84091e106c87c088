#include "toral/ktheory.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace toral {

namespace {

Int sign_of(const Int& d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out = IntMatrix::zero(a.rows() + b.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

IntMatrix scalar_matrix(const Int& v) { return IntMatrix{{v}}; }

// Kernel of M acting on Z^n, as a free abelian group.
FgAbelianGroup kernel_group(const IntMatrix& m) {
    return FgAbelianGroup::free(m.cols() - rank(m));
}

Int positive_mod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

// Cokernel of M with the class of e1 marked, in presentation order.
void append_coker_with_e1(MarkedAssembly& asm_, const IntMatrix& m,
                          const std::string& label) {
    SmithDecomposition snf = smith_normal_form(m);
    IntVector e1(static_cast<std::size_t>(m.rows()), Int(0));
    e1[0] = 1;
    IntVector coords = snf.U * e1;
    for (long i = 0; i < m.rows(); ++i) {
        Int d = i < m.cols() ? snf.D(i, i) : Int(0);
        long slot = asm_.add_slot(d, label);
        Int v = coords[static_cast<std::size_t>(i)];
        asm_.set_unit(slot, d == 0 ? v : positive_mod(v, d));
    }
}

std::string group_or_unknown(const FgAbelianGroup& g) { return g.str(); }

}  // namespace

MuPair compute_mu(const IntMatrix& A) {
    const long n = A.rows();
    if (!A.is_square() || (n != 2 && n != 3))
        throw out_of_regime_error("mu matrices are defined for n in {2,3}");
    Int det = determinant(A);
    if (det == 0) throw out_of_regime_error("mu matrices require det A != 0");

    MuPair mu;
    mu.n = n;
    mu.conjugation_note = "sign normalization W = identity";
    if (n == 2) {
        mu.mu0 = IntMatrix{{1, 0}, {0, det}};
        mu.mu1 = A.transpose();
    } else {
        mu.mu0 = block_diag(scalar_matrix(1), cofactor_matrix(A).transpose());
        mu.mu1 = block_diag(scalar_matrix(det), A.transpose());
    }
    return mu;
}

GenericKGroups k_groups_generic(const IntMatrix& A) {
    const long n = A.rows();
    if (!A.is_square() || n < 1 || n > 3)
        throw out_of_regime_error("K-group assembly supports n in {1,2,3}");
    Int det = determinant(A);
    if (det == 0) throw out_of_regime_error("K-group assembly requires det A != 0");
    Int D = abs(det);
    Int eps = sign_of(det);

    // Integral forms of D*mu0^{-1} and D*mu1^{-1} via adjugates.
    IntMatrix dmu0, dmu1;
    if (n == 1) {
        dmu0 = scalar_matrix(D);
        dmu1 = scalar_matrix(eps);
    } else if (n == 2) {
        dmu0 = IntMatrix{{D, 0}, {0, eps}};
        dmu1 = adjugate(A.transpose()) * eps;
    } else {
        dmu0 = block_diag(scalar_matrix(D), A * eps);
        dmu1 = block_diag(scalar_matrix(eps), cofactor_matrix(A) * eps);
    }
    IntMatrix m0 = IntMatrix::identity(dmu0.rows()) - dmu0;
    IntMatrix m1 = IntMatrix::identity(dmu1.rows()) - dmu1;

    MarkedAssembly k0;
    append_coker_with_e1(k0, m0, "coker(1 - D mu0^-1)");
    k0.add_group(kernel_group(m1), "ker(1 - D mu1^-1)");

    GenericKGroups out;
    out.K0 = k0.canonical_marked();
    out.K1 = cokernel_group(m1).direct_sum(kernel_group(m0));
    return out;
}

KTheoryReport k_groups_endomorphism(const IntMatrix& A) {
    const long n = A.rows();
    if (!A.is_square() || n < 1 || n > 3)
        throw out_of_regime_error("endomorphism K-groups support n in {1,2,3}");
    Int det = determinant(A);
    if (det == 0)
        throw out_of_regime_error("endomorphism K-groups require det A != 0");
    Int D = abs(det);

    KTheoryReport r;
    r.n = n;
    r.det = det;
    r.k_data_valid = true;

    MarkedAssembly k0;
    MarkedAssembly k1;
    const IntMatrix I = IntMatrix::identity(n);

    if (n == 1) {
        const Int a = A(0, 0);
        if (a >= 2) {
            r.case_label = "case 1 (a >= 2)";
            k0.set_unit(k0.add_slot(a - 1, "torsion"), 1);
            k0.add_slot(0, "free");
            k1.add_slot(0, "free");
        } else if (a == 1) {
            r.case_label = "case 2 (a = 1)";
            k0.set_unit(k0.add_slot(0, "free"), 1);
            k0.add_slot(0, "free");
            k1.add_slot(0, "free");
            k1.add_slot(0, "free");
        } else if (a == -1) {
            r.case_label = "case 3 (a = -1)";
            k0.set_unit(k0.add_slot(0, "free"), 1);
            k1.add_slot(0, "free");
            k1.add_slot(2, "torsion");
        } else {
            r.case_label = "case 4 (a <= -2)";
            k0.set_unit(k0.add_slot(D - 1, "torsion"), 1);
            k1.add_slot(2, "torsion");
        }
    } else if (n == 2) {
        if (det >= 2) {
            r.case_label = "case 1 (det >= 2)";
            k0.add_slot(0, "free");
            k0.set_unit(k0.add_slot(det - 1, "torsion"), 1);
            k0.add_group(kernel_group(I - A), "ker(1-A)");
            k1.add_slot(0, "free");
            k1.add_group(cokernel_group(I - A), "coker(1-A)");
        } else if (det == 1) {
            r.case_label = "case 2 (det = 1)";
            k0.set_unit(k0.add_slot(0, "free"), 1);
            k0.add_slot(0, "free");
            k0.add_group(kernel_group(I - A), "ker(1-A)");
            k1.add_slot(0, "free");
            k1.add_slot(0, "free");
            k1.add_group(cokernel_group(I - A), "coker(1-A)");
        } else if (det == -1) {
            r.case_label = "case 3 (det = -1)";
            k0.set_unit(k0.add_slot(0, "free"), 1);
            k0.add_slot(2, "torsion");
            k0.add_group(kernel_group(I + A), "ker(1+A)");
            k1.add_slot(0, "free");
            k1.add_group(cokernel_group(I + A), "coker(1+A)");
        } else {
            r.case_label = "case 4 (det <= -2)";
            k0.add_slot(2, "torsion");
            k0.set_unit(k0.add_slot(D - 1, "torsion"), 1);
            k0.add_group(kernel_group(I + A), "ker(1+A)");
            k1.add_group(cokernel_group(I + A), "coker(1+A)");
        }
    } else {
        const IntMatrix cof = cofactor_matrix(A);
        if (det >= 2) {
            r.case_label = "case 1 (det >= 2)";
            k0.add_slot(0, "free");
            k0.add_group(kernel_group(I - cof), "ker(1-cof A)");
            k0.set_unit(k0.add_slot(det - 1, "torsion"), 1);
            k0.add_group(cokernel_group(I - A), "coker(1-A)");
            k1.add_slot(0, "free");
            k1.add_group(kernel_group(I - A), "ker(1-A)");
            k1.add_group(cokernel_group(I - cof), "coker(1-cof A)");
        } else if (det == 1) {
            r.case_label = "case 2 (det = 1)";
            k0.set_unit(k0.add_slot(0, "free"), 1);
            k0.add_slot(0, "free");
            k0.add_group(kernel_group(I - A), "ker(1-A)");
            k0.add_group(cokernel_group(I - A), "coker(1-A)");
            k1.add_slot(0, "free");
            k1.add_slot(0, "free");
            k1.add_group(kernel_group(I - A), "ker(1-A)");
            k1.add_group(cokernel_group(I - A), "coker(1-A)");
        } else if (det == -1) {
            r.case_label = "case 3 (det = -1)";
            k0.set_unit(k0.add_slot(0, "free"), 1);
            k0.add_group(kernel_group(I - A), "ker(1-A)");
            k0.add_group(cokernel_group(I + A), "coker(1+A)");
            k1.add_slot(0, "free");
            k1.add_group(kernel_group(I + A), "ker(1+A)");
            k1.add_group(cokernel_group(I + cof), "coker(1+cof A)");
            k1.add_slot(2, "torsion");
        } else {
            r.case_label = "case 4 (det <= -2)";
            k0.add_group(kernel_group(I + cof), "ker(1+cof A)");
            k0.set_unit(k0.add_slot(D - 1, "torsion"), 1);
            k0.add_group(cokernel_group(I + A), "coker(1+A)");
            k1.add_group(kernel_group(I + A), "ker(1+A)");
            k1.add_group(cokernel_group(I + cof), "coker(1+cof A)");
            k1.add_slot(2, "torsion");
        }
    }

    r.k0_marked = k0.canonical_marked();
    r.K0 = r.k0_marked.group;
    r.K1 = k1.canonical_group();
    r.k0_presentation = k0.presentation_str();
    r.unit_description = k0.unit_description();

    // The case table and the six-term assembly must agree; a mismatch means
    // an internal arithmetic fault, not a bad input.
    GenericKGroups generic = k_groups_generic(A);
    if (!(generic.K0.group == r.K0) || !(generic.K1 == r.K1)) {
        std::ostringstream os;
        os << "case-table/assembly mismatch: table K0=" << group_or_unknown(r.K0)
           << " K1=" << group_or_unknown(r.K1)
           << " assembly K0=" << group_or_unknown(generic.K0.group)
           << " K1=" << group_or_unknown(generic.K1);
        throw std::logic_error(os.str());
    }

    // phi_A itself (trivial translation) is simple and purely infinite exactly
    // in the exact regime.
    bool exact = is_exact_endomorphism(A);
    r.simple = exact;
    r.purely_infinite = exact;
    return r;
}

OrderedK0Report trace_on_k0_minimal(const IntMatrix& A,
                                    const TranslationVector& alpha) {
    if (!A.is_square() || A.rows() != 3)
        throw out_of_regime_error("ordered K0 with trace requires n = 3");
    if (determinant(A) != 1)
        throw out_of_regime_error("ordered K0 with trace requires det A = 1");
    const IntPolynomial unipotent_char{-1, 3, -3, 1};  // (x-1)^3
    if (!(char_poly(A) == unipotent_char))
        throw out_of_regime_error(
            "ordered K0 with trace requires characteristic polynomial (x-1)^3");
    if (!lambda_in_S(A, alpha).in_S)
        throw out_of_regime_error(
            "ordered K0 with trace requires a minimal map (translation fails "
            "the subgroup-generation condition)");

    OrderedK0Report r;
    const IntMatrix I = IntMatrix::identity(3);
    // det A = 1, so ker(1 - (A^t)^{-1}) = ker(A^t - 1) as lattices.
    r.kernel_basis = kernel_lattice(A.transpose() - I);
    for (const IntVector& b : r.kernel_basis) r.eta_values.push_back(alpha.pair(b));

    FgAbelianGroup coker = cokernel_group(I - A);
    FgAbelianGroup ker = FgAbelianGroup::free(static_cast<long>(r.kernel_basis.size()));
    r.K0 = FgAbelianGroup::free(2).direct_sum(ker).direct_sum(coker);
    r.K1 = r.K0;  // same shape: Z^2 (+) ker(1-A) (+) coker(1-A)

    // Q-rank of {1} union {eta(basis)}: coordinates over {1} and the symbols.
    std::set<std::string> symbols;
    for (const auto& v : r.eta_values)
        for (const auto& [s, c] : v.terms) symbols.insert(s);
    std::vector<std::string> sym_list(symbols.begin(), symbols.end());
    IntMatrix coords(static_cast<long>(r.eta_values.size()) + 1,
                     static_cast<long>(sym_list.size()) + 1);
    coords(0, 0) = 1;
    for (std::size_t i = 0; i < r.eta_values.size(); ++i) {
        const SymbolicReal& v = r.eta_values[i];
        Int scale = boost::multiprecision::denominator(v.rational);
        for (const auto& [s, c] : v.terms) {
            Int d = boost::multiprecision::denominator(c);
            scale = scale / boost::multiprecision::gcd(scale, d) * d;
        }
        coords(static_cast<long>(i) + 1, 0) =
            boost::multiprecision::numerator(v.rational * Rational(scale));
        for (std::size_t j = 0; j < sym_list.size(); ++j) {
            auto it = v.terms.find(sym_list[j]);
            if (it != v.terms.end())
                coords(static_cast<long>(i) + 1, static_cast<long>(j) + 1) =
                    boost::multiprecision::numerator(it->second * Rational(scale));
        }
    }
    r.trace_range_rank = rank(coords);

    r.positive_cone_description =
        "{0} union {(x, y, u, v) in Z^2 (+) ker (+) coker : x + eta(u) > 0}, "
        "trace normalized to vanish on the second free generator";
    return r;
}

KTheoryReport k_groups_affine(const IntMatrix& A, const TranslationVector& alpha) {
    const long n = A.rows();
    if (!A.is_square() || n < 1 || n > 3)
        throw out_of_regime_error("affine K-groups support n in {1,2,3}");
    TransitivityVerdict verdict = classify_transitivity(A, alpha);
    Int det = determinant(A);
    Int D = abs(det);

    // Section-6 style case letters.
    std::string label;
    if (n == 1) {
        const Int a = A(0, 0);
        label = a >= 2 ? "A" : (a <= -2 ? "B" : "C");
    } else {
        if (det >= 2)
            label = verdict.case_tag == CaseTag::Case1_Exact ? "A" : "D";
        else if (det <= -2)
            label = verdict.case_tag == CaseTag::Case1_Exact ? "C" : "G";
        else
            label = det == 1 ? "E" : "F";
    }

    if (!verdict.strongly_transitive) {
        KTheoryReport r;
        r.n = n;
        r.det = det;
        r.case_label = label;
        r.k_data_valid = false;
        r.simple = false;
        r.purely_infinite = false;
        r.regime_note =
            verdict.case_tag == CaseTag::Case3_Never
                ? "not strongly transitive for any translation (blocking "
                  "unimodular factor); algebra not simple, no K-data claimed"
                : "not strongly transitive for this translation (rational "
                  "pairing obstruction); algebra not simple, no K-data claimed";
        return r;
    }

    if (D >= 2) {
        KTheoryReport r = k_groups_endomorphism(A);
        r.case_label = label;
        r.simple = true;
        r.purely_infinite = true;
        r.regime_note =
            "strongly transitive and non-injective: simple, purely infinite; "
            "K-data independent of the translation";
        return r;
    }

    // det = 1 homeomorphism regime (det = -1 never reaches here: its
    // characteristic polynomial always carries a unimodular factor).
    KTheoryReport r = k_groups_endomorphism(A);
    r.case_label = label;
    r.simple = true;  // minimal homeomorphism
    r.purely_infinite = false;
    if (n == 3) {
        r.trace_order = trace_on_k0_minimal(A, alpha);
        r.regime_note =
            "minimal homeomorphism: simple unital with unique trace; ordered "
            "K0 carried by the trace pairing";
    } else {
        r.regime_note =
            "minimal homeomorphism: simple, stably finite; ordered K-theory "
            "data: external reference, not computed";
    }
    return r;
}

AlgebraPresentation presentation(const IntMatrix& A, const TranslationVector& alpha) {
    if (!A.is_square()) throw std::invalid_argument("square matrix required");
    const long n = A.rows();
    if (determinant(A) == 0)
        throw out_of_regime_error("presentation requires det A != 0");
    if (alpha.n != n) throw std::invalid_argument("translation dimension mismatch");

    AlgebraPresentation p;
    p.n = n;
    p.det = determinant(A);
    p.dual_action = A.transpose();
    p.coset_reps = coset_representatives(A);
    for (const IntVector& g : p.coset_reps) {
        SymbolicReal chi = alpha.pair(g);
        // Only the class mod 1 matters for the character value.
        Int num = boost::multiprecision::numerator(chi.rational);
        Int den = boost::multiprecision::denominator(chi.rational);
        chi.rational = Rational(positive_mod(num, den), den);
        p.characters.push_back(chi);
    }

    p.relations.push_back("U_g U_h = U_{g+h} for all g, h in Z^" + std::to_string(n));
    p.relations.push_back(
        "S U_g = chi(g) U_{Mg} S with M = A^t and chi(g) = e^{2 pi i <g, alpha>}");
    std::ostringstream sum;
    sum << "sum over the " << p.coset_reps.size()
        << " coset representatives g of Z^" << n
        << " / A^t Z^" << n << " of U_g S S* U_g* = 1";
    p.relations.push_back(sum.str());
    for (std::size_t i = 0; i < p.coset_reps.size(); ++i) {
        std::ostringstream os;
        os << "representative g = " << vector_str(p.coset_reps[i])
           << ": chi(g) = e^{2 pi i (" << p.characters[i].str() << ")}";
        p.relations.push_back(os.str());
    }
    return p;
}

}  // namespace toral
