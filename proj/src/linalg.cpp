#include "toral/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toral {

namespace {

// Pivot choice: minimal absolute value among nonzero entries of the trailing
// submatrix, scanned row-major for deterministic U, V.
bool find_pivot(const IntMatrix& m, long t, long& pi, long& pj) {
    bool found = false;
    Int best = 0;
    for (long i = t; i < m.rows(); ++i)
        for (long j = t; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

// Round-to-nearest quotient, so |a - q*b| <= |b|/2.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    Int r = a - q * b;
    if (abs(r) * 2 > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const long rows = a.rows(), cols = a.cols();
    IntMatrix m = a;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto row_op = [&](long dst, long src, const Int& q) {  // row dst -= q * row src
        for (long j = 0; j < cols; ++j) m(dst, j) -= q * m(src, j);
        for (long j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
    };
    auto col_op = [&](long dst, long src, const Int& q) {  // col dst -= q * col src
        for (long i = 0; i < rows; ++i) m(i, dst) -= q * m(i, src);
        for (long i = 0; i < cols; ++i) v(i, dst) -= q * v(i, src);
    };

    const long steps = std::min(rows, cols);
    for (long t = 0; t < steps; ++t) {
        long pi, pj;
        if (!find_pivot(m, t, pi, pj)) break;
        m.swap_rows(t, pi);
        u.swap_rows(t, pi);
        m.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot.
            bool cleared = true;
            for (long i = t + 1; i < rows; ++i) {
                if (m(i, t) == 0) continue;
                Int q = nearest_quotient(m(i, t), m(t, t));
                row_op(i, t, q);
                if (m(i, t) != 0) cleared = false;
            }
            // Clear row t right of the pivot.
            for (long j = t + 1; j < cols; ++j) {
                if (m(t, j) == 0) continue;
                Int q = nearest_quotient(m(t, j), m(t, t));
                col_op(j, t, q);
                if (m(t, j) != 0) cleared = false;
            }
            if (!cleared) {
                // A smaller remainder appeared; make it the pivot and retry.
                long qi, qj;
                find_pivot(m, t, qi, qj);
                m.swap_rows(t, qi);
                u.swap_rows(t, qi);
                m.swap_cols(t, qj);
                v.swap_cols(t, qj);
                continue;
            }
            // Pivot must divide every entry of the trailing submatrix for the
            // divisibility chain; if not, fold the offending row in and retry.
            bool divides_all = true;
            for (long i = t + 1; i < rows && divides_all; ++i)
                for (long j = t + 1; j < cols && divides_all; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        row_op(t, i, Int(-1));  // row t += row i
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }

    std::vector<Int> factors;
    for (long t = 0; t < steps; ++t) {
        if (m(t, t) < 0) {
            for (long j = 0; j < cols; ++j) m(t, j) = -m(t, j);
            for (long j = 0; j < rows; ++j) u(t, j) = -u(t, j);
        }
        if (m(t, t) != 0) factors.push_back(m(t, t));
    }
    return SmithDecomposition{std::move(u), std::move(m), std::move(v), std::move(factors)};
}

Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const long n = a.rows();
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            long swap = -1;
            for (long i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

IntMatrix cofactor_matrix(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("cofactor_matrix: matrix not square");
    const long n = a.rows();
    if (n < 2) throw std::invalid_argument("cofactor_matrix: requires n >= 2");
    IntMatrix cof(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            for (long r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (long c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            Int d = determinant(minor);
            cof(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return cof;
}

IntMatrix adjugate(const IntMatrix& a) { return cofactor_matrix(a).transpose(); }

IntMatrix unimodular_inverse(const IntMatrix& a) {
    Int d = determinant(a);
    if (d != 1 && d != -1) throw std::invalid_argument("unimodular_inverse: |det| != 1");
    if (a.rows() == 1) return IntMatrix{{d}};
    IntMatrix adj = adjugate(a);
    return d == 1 ? adj : -adj;
}

IntPolynomial char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const long n = a.rows();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    IntMatrix m = IntMatrix::identity(n);
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A*M_{k-1} + c_{n-k+1} I
            m = a * m;
            const Int& ck = c[static_cast<std::size_t>(n - k + 1)];
            for (long i = 0; i < n; ++i) m(i, i) += ck;
        }
        Int t = (a * m).trace();
        c[static_cast<std::size_t>(n - k)] = -t / k;  // exact by construction
    }
    return IntPolynomial(std::move(c));
}

std::vector<IntVector> kernel_lattice(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    const long r = static_cast<long>(snf.invariant_factors.size());
    std::vector<IntVector> basis;
    for (long j = r; j < a.cols(); ++j) {
        IntVector v(static_cast<std::size_t>(a.cols()));
        for (long i = 0; i < a.cols(); ++i) v[static_cast<std::size_t>(i)] = snf.V(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Int FgAbelianGroup::torsion_order() const {
    Int p = 1;
    for (const auto& d : torsion) p *= d;
    return p;
}

std::string FgAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() { os << (first ? "" : " + "); first = false; };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const auto& d : torsion) {
        sep();
        os << "Z_" << d.str();
    }
    return os.str();
}

FgAbelianGroup FgAbelianGroup::from_moduli(long free_rank, const std::vector<Int>& moduli) {
    FgAbelianGroup g;
    g.free_rank = free_rank;
    std::vector<Int> nontrivial;
    for (const auto& m : moduli) {
        if (m < 0) throw std::invalid_argument("from_moduli: negative modulus");
        if (m == 0)
            ++g.free_rank;  // Z_0 = Z
        else if (m != 1)
            nontrivial.push_back(m);
    }
    if (nontrivial.empty()) return g;
    IntMatrix diag(static_cast<long>(nontrivial.size()), static_cast<long>(nontrivial.size()));
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        diag(static_cast<long>(i), static_cast<long>(i)) = nontrivial[i];
    SmithDecomposition snf = smith_normal_form(diag);
    for (const auto& d : snf.invariant_factors)
        if (d != 1) g.torsion.push_back(d);
    return g;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& o) const {
    std::vector<Int> moduli = torsion;
    moduli.insert(moduli.end(), o.torsion.begin(), o.torsion.end());
    return from_moduli(free_rank + o.free_rank, moduli);
}

FgAbelianGroup cokernel_group(const IntMatrix& a) {
    SmithDecomposition snf = smith_normal_form(a);
    long r = static_cast<long>(snf.invariant_factors.size());
    return FgAbelianGroup::from_moduli(a.rows() - r, snf.invariant_factors);
}

long rank(const IntMatrix& a) {
    return static_cast<long>(smith_normal_form(a).invariant_factors.size());
}

std::vector<IntVector> coset_representatives(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("coset_representatives: matrix not square");
    Int det = determinant(a);
    if (det == 0) throw out_of_regime_error("coset_representatives: singular matrix");
    const long n = a.rows();
    SmithDecomposition snf = smith_normal_form(a.transpose());
    IntMatrix uinv = unimodular_inverse(snf.U);
    // Z^n / A^t Z^n = Z^n / U^{-1} D Z^n; representatives are U^{-1} y with
    // y_i in [0, d_i).
    std::vector<IntVector> reps;
    IntVector y(static_cast<std::size_t>(n));
    std::vector<Int> limits(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) limits[static_cast<std::size_t>(i)] = snf.D(i, i);
    for (;;) {
        reps.push_back(uinv * y);
        long i = 0;
        while (i < n) {
            y[static_cast<std::size_t>(i)] += 1;
            if (y[static_cast<std::size_t>(i)] < limits[static_cast<std::size_t>(i)]) break;
            y[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return reps;
}

}  // namespace toral
