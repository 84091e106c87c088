#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toral/linalg.hpp"
#include "toral/polynomial.hpp"
#include "toral/types.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <vector>

using namespace toral;

namespace {

std::mt19937 rng(20260826);

IntMatrix random_matrix(long n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix a(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a(i, j) = Int(d(rng));
    return a;
}

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Determinant of the submatrix of `a` picking `rows` x `cols`.
Int minor_det(const IntMatrix& a, const std::vector<long>& rows,
              const std::vector<long>& cols) {
    long k = static_cast<long>(rows.size());
    IntMatrix sub(k, k);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            sub(i, j) = a(rows[static_cast<std::size_t>(i)],
                          cols[static_cast<std::size_t>(j)]);
    return determinant(sub);
}

void subsets(long n, long k, long start, std::vector<long>& cur,
             std::vector<std::vector<long>>& out) {
    if (static_cast<long>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (long i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// gcd of all k x k minors (0 when all vanish).
Int minor_gcd(const IntMatrix& a, long k) {
    std::vector<std::vector<long>> idx;
    std::vector<long> cur;
    subsets(a.rows(), k, 0, cur, idx);
    Int g = 0;
    for (const auto& r : idx)
        for (const auto& c : idx) g = gcd_int(g, minor_det(a, r, c));
    return g < 0 ? Int(-g) : g;
}

}  // namespace

TEST_CASE("smith normal form identities on random matrices") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = 1 + trial % 4;
        IntMatrix a = random_matrix(n, 6);
        SmithDecomposition s = smith_normal_form(a);

        CHECK(s.U * a * s.V == s.D);
        Int du = determinant(s.U), dv = determinant(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));

        // Diagonal, nonnegative, divisibility chain.
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }

        // Product of invariant factors = |det| for square matrices.
        Int prod = 1;
        for (const Int& d : s.invariant_factors) prod *= d;
        Int det = determinant(a);
        if (det != 0) CHECK(prod == boost::multiprecision::abs(det));
    }
}

TEST_CASE("invariant factors match the minor-gcd oracle (n <= 4)") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = 1 + trial % 4;
        IntMatrix a = random_matrix(n, 6);
        SmithDecomposition s = smith_normal_form(a);
        Int prefix = 1;  // d_1 * ... * d_k = gcd of k x k minors
        for (long k = 1; k <= static_cast<long>(s.invariant_factors.size()); ++k) {
            prefix *= s.invariant_factors[static_cast<std::size_t>(k - 1)];
            CHECK(prefix == minor_gcd(a, k));
        }
        if (static_cast<long>(s.invariant_factors.size()) < n)
            CHECK(minor_gcd(a, static_cast<long>(s.invariant_factors.size()) + 1) == 0);
    }
}

TEST_CASE("Cayley-Hamilton: char_poly(A)(A) = 0") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = 1 + trial % 4;
        IntMatrix a = random_matrix(n, 6);
        IntPolynomial p = char_poly(a);
        IntMatrix acc = IntMatrix::zero(n, n);
        IntMatrix power = IntMatrix::identity(n);
        for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
            acc = acc + power * p.coefficients()[i];
            power = power * a;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cofactor and adjugate identities") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = 2 + trial % 3;
        IntMatrix a = random_matrix(n, 6);
        Int det = determinant(a);
        IntMatrix cof = cofactor_matrix(a);
        CHECK(a.transpose() * cof == IntMatrix::identity(n) * det);
        CHECK(a * adjugate(a) == IntMatrix::identity(n) * det);

        // cof is multiplicative: cof(AB) = cof(A) * cof(B).
        IntMatrix b = random_matrix(n, 6);
        CHECK(cofactor_matrix(a * b) == cofactor_matrix(a) * cofactor_matrix(b));
    }
}

TEST_CASE("kernel lattice: basis vectors annihilate, count matches rank") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = 2 + trial % 3;
        // Force plenty of singular cases: product with a rank-deficient factor.
        IntMatrix a = random_matrix(n, 3);
        if (trial % 2 == 0) {
            IntMatrix s = random_matrix(n, 2);
            for (long j = 0; j < n; ++j) s(n - 1, j) = s(0, j);  // repeated row
            a = s * a;
        }
        auto basis = kernel_lattice(a);
        for (const IntVector& v : basis) {
            CHECK_FALSE(is_zero(v));
            CHECK(is_zero(a * v));
        }
        CHECK(static_cast<long>(basis.size()) == a.cols() - rank(a));
    }
}

TEST_CASE("cokernel group of a nonsingular matrix has order |det|") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = 1 + trial % 3;
        IntMatrix a = random_matrix(n, 5);
        Int det = determinant(a);
        if (det == 0) continue;
        FgAbelianGroup g = cokernel_group(a);
        CHECK(g.free_rank == 0);
        CHECK(g.torsion_order() == boost::multiprecision::abs(det));
    }
}

TEST_CASE("coset representatives of Z^n / A^t Z^n") {
    for (int trial = 0; trial < 60; ++trial) {
        long n = 1 + trial % 3;
        IntMatrix a = random_matrix(n, 3);
        Int det = determinant(a);
        if (det == 0) continue;
        auto reps = coset_representatives(a);
        CHECK(static_cast<Int>(reps.size()) == boost::multiprecision::abs(det));

        // Pairwise incongruent mod A^t Z^n: x is in A^t Z^n iff
        // adj(A^t) * x = 0 mod det.
        IntMatrix adj = n == 1 ? IntMatrix::identity(1) : adjugate(a.transpose());
        Int d = boost::multiprecision::abs(det);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                IntVector diff(reps[i].size());
                for (std::size_t k = 0; k < diff.size(); ++k)
                    diff[k] = reps[i][k] - reps[j][k];
                IntVector img = adj * diff;
                bool congruent = true;
                for (const Int& x : img) congruent = congruent && (x % d == 0);
                CHECK_FALSE(congruent);
            }
    }
}

TEST_CASE("canonical group arithmetic") {
    CHECK(FgAbelianGroup::from_moduli(0, {Int(4), Int(6)}) ==
          FgAbelianGroup::from_moduli(0, {Int(2), Int(12)}));
    CHECK(FgAbelianGroup::from_moduli(1, {Int(1)}) == FgAbelianGroup::free(1));
    CHECK(FgAbelianGroup::cyclic(Int(6)).str() == "Z_6");
    CHECK(FgAbelianGroup{}.is_trivial());
}
