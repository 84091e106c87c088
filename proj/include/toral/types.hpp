#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace toral {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an operation is asked about inputs outside the regime it is
// defined for (singular matrix where a local homeomorphism is required,
// |degree| < 2 for the power-map conjugacy, non-transitive algebras in the
// comparator, ...). The CLI turns this into exit code 2.
struct out_of_regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
    }
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(long n);
    static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(long i, long j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Int& operator()(long i, long j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    IntMatrix transpose() const;
    Int trace() const;
    bool is_zero() const;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& s) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const = default;

    void swap_rows(long a, long b);
    void swap_cols(long a, long b);

    std::string str() const;

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<Int> data_;
};

using IntVector = std::vector<Int>;

IntVector operator*(const IntMatrix& m, const IntVector& v);
bool is_zero(const IntVector& v);
std::string vector_str(const IntVector& v);

}  // namespace toral
