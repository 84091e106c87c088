#include "toral/types.hpp"

#include <sstream>

namespace toral {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = static_cast<long>(rows.size());
    if (rows_ == 0) throw std::invalid_argument("IntMatrix: empty initializer");
    cols_ = static_cast<long>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_ * cols_));
    for (const auto& r : rows) {
        if (static_cast<long>(r.size()) != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (const auto& x : r) data_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Int IntMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix not square");
    Int s = 0;
    for (long i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (long j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(const Int& s) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
    return r;
}

IntMatrix IntMatrix::operator-() const { return (*this) * Int(-1); }

void IntMatrix::swap_rows(long a, long b) {
    if (a == b) return;
    for (long j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(long a, long b) {
    if (a == b) return;
    for (long i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
    if (m.cols() != static_cast<long>(v.size()))
        throw std::invalid_argument("matrix/vector shape mismatch");
    IntVector r(static_cast<std::size_t>(m.rows()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::string vector_str(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace toral
