#include "markdiv/complex_matrix.hpp"

#include <cmath>
#include <cstring>

#include "markdiv/kernels.hpp"

namespace markdiv {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        fail(errc::dimension_mismatch, "entry count does not match rows*cols");
    validate_finite();
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(errc::dimension_mismatch, "ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    validate_finite();
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > n) fail(errc::dimension_mismatch, "unit index out of range");
    ComplexMatrix m(n, n);
    m(i - 1, j - 1) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cx>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    m.validate_finite();
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(errc::dimension_mismatch, "operator+= shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(errc::dimension_mismatch, "operator-= shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cx scalar) {
    kernels::zscal(data_.size(), scalar, data_.data());
    return *this;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix t(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) t.data_[i] = std::conj(data_[i]);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

cx ComplexMatrix::trace() const {
    require_square("trace");
    cx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm_sq() const {
    return kernels::norm_sq(data_.size(), data_.data());
}

double ComplexMatrix::frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

double ComplexMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        if (s > best) best = s;
    }
    return best;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const cx& z : data_) best = std::max(best, std::abs(z));
    return best;
}

void ComplexMatrix::validate_finite() const {
    for (const cx& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(errc::dimension_mismatch, "non-finite matrix entry");
    }
}

void ComplexMatrix::require_square(const char* where) const {
    if (!is_square()) fail(errc::non_square, where);
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) fail(errc::dimension_mismatch, "operator* shape mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    kernels::zgemm_acc(lhs.rows(), rhs.cols(), lhs.cols(),
                       lhs.data(), lhs.cols(), rhs.data(), rhs.cols(),
                       out.data(), out.cols());
    return out;
}

ComplexMatrix operator*(cx scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, cx scalar) { return m *= scalar; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cx aij = a(i, j);
            if (aij == cx(0.0, 0.0)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    }
    return out;
}

ComplexMatrix vec(const ComplexMatrix& a) {
    ComplexMatrix v(a.rows() * a.cols(), 1);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) v(idx++, 0) = a(i, j);
    return v;
}

ComplexMatrix unvec(const ComplexMatrix& v, std::size_t d) {
    if (v.cols() != 1 || v.rows() != d * d)
        fail(errc::length_not_square, "unvec expects a d*d column vector");
    ComplexMatrix a(d, d);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) a(i, j) = v(idx++, 0);
    return a;
}

double distance_frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(errc::dimension_mismatch, "distance_frobenius shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& a) {
    a.require_square("hermiticity_defect");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

} // namespace markdiv
