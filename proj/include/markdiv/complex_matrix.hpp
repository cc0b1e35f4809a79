// Dense complex matrix, the universal carrier for channels, generators and
// superoperators. Row-major storage, value semantics, finite entries only.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "markdiv/errors.hpp"

namespace markdiv {

using cx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    // Matrix unit E_{ij} (1-based indices), 1 in position (i, j).
    static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static ComplexMatrix diagonal(const std::vector<cx>& d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    cx* data() noexcept { return data_.data(); }
    const cx* data() const noexcept { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cx scalar);

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    cx trace() const;
    double frobenius_norm() const;
    double frobenius_norm_sq() const;
    // Maximum absolute column sum.
    double one_norm() const;
    double max_abs() const;

    // Throws unless all entries are finite.
    void validate_finite() const;
    void require_square(const char* where) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cx scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cx scalar);

// Kronecker product, dim = (rowsA*rowsB) x (colsA*colsB).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Column-stacking vectorization: vec(A) stacks the columns of A.
ComplexMatrix vec(const ComplexMatrix& a);
// Inverse of vec for square targets; v must have d*d entries.
ComplexMatrix unvec(const ComplexMatrix& v, std::size_t d);

double distance_frobenius(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermitian deviation ||A - A*||_F.
double hermiticity_defect(const ComplexMatrix& a);

} // namespace markdiv
