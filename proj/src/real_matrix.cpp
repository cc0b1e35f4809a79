#include "markdiv/real_matrix.hpp"

#include <cmath>

#include "markdiv/kernels.hpp"

namespace markdiv {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        fail(errc::dimension_mismatch, "entry count does not match rows*cols");
    for (double v : data_)
        if (!std::isfinite(v)) fail(errc::dimension_mismatch, "non-finite matrix entry");
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix RealMatrix::to_complex() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "RealMatrix operator*");
    RealMatrix out(a.rows(), b.cols());
    kernels::dgemm_acc(a.rows(), b.cols(), a.cols(), a.data(), a.cols(), b.data(), b.cols(),
                       out.data(), out.cols());
    return out;
}

int det_sign(const RealMatrix& a) {
    if (!a.is_square()) fail(errc::non_square, "det_sign");
    RealMatrix lu = a;
    const std::size_t n = lu.rows();
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            sign = -sign;
        }
        if (lu(k, k) < 0.0) sign = -sign;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return sign;
}

} // namespace markdiv
