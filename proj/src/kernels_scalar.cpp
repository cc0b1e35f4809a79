// Scalar reference kernels. These define the semantics the SIMD variants
// must reproduce (up to FMA rounding differences).
#include "markdiv/kernels.hpp"

namespace markdiv::kernels::detail {

void zgemm_acc_scalar(std::size_t m, std::size_t n, std::size_t k,
                      const cx* a, std::size_t lda, const cx* b, std::size_t ldb,
                      cx* c, std::size_t ldc) {
    for (std::size_t i = 0; i < m; ++i) {
        cx* ci = c + i * ldc;
        const cx* ai = a + i * lda;
        for (std::size_t l = 0; l < k; ++l) {
            const cx ail = ai[l];
            if (ail == cx(0.0, 0.0)) continue;
            const cx* bl = b + l * ldb;
            for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
        }
    }
}

void dgemm_acc_scalar(std::size_t m, std::size_t n, std::size_t k,
                      const double* a, std::size_t lda, const double* b, std::size_t ldb,
                      double* c, std::size_t ldc) {
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * ldc;
        const double* ai = a + i * lda;
        for (std::size_t l = 0; l < k; ++l) {
            const double ail = ai[l];
            if (ail == 0.0) continue;
            const double* bl = b + l * ldb;
            for (std::size_t j = 0; j < n; ++j) ci[j] += ail * bl[j];
        }
    }
}

void zaxpy_scalar(std::size_t n, cx alpha, const cx* x, cx* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void zscal_scalar(std::size_t n, cx alpha, cx* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double norm_sq_scalar(std::size_t n, const cx* x) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void zrot_scalar(std::size_t n, cx* x, cx* y, double c, cx s) {
    const cx sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const cx xi = x[i], yi = y[i];
        x[i] = c * xi + s * yi;
        y[i] = c * yi - sc * xi;
    }
}

} // namespace markdiv::kernels::detail
