// Data-parallel inner loops on dense complex/real arrays.
//
// Every routine has a scalar reference implementation and an AVX2+FMA
// variant; the active variant is chosen once at startup from cpuid and can
// be overridden with MARKDIV_KERNELS=scalar|avx2 or force_backend() (used
// by the cross-backend equivalence tests). All matrices are row-major.
#pragma once

#include <complex>
#include <cstddef>

namespace markdiv::kernels {

using cx = std::complex<double>;

enum class Backend { scalar, avx2 };

Backend active() noexcept;
bool avx2_supported() noexcept;
// Throws if the requested backend is not supported on this machine.
void force_backend(Backend b);
const char* backend_name(Backend b) noexcept;

// C += A * B, complex, row-major; C is m x n, A is m x k, B is k x n.
void zgemm_acc(std::size_t m, std::size_t n, std::size_t k,
               const cx* a, std::size_t lda,
               const cx* b, std::size_t ldb,
               cx* c, std::size_t ldc);

// C += A * B, real double.
void dgemm_acc(std::size_t m, std::size_t n, std::size_t k,
               const double* a, std::size_t lda,
               const double* b, std::size_t ldb,
               double* c, std::size_t ldc);

// y += alpha * x
void zaxpy(std::size_t n, cx alpha, const cx* x, cx* y);

// x *= alpha
void zscal(std::size_t n, cx alpha, cx* x);

// sum of |x_i|^2
double norm_sq(std::size_t n, const cx* x);

// Plane rotation on two row vectors (c real, s complex):
//   x' =  c*x + s*y
//   y' = -conj(s)*x + c*y
void zrot(std::size_t n, cx* x, cx* y, double c, cx s);

namespace detail {
// Scalar reference versions, exposed for the equivalence tests.
void zgemm_acc_scalar(std::size_t m, std::size_t n, std::size_t k,
                      const cx* a, std::size_t lda, const cx* b, std::size_t ldb,
                      cx* c, std::size_t ldc);
void dgemm_acc_scalar(std::size_t m, std::size_t n, std::size_t k,
                      const double* a, std::size_t lda, const double* b, std::size_t ldb,
                      double* c, std::size_t ldc);
void zaxpy_scalar(std::size_t n, cx alpha, const cx* x, cx* y);
void zscal_scalar(std::size_t n, cx alpha, cx* x);
double norm_sq_scalar(std::size_t n, const cx* x);
void zrot_scalar(std::size_t n, cx* x, cx* y, double c, cx s);

void zgemm_acc_avx2(std::size_t m, std::size_t n, std::size_t k,
                    const cx* a, std::size_t lda, const cx* b, std::size_t ldb,
                    cx* c, std::size_t ldc);
void dgemm_acc_avx2(std::size_t m, std::size_t n, std::size_t k,
                    const double* a, std::size_t lda, const double* b, std::size_t ldb,
                    double* c, std::size_t ldc);
void zaxpy_avx2(std::size_t n, cx alpha, const cx* x, cx* y);
void zscal_avx2(std::size_t n, cx alpha, cx* x);
double norm_sq_avx2(std::size_t n, const cx* x);
void zrot_avx2(std::size_t n, cx* x, cx* y, double c, cx s);
} // namespace detail

} // namespace markdiv::kernels
