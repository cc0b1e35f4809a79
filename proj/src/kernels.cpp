// Runtime backend selection: cpuid probe, MARKDIV_KERNELS override.
#include "markdiv/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace markdiv::kernels {

bool avx2_supported() noexcept {
#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Backend detect() {
    if (const char* env = std::getenv("MARKDIV_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::avx2;
    }
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& state() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

} // namespace

Backend active() noexcept { return state().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported())
        throw std::runtime_error("AVX2 backend requested but not supported on this CPU");
    state().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) noexcept {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void zgemm_acc(std::size_t m, std::size_t n, std::size_t k,
               const cx* a, std::size_t lda, const cx* b, std::size_t ldb,
               cx* c, std::size_t ldc) {
    if (active() == Backend::avx2)
        detail::zgemm_acc_avx2(m, n, k, a, lda, b, ldb, c, ldc);
    else
        detail::zgemm_acc_scalar(m, n, k, a, lda, b, ldb, c, ldc);
}

void dgemm_acc(std::size_t m, std::size_t n, std::size_t k,
               const double* a, std::size_t lda, const double* b, std::size_t ldb,
               double* c, std::size_t ldc) {
    if (active() == Backend::avx2)
        detail::dgemm_acc_avx2(m, n, k, a, lda, b, ldb, c, ldc);
    else
        detail::dgemm_acc_scalar(m, n, k, a, lda, b, ldb, c, ldc);
}

void zaxpy(std::size_t n, cx alpha, const cx* x, cx* y) {
    if (active() == Backend::avx2)
        detail::zaxpy_avx2(n, alpha, x, y);
    else
        detail::zaxpy_scalar(n, alpha, x, y);
}

void zscal(std::size_t n, cx alpha, cx* x) {
    if (active() == Backend::avx2)
        detail::zscal_avx2(n, alpha, x);
    else
        detail::zscal_scalar(n, alpha, x);
}

double norm_sq(std::size_t n, const cx* x) {
    return active() == Backend::avx2 ? detail::norm_sq_avx2(n, x)
                                     : detail::norm_sq_scalar(n, x);
}

void zrot(std::size_t n, cx* x, cx* y, double c, cx s) {
    if (active() == Backend::avx2)
        detail::zrot_avx2(n, x, y, c, s);
    else
        detail::zrot_scalar(n, x, y, c, s);
}

} // namespace markdiv::kernels
