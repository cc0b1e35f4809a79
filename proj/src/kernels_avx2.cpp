// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma (see CMakeLists);
// falls back to the scalar reference when the target does not support AVX2.
//
// Complex layout is interleaved [re, im], two complex doubles per __m256d.
// A complex product z*b is formed as re(z)*b + [-im(z), +im(z)]*swap(b),
// where swap exchanges re/im within each 128-bit lane.
#include "markdiv/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace markdiv::kernels::detail {

namespace {

const __m256d kSignAlt = _mm256_setr_pd(-0.0, 0.0, -0.0, 0.0);

inline __m256d swap_halves(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// Accumulates a[0..k) * B-row-panel into one 4-complex wide C tile row.
struct CxBroadcast {
    __m256d re, im_alt;
    explicit CxBroadcast(const cx& z) {
        re = _mm256_set1_pd(z.real());
        im_alt = _mm256_xor_pd(_mm256_set1_pd(z.imag()), kSignAlt);
    }
};

inline __m256d cx_fmadd(const CxBroadcast& z, __m256d b, __m256d acc) {
    acc = _mm256_fmadd_pd(z.re, b, acc);
    return _mm256_fmadd_pd(z.im_alt, swap_halves(b), acc);
}

} // namespace

void zgemm_acc_avx2(std::size_t m, std::size_t n, std::size_t k,
                    const cx* a, std::size_t lda, const cx* b, std::size_t ldb,
                    cx* c, std::size_t ldc) {
    constexpr std::size_t MR = 4;  // rows per tile
    constexpr std::size_t NR = 4;  // complex columns per tile (2 vectors)
    constexpr std::size_t KC = 256;
    constexpr std::size_t NC = 128;

    const std::size_t n_simd = n - n % NR;
    const std::size_t m_tiles = m - m % MR;

    for (std::size_t jc = 0; jc < n_simd; jc += NC) {
        const std::size_t jend = std::min(jc + NC, n_simd);
        for (std::size_t lc = 0; lc < k; lc += KC) {
            const std::size_t lend = std::min(lc + KC, k);
            for (std::size_t i = 0; i < m_tiles; i += MR) {
                for (std::size_t j = jc; j < jend; j += NR) {
                    double* cr0 = reinterpret_cast<double*>(c + (i + 0) * ldc + j);
                    double* cr1 = reinterpret_cast<double*>(c + (i + 1) * ldc + j);
                    double* cr2 = reinterpret_cast<double*>(c + (i + 2) * ldc + j);
                    double* cr3 = reinterpret_cast<double*>(c + (i + 3) * ldc + j);
                    __m256d acc00 = _mm256_loadu_pd(cr0), acc01 = _mm256_loadu_pd(cr0 + 4);
                    __m256d acc10 = _mm256_loadu_pd(cr1), acc11 = _mm256_loadu_pd(cr1 + 4);
                    __m256d acc20 = _mm256_loadu_pd(cr2), acc21 = _mm256_loadu_pd(cr2 + 4);
                    __m256d acc30 = _mm256_loadu_pd(cr3), acc31 = _mm256_loadu_pd(cr3 + 4);
                    for (std::size_t l = lc; l < lend; ++l) {
                        const double* bl = reinterpret_cast<const double*>(b + l * ldb + j);
                        const __m256d b0 = _mm256_loadu_pd(bl);
                        const __m256d b1 = _mm256_loadu_pd(bl + 4);
                        const cx a0 = a[(i + 0) * lda + l];
                        const cx a1 = a[(i + 1) * lda + l];
                        const cx a2 = a[(i + 2) * lda + l];
                        const cx a3 = a[(i + 3) * lda + l];
                        // Zero-skip keeps structured (near-diagonal) inputs cheap,
                        // and matches the scalar reference exactly.
                        if (a0 != cx(0.0, 0.0)) {
                            const CxBroadcast z(a0);
                            acc00 = cx_fmadd(z, b0, acc00);
                            acc01 = cx_fmadd(z, b1, acc01);
                        }
                        if (a1 != cx(0.0, 0.0)) {
                            const CxBroadcast z(a1);
                            acc10 = cx_fmadd(z, b0, acc10);
                            acc11 = cx_fmadd(z, b1, acc11);
                        }
                        if (a2 != cx(0.0, 0.0)) {
                            const CxBroadcast z(a2);
                            acc20 = cx_fmadd(z, b0, acc20);
                            acc21 = cx_fmadd(z, b1, acc21);
                        }
                        if (a3 != cx(0.0, 0.0)) {
                            const CxBroadcast z(a3);
                            acc30 = cx_fmadd(z, b0, acc30);
                            acc31 = cx_fmadd(z, b1, acc31);
                        }
                    }
                    _mm256_storeu_pd(cr0, acc00); _mm256_storeu_pd(cr0 + 4, acc01);
                    _mm256_storeu_pd(cr1, acc10); _mm256_storeu_pd(cr1 + 4, acc11);
                    _mm256_storeu_pd(cr2, acc20); _mm256_storeu_pd(cr2 + 4, acc21);
                    _mm256_storeu_pd(cr3, acc30); _mm256_storeu_pd(cr3 + 4, acc31);
                }
            }
            // Leftover rows for this (jc, lc) block.
            for (std::size_t i = m_tiles; i < m; ++i) {
                for (std::size_t l = lc; l < lend; ++l) {
                    const cx ail = a[i * lda + l];
                    if (ail == cx(0.0, 0.0)) continue;
                    const CxBroadcast z(ail);
                    const double* bl = reinterpret_cast<const double*>(b + l * ldb + jc);
                    double* ci = reinterpret_cast<double*>(c + i * ldc + jc);
                    for (std::size_t j = jc; j < jend; j += 2, bl += 4, ci += 4) {
                        _mm256_storeu_pd(ci, cx_fmadd(z, _mm256_loadu_pd(bl), _mm256_loadu_pd(ci)));
                    }
                }
            }
        }
    }
    // Column tail, scalar.
    if (n_simd < n) {
        for (std::size_t i = 0; i < m; ++i) {
            cx* ci = c + i * ldc;
            const cx* ai = a + i * lda;
            for (std::size_t l = 0; l < k; ++l) {
                const cx ail = ai[l];
                if (ail == cx(0.0, 0.0)) continue;
                const cx* bl = b + l * ldb;
                for (std::size_t j = n_simd; j < n; ++j) ci[j] += ail * bl[j];
            }
        }
    }
}

void dgemm_acc_avx2(std::size_t m, std::size_t n, std::size_t k,
                    const double* a, std::size_t lda, const double* b, std::size_t ldb,
                    double* c, std::size_t ldc) {
    constexpr std::size_t NR = 8;  // doubles per tile (2 vectors)
    const std::size_t n_simd = n - n % NR;
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * ldc;
        const double* ai = a + i * lda;
        for (std::size_t l = 0; l < k; ++l) {
            const double ail = ai[l];
            if (ail == 0.0) continue;
            const __m256d va = _mm256_set1_pd(ail);
            const double* bl = b + l * ldb;
            for (std::size_t j = 0; j < n_simd; j += NR) {
                __m256d c0 = _mm256_loadu_pd(ci + j);
                __m256d c1 = _mm256_loadu_pd(ci + j + 4);
                c0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(bl + j), c0);
                c1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(bl + j + 4), c1);
                _mm256_storeu_pd(ci + j, c0);
                _mm256_storeu_pd(ci + j + 4, c1);
            }
            for (std::size_t j = n_simd; j < n; ++j) ci[j] += ail * bl[j];
        }
    }
}

void zaxpy_avx2(std::size_t n, cx alpha, const cx* x, cx* y) {
    const CxBroadcast z(alpha);
    const std::size_t n2 = n - n % 2;
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n2; i += 2, xp += 4, yp += 4) {
        _mm256_storeu_pd(yp, cx_fmadd(z, _mm256_loadu_pd(xp), _mm256_loadu_pd(yp)));
    }
    if (n2 < n) y[n - 1] += alpha * x[n - 1];
}

void zscal_avx2(std::size_t n, cx alpha, cx* x) {
    const CxBroadcast z(alpha);
    const std::size_t n2 = n - n % 2;
    double* xp = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < n2; i += 2, xp += 4) {
        _mm256_storeu_pd(xp, cx_fmadd(z, _mm256_loadu_pd(xp), _mm256_setzero_pd()));
    }
    if (n2 < n) x[n - 1] *= alpha;
}

double norm_sq_avx2(std::size_t n, const cx* x) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n2 = n - n % 2;
    const double* xp = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < n2; i += 2, xp += 4) {
        const __m256d v = _mm256_loadu_pd(xp);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
    if (n2 < n) s += std::norm(x[n - 1]);
    return s;
}

void zrot_avx2(std::size_t n, cx* x, cx* y, double c, cx s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vsr = _mm256_set1_pd(s.real());
    const __m256d vsi_alt = _mm256_xor_pd(_mm256_set1_pd(s.imag()), kSignAlt);
    const std::size_t n2 = n - n % 2;
    double* xp = reinterpret_cast<double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n2; i += 2, xp += 4, yp += 4) {
        const __m256d vx = _mm256_loadu_pd(xp);
        const __m256d vy = _mm256_loadu_pd(yp);
        // x' = c*x + s*y ; y' = c*y - conj(s)*x
        __m256d nx = _mm256_mul_pd(vc, vx);
        nx = _mm256_fmadd_pd(vsr, vy, nx);
        nx = _mm256_fmadd_pd(vsi_alt, swap_halves(vy), nx);
        __m256d ny = _mm256_mul_pd(vc, vy);
        ny = _mm256_fnmadd_pd(vsr, vx, ny);
        ny = _mm256_fmadd_pd(vsi_alt, swap_halves(vx), ny);
        _mm256_storeu_pd(xp, nx);
        _mm256_storeu_pd(yp, ny);
    }
    if (n2 < n) {
        const cx xi = x[n - 1], yi = y[n - 1];
        x[n - 1] = c * xi + s * yi;
        y[n - 1] = c * yi - std::conj(s) * xi;
    }
}

} // namespace markdiv::kernels::detail

#else // !(__AVX2__ && __FMA__)

namespace markdiv::kernels::detail {

void zgemm_acc_avx2(std::size_t m, std::size_t n, std::size_t k,
                    const cx* a, std::size_t lda, const cx* b, std::size_t ldb,
                    cx* c, std::size_t ldc) {
    zgemm_acc_scalar(m, n, k, a, lda, b, ldb, c, ldc);
}
void dgemm_acc_avx2(std::size_t m, std::size_t n, std::size_t k,
                    const double* a, std::size_t lda, const double* b, std::size_t ldb,
                    double* c, std::size_t ldc) {
    dgemm_acc_scalar(m, n, k, a, lda, b, ldb, c, ldc);
}
void zaxpy_avx2(std::size_t n, cx alpha, const cx* x, cx* y) { zaxpy_scalar(n, alpha, x, y); }
void zscal_avx2(std::size_t n, cx alpha, cx* x) { zscal_scalar(n, alpha, x); }
double norm_sq_avx2(std::size_t n, const cx* x) { return norm_sq_scalar(n, x); }
void zrot_avx2(std::size_t n, cx* x, cx* y, double c, cx s) { zrot_scalar(n, x, y, c, s); }

} // namespace markdiv::kernels::detail

#endif
