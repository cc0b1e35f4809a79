#include "markdiv/expm.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "markdiv/kernels.hpp"

namespace markdiv {

namespace {

// Diagonal Pade coefficients and ||A||_1 thresholds (Higham 2005).
constexpr std::array<double, 4> kB3 = {120, 60, 12, 1};
constexpr std::array<double, 6> kB5 = {30240, 15120, 3360, 420, 30, 1};
constexpr std::array<double, 8> kB7 = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
constexpr std::array<double, 10> kB9 = {17643225600., 8821612800., 2075673600., 302702400.,
                                        30270240., 2162160., 110880., 3960., 90., 1.};
constexpr std::array<double, 14> kB13 = {64764752532480000., 32382376266240000.,
                                         7771770303897600., 1187353796428800.,
                                         129060195264000., 10559470521600., 670442572800.,
                                         33522128640., 1323241920., 40840800., 960960.,
                                         16380., 182., 1.};
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068;
constexpr double kTheta13 = 5.371920351148152;

ComplexMatrix scaled_sum(const std::vector<const ComplexMatrix*>& terms,
                         const std::vector<double>& coeffs, std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t t = 0; t < terms.size(); ++t)
        kernels::zaxpy(n * n, coeffs[t], terms[t]->data(), out.data());
    return out;
}

// U (odd part, already multiplied by A) and V (even part) for order <= 9.
template <std::size_t N>
void pade_uv_small(const ComplexMatrix& a, const std::array<double, N>& b,
                   ComplexMatrix& u, ComplexMatrix& v) {
    const std::size_t n = a.rows();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    std::vector<ComplexMatrix> even;  // I, A^2, A^4, ...
    even.push_back(eye);
    ComplexMatrix a2 = a * a;
    even.push_back(a2);
    for (std::size_t p = 2; 2 * p + 1 < N; ++p) even.push_back(even.back() * a2);

    std::vector<const ComplexMatrix*> uterms, vterms;
    std::vector<double> ucoef, vcoef;
    for (std::size_t p = 0; p < even.size(); ++p) {
        ucoef.push_back(b[2 * p + 1]);
        uterms.push_back(&even[p]);
        vcoef.push_back(b[2 * p]);
        vterms.push_back(&even[p]);
    }
    u = a * scaled_sum(uterms, ucoef, n);
    v = scaled_sum(vterms, vcoef, n);
}

void pade_uv_13(const ComplexMatrix& a, ComplexMatrix& u, ComplexMatrix& v) {
    const std::size_t n = a.rows();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a2 * a4;
    const auto& b = kB13;

    ComplexMatrix w1 = scaled_sum({&a6, &a4, &a2}, {b[13], b[11], b[9]}, n);
    ComplexMatrix w2 = scaled_sum({&a6, &a4, &a2, &eye}, {b[7], b[5], b[3], b[1]}, n);
    u = a * (a6 * w1 + w2);

    ComplexMatrix z1 = scaled_sum({&a6, &a4, &a2}, {b[12], b[10], b[8]}, n);
    ComplexMatrix z2 = scaled_sum({&a6, &a4, &a2, &eye}, {b[6], b[4], b[2], b[0]}, n);
    v = a6 * z1 + z2;
}

} // namespace

ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b) {
    a.require_square("lu_solve");
    const std::size_t n = a.rows();
    if (b.rows() != n) fail(errc::dimension_mismatch, "lu_solve rhs rows");
    const std::size_t m = b.cols();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) fail(errc::numerical_failure, "lu_solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        const cx pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cx f = a(i, k) / pivot;
            if (f == cx(0.0, 0.0)) continue;
            a(i, k) = 0.0;
            kernels::zaxpy(n - k - 1, -f, &a(k, k + 1), &a(i, k + 1));
            kernels::zaxpy(m, -f, &b(k, 0), &b(i, 0));
        }
    }
    // Back substitution on U.
    for (std::size_t kk = n; kk-- > 0;) {
        const cx inv = cx(1.0, 0.0) / a(kk, kk);
        kernels::zscal(m, inv, &b(kk, 0));
        for (std::size_t i = 0; i < kk; ++i) {
            const cx f = a(i, kk);
            if (f == cx(0.0, 0.0)) continue;
            kernels::zaxpy(m, -f, &b(kk, 0), &b(i, 0));
        }
    }
    return b;
}

ComplexMatrix matrix_exp(const ComplexMatrix& a_in) {
    a_in.require_square("matrix_exp");
    const std::size_t n = a_in.rows();
    if (n == 0) return a_in;

    ComplexMatrix a = a_in;
    const double eta = a.one_norm();
    int squarings = 0;

    ComplexMatrix u, v;
    if (eta <= kTheta3) {
        pade_uv_small(a, kB3, u, v);
    } else if (eta <= kTheta5) {
        pade_uv_small(a, kB5, u, v);
    } else if (eta <= kTheta7) {
        pade_uv_small(a, kB7, u, v);
    } else if (eta <= kTheta9) {
        pade_uv_small(a, kB9, u, v);
    } else {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(eta / kTheta13))));
        if (squarings > 0) a *= cx(std::ldexp(1.0, -squarings), 0.0);
        pade_uv_13(a, u, v);
    }

    ComplexMatrix r = lu_solve(v - u, v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

ComplexMatrix trotter_product(const ComplexMatrix& g1, const ComplexMatrix& g2, unsigned n) {
    g1.require_square("trotter_product");
    if (g1.rows() != g2.rows() || g2.rows() != g2.cols())
        fail(errc::dimension_mismatch, "trotter_product dims");
    if (n == 0) fail(errc::dimension_mismatch, "trotter_product needs n >= 1");

    const double inv = 1.0 / static_cast<double>(n);
    const ComplexMatrix step = matrix_exp(inv * g1) * matrix_exp(inv * g2);

    // step^n by binary powering; deterministic multiplication order.
    ComplexMatrix result = ComplexMatrix::identity(g1.rows());
    ComplexMatrix base = step;
    unsigned e = n;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

} // namespace markdiv
