#include "markdiv/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "markdiv/kernels.hpp"

namespace markdiv {

namespace detail {

namespace {

double offdiag_norm_sq(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return s;
}

} // namespace

void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* vectors_transposed) {
    a.require_square("jacobi_hermitian");
    const std::size_t n = a.rows();
    if (n < 2) return;

    if (vectors_transposed) *vectors_transposed = ComplexMatrix::identity(n);

    const double scale = std::max(1e-300, a.frobenius_norm());
    const double conv_tol_sq = std::pow(5e-15 * scale, 2);
    constexpr int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off_sq = offdiag_norm_sq(a);
        if (off_sq <= conv_tol_sq) return;

        // Rotation threshold: generous for early sweeps, then everything
        // above roundoff. Exact zeros are always skipped, which makes
        // sweeps over sparse matrices cheap.
        const double thresh =
            sweep < 3 ? 0.1 * std::sqrt(off_sq / static_cast<double>(n * n)) : 0.0;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx beta = a(p, q);
                const double r = std::abs(beta);
                const double alpha = a(p, p).real();
                const double gamma = a(q, q).real();
                if (r <= thresh) continue;
                if (r <= 1e-18 * (std::abs(alpha) + std::abs(gamma)) || r < 1e-300) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }

                const double tau = (gamma - alpha) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cx sigma = (t * c / r) * beta;

                // A <- R* A R with R = [[c, sigma], [-conj(sigma), c]] acting
                // on rows/cols p,q. Row update, then mirror columns through
                // hermiticity, then set the 2x2 block in closed form.
                kernels::zrot(n, &a(p, 0), &a(q, 0), c, -sigma);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    a(i, p) = std::conj(a(p, i));
                    a(i, q) = std::conj(a(q, i));
                }
                a(p, p) = alpha - t * r;
                a(q, q) = gamma + t * r;
                a(p, q) = a(q, p) = 0.0;

                if (vectors_transposed) {
                    kernels::zrot(n, &(*vectors_transposed)(p, 0), &(*vectors_transposed)(q, 0),
                                  c, -std::conj(sigma));
                }
            }
        }
    }
    if (offdiag_norm_sq(a) > std::pow(1e-10 * scale, 2))
        fail(errc::numerical_failure, "Jacobi eigensolver did not converge");
}

} // namespace detail

SpectrumAscending hermitian_eigenvalues_ascending(const ComplexMatrix& a, double hermiticity_tol) {
    a.require_square("hermitian_eigenvalues_ascending");
    const double defect = hermiticity_defect(a);
    if (defect > hermiticity_tol * std::max(1.0, a.frobenius_norm()))
        fail(errc::not_hermitian, "hermiticity defect " + std::to_string(defect));

    const std::size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

    detail::jacobi_hermitian(h);

    SpectrumAscending out;
    out.tolerance_used = hermiticity_tol;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = h(i, i).real();
    std::sort(out.values.begin(), out.values.end());
    return out;
}

SpectrumAscending singular_values_ascending(const ComplexMatrix& a) {
    a.require_square("singular_values_ascending");
    const std::size_t n = a.rows();
    ComplexMatrix gram = a.adjoint() * a;
    detail::jacobi_hermitian(gram);

    const double clamp = 1e-12 * a.frobenius_norm_sq();
    SpectrumAscending out;
    out.tolerance_used = clamp;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lambda = gram(i, i).real();
        if (lambda < 0.0) lambda = 0.0;
        out.values[i] = std::sqrt(lambda);
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

double ky_fan_norm(const ComplexMatrix& a, std::size_t k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        fail(errc::k_out_of_range, "ky_fan_norm k=" + std::to_string(k));
    const auto sv = singular_values_ascending(a);
    double s = 0.0;
    for (std::size_t i = sv.values.size() - k; i < sv.values.size(); ++i) s += sv.values[i];
    return s;
}

double log_abs_det(const std::vector<double>& sv_ascending) {
    if (sv_ascending.empty()) return 0.0;
    const double s_max = sv_ascending.back();
    const double zero_tol = 1e-12 * s_max;
    if (s_max == 0.0 || sv_ascending.front() < zero_tol)
        return -std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (double v : sv_ascending) s += std::log(v);
    return s;
}

double log_abs_det(const ComplexMatrix& a) {
    a.require_square("log_abs_det");
    return log_abs_det(singular_values_ascending(a).values);
}

} // namespace markdiv
