#include "markdiv/orthonormal.hpp"

#include <cmath>

namespace markdiv {

ComplexMatrix orthonormal_columns(const ComplexMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n) fail(errc::dimension_mismatch, "orthonormal_columns needs rows >= cols");

    ComplexMatrix q = a;
    for (std::size_t j = 0; j < n; ++j) {
        // Two MGS passes against previous columns.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cx proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < m; ++i) q(i, j) -= proj * q(i, k);
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm_sq += std::norm(q(i, j));
        const double norm = std::sqrt(norm_sq);
        if (norm < 1e-300) fail(errc::numerical_failure, "orthonormal_columns: rank deficient input");
        // R_jj is this norm, real and positive, so the map is deterministic.
        for (std::size_t i = 0; i < m; ++i) q(i, j) /= norm;
    }
    return q;
}

} // namespace markdiv
