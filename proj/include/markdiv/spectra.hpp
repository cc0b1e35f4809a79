// Spectra of Hermitian matrices and singular values, with deterministic
// ascending ordering. The eigensolver is a threshold cyclic Jacobi, which
// keeps near-diagonal inputs cheap and is deterministic for fixed input.
#pragma once

#include <optional>
#include <vector>

#include "markdiv/complex_matrix.hpp"

namespace markdiv {

struct SpectrumAscending {
    std::vector<double> values;  // sorted non-decreasing
    double tolerance_used = 0.0;
};

// Eigenvalues of the Hermitian part (A+A*)/2, ascending with multiplicity.
// Requires ||A - A*||_F <= hermiticity_tol * max(1, ||A||_F).
SpectrumAscending hermitian_eigenvalues_ascending(const ComplexMatrix& a,
                                                  double hermiticity_tol = 1e-10);

// Singular values, ascending, via the Hermitian eigenvalues of A*A
// (tiny negative eigenvalues clamped to zero at 1e-12 * ||A||_F^2).
SpectrumAscending singular_values_ascending(const ComplexMatrix& a);

// Sum of the k largest singular values, 1 <= k <= dim.
double ky_fan_norm(const ComplexMatrix& a, std::size_t k);

// Sum over i of ln s_i(A); -infinity when any singular value is 0 within
// the relative threshold 1e-12 * s_max.
double log_abs_det(const ComplexMatrix& a);
double log_abs_det(const std::vector<double>& singular_values_ascending);

namespace detail {
// In-place Jacobi diagonalization of a Hermitian matrix. On return the
// diagonal of `a` holds the (unsorted) eigenvalues. If `vectors` is given,
// it accumulates the transposed eigenvector matrix (row i = eigenvector of
// the i-th diagonal entry... it holds V^T where A = V diag V*).
void jacobi_hermitian(ComplexMatrix& a, ComplexMatrix* vectors_transposed = nullptr);
} // namespace detail

} // namespace markdiv
