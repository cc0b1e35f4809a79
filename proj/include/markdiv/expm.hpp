// Matrix exponential (scaling and squaring with diagonal Pade approximants)
// and the Lie-Trotter product (e^{G1/n} e^{G2/n})^n.
#pragma once

#include "markdiv/complex_matrix.hpp"

namespace markdiv {

ComplexMatrix matrix_exp(const ComplexMatrix& a);

ComplexMatrix trotter_product(const ComplexMatrix& g1, const ComplexMatrix& g2, unsigned n);

// Solves A X = B with partial-pivot LU; A square, B same row count.
ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b);

} // namespace markdiv
