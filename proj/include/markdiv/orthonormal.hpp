// Thin QR orthonormalization (modified Gram-Schmidt, reorthogonalized once),
// with the R diagonal kept real positive so the map is deterministic.
#pragma once

#include "markdiv/complex_matrix.hpp"

namespace markdiv {

// Returns Q (same shape as a, rows >= cols) with orthonormal columns and
// Q R = a for upper-triangular R with positive diagonal. Requires full
// column rank.
ComplexMatrix orthonormal_columns(const ComplexMatrix& a);

} // namespace markdiv
