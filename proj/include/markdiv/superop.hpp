// Representations of generators and channels: Lindblad form to d^2 x d^2
// superoperator matrix (column-stacking convention), channel exponentials,
// Choi matrices, CP/TP diagnostics and the generalized Gell-Mann picture.
#pragma once

#include <vector>

#include "markdiv/complex_matrix.hpp"
#include "markdiv/real_matrix.hpp"

namespace markdiv {

struct LindbladGenerator {
    std::size_t dim = 0;
    ComplexMatrix hamiltonian;                 // d x d, self-adjoint within tol
    std::vector<ComplexMatrix> lindbladians;   // each d x d

    static LindbladGenerator dissipative(ComplexMatrix lindbladian);
    void validate(double hermiticity_tol = 1e-10) const;
};

struct Superoperator {
    std::size_t dim = 0;        // Hilbert space dimension d
    ComplexMatrix matrix;       // d^2 x d^2 in the vec basis

    Superoperator() = default;
    Superoperator(std::size_t d, ComplexMatrix m);

    static Superoperator identity(std::size_t d);
};

struct QuantumChannel {
    Superoperator superop;
    double cp_margin = 0.0;     // smallest Choi eigenvalue
    double tp_residual = 0.0;   // ||vec(1)^* S - vec(1)^*||_2

    std::size_t dim() const noexcept { return superop.dim; }
};

struct CptpReport {
    double cp_margin = 0.0;
    double tp_residual = 0.0;
};

// Matrix representation of Eq.-style generator action
//   L(rho) = i[rho, H] + sum_j ( L_j rho L_j^+ - 1/2 {L_j^+ L_j, rho} ).
Superoperator lindblad_superoperator(const LindbladGenerator& gen);

// L^hat + L^hat^+ for a purely dissipative single-Lindbladian generator.
Superoperator symmetrized_generator(const LindbladGenerator& gen);

// L - (tr L / d) * 1; leaves the symmetrized generator invariant.
ComplexMatrix traceless_shift(const ComplexMatrix& lindbladian);

// e^{L^hat} with CP/TP diagnostics attached.
QuantumChannel channel_from_generator(const LindbladGenerator& gen);

// Channel from a superoperator matrix, computing diagnostics.
QuantumChannel make_channel(Superoperator s);

// Superoperator of rho -> sum_e K_e rho K_e^+.
Superoperator kraus_superoperator(std::size_t d, const std::vector<ComplexMatrix>& kraus);

// Unnormalized Choi matrix (trace d for a channel).
ComplexMatrix choi_matrix(const Superoperator& s);

CptpReport is_cptp(const Superoperator& s);

bool passes_cptp(const QuantumChannel& t, double cp_tol = 1e-9, double tp_tol = 1e-9);

// Orthonormal Hermitian basis: 1/sqrt(d) first, then the d-1 diagonal
// traceless elements, then symmetric then antisymmetric off-diagonal ones,
// each pair in row-major (i<j) order.
std::vector<ComplexMatrix> gellmann_basis(std::size_t d);

// Matrix of S in the Gell-Mann basis; real for Hermiticity-preserving maps.
RealMatrix gellmann_representation(const Superoperator& s, double tol = 1e-10);

// Channel whose Gell-Mann representation is diag(diagonal); requires
// diagonal[0] == 1 (trace preservation).
QuantumChannel channel_from_gellmann_diag(std::size_t d, const std::vector<double>& diagonal);

// Sign of det(S) for a Hermiticity-preserving map, from the real Gell-Mann
// representation (the vec-basis determinant carries phase noise).
int channel_det_sign(const Superoperator& s);

} // namespace markdiv
