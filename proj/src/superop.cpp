#include "markdiv/superop.hpp"

#include <cmath>

#include "markdiv/expm.hpp"
#include "markdiv/kernels.hpp"
#include "markdiv/spectra.hpp"

namespace markdiv {

LindbladGenerator LindbladGenerator::dissipative(ComplexMatrix lindbladian) {
    lindbladian.require_square("LindbladGenerator::dissipative");
    LindbladGenerator gen;
    gen.dim = lindbladian.rows();
    gen.hamiltonian = ComplexMatrix::zero(gen.dim, gen.dim);
    gen.lindbladians.push_back(std::move(lindbladian));
    return gen;
}

void LindbladGenerator::validate(double hermiticity_tol) const {
    if (dim == 0) fail(errc::dimension_mismatch, "LindbladGenerator: dim 0");
    if (hamiltonian.rows() != dim || hamiltonian.cols() != dim)
        fail(errc::dimension_mismatch, "LindbladGenerator: hamiltonian shape");
    const double h_norm = hamiltonian.frobenius_norm();
    if (hermiticity_defect(hamiltonian) > hermiticity_tol * std::max(1.0, h_norm))
        fail(errc::not_hermitian, "LindbladGenerator: hamiltonian not self-adjoint");
    for (const auto& l : lindbladians)
        if (l.rows() != dim || l.cols() != dim)
            fail(errc::dimension_mismatch, "LindbladGenerator: lindbladian shape");
}

Superoperator::Superoperator(std::size_t d, ComplexMatrix m) : dim(d), matrix(std::move(m)) {
    if (matrix.rows() != d * d || matrix.cols() != d * d)
        fail(errc::dimension_mismatch, "Superoperator: matrix must be d^2 x d^2");
}

Superoperator Superoperator::identity(std::size_t d) {
    return Superoperator(d, ComplexMatrix::identity(d * d));
}

Superoperator lindblad_superoperator(const LindbladGenerator& gen) {
    gen.validate();
    const std::size_t d = gen.dim;
    const ComplexMatrix eye = ComplexMatrix::identity(d);

    // i (H^T x 1 - 1 x H)
    ComplexMatrix m = kron(gen.hamiltonian.transpose(), eye) - kron(eye, gen.hamiltonian);
    m *= cx(0.0, 1.0);

    for (const auto& l : gen.lindbladians) {
        const ComplexMatrix ldl = l.adjoint() * l;
        m += kron(l.conjugate(), l);
        m -= cx(0.5, 0.0) * kron(eye, ldl);
        m -= cx(0.5, 0.0) * kron(ldl.conjugate(), eye);
    }
    return Superoperator(d, std::move(m));
}

Superoperator symmetrized_generator(const LindbladGenerator& gen) {
    gen.validate();
    if (gen.lindbladians.size() != 1)
        fail(errc::precondition_violation, "symmetrized_generator needs exactly one Lindbladian");
    if (gen.hamiltonian.max_abs() != 0.0)
        fail(errc::precondition_violation, "symmetrized_generator needs H = 0");

    const Superoperator s = lindblad_superoperator(gen);
    ComplexMatrix sym = s.matrix + s.matrix.adjoint();
    return Superoperator(gen.dim, std::move(sym));
}

ComplexMatrix traceless_shift(const ComplexMatrix& lindbladian) {
    lindbladian.require_square("traceless_shift");
    const std::size_t d = lindbladian.rows();
    const cx shift = lindbladian.trace() / static_cast<double>(d);
    ComplexMatrix out = lindbladian;
    for (std::size_t i = 0; i < d; ++i) out(i, i) -= shift;
    return out;
}

ComplexMatrix choi_matrix(const Superoperator& s) {
    const std::size_t d = s.dim;
    ComplexMatrix tau(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e)
                    tau(a * d + b, c * d + e) = s.matrix(c * d + a, e * d + b);
    return tau;
}

CptpReport is_cptp(const Superoperator& s) {
    const std::size_t n = s.dim * s.dim;
    CptpReport rep;

    ComplexMatrix tau = choi_matrix(s);
    ComplexMatrix herm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) herm(i, j) = 0.5 * (tau(i, j) + std::conj(tau(j, i)));
    detail::jacobi_hermitian(herm);
    double lambda_min = herm(0, 0).real();
    for (std::size_t i = 1; i < n; ++i) lambda_min = std::min(lambda_min, herm(i, i).real());
    rep.cp_margin = lambda_min;

    // vec(1)^* S - vec(1)^*, by rows of S restricted to vec(1)'s support.
    const std::size_t d = s.dim;
    double residual_sq = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        cx acc = 0.0;
        for (std::size_t i = 0; i < d; ++i) acc += s.matrix(i * d + i, col);
        const cx target = (col % (d + 1) == 0) ? cx(1.0, 0.0) : cx(0.0, 0.0);
        residual_sq += std::norm(acc - target);
    }
    rep.tp_residual = std::sqrt(residual_sq);
    return rep;
}

QuantumChannel make_channel(Superoperator s) {
    const CptpReport rep = is_cptp(s);
    QuantumChannel t;
    t.superop = std::move(s);
    t.cp_margin = rep.cp_margin;
    t.tp_residual = rep.tp_residual;
    return t;
}

QuantumChannel channel_from_generator(const LindbladGenerator& gen) {
    const Superoperator lhat = lindblad_superoperator(gen);
    return make_channel(Superoperator(gen.dim, matrix_exp(lhat.matrix)));
}

Superoperator kraus_superoperator(std::size_t d, const std::vector<ComplexMatrix>& kraus) {
    ComplexMatrix m(d * d, d * d);
    for (const auto& k : kraus) {
        if (k.rows() != d || k.cols() != d)
            fail(errc::dimension_mismatch, "kraus_superoperator operator shape");
        m += kron(k.conjugate(), k);
    }
    return Superoperator(d, std::move(m));
}

bool passes_cptp(const QuantumChannel& t, double cp_tol, double tp_tol) {
    return t.cp_margin >= -cp_tol && t.tp_residual <= tp_tol;
}

std::vector<ComplexMatrix> gellmann_basis(std::size_t d) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(d * d);

    ComplexMatrix unit = ComplexMatrix::identity(d);
    unit *= cx(1.0 / std::sqrt(static_cast<double>(d)), 0.0);
    basis.push_back(std::move(unit));

    for (std::size_t k = 1; k < d; ++k) {
        ComplexMatrix diag(d, d);
        const double norm = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
        for (std::size_t i = 0; i < k; ++i) diag(i, i) = norm;
        diag(k, k) = -static_cast<double>(k) * norm;
        basis.push_back(std::move(diag));
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix sym(d, d);
            sym(i, j) = inv_sqrt2;
            sym(j, i) = inv_sqrt2;
            basis.push_back(std::move(sym));
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix anti(d, d);
            anti(i, j) = cx(0.0, -inv_sqrt2);
            anti(j, i) = cx(0.0, inv_sqrt2);
            basis.push_back(std::move(anti));
        }
    }
    return basis;
}

namespace {

// Columns are vec(B_a); unitary because the basis is orthonormal.
ComplexMatrix gellmann_vec_columns(std::size_t d) {
    const auto basis = gellmann_basis(d);
    ComplexMatrix p(d * d, d * d);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const ComplexMatrix v = vec(basis[a]);
        for (std::size_t i = 0; i < d * d; ++i) p(i, a) = v(i, 0);
    }
    return p;
}

} // namespace

RealMatrix gellmann_representation(const Superoperator& s, double tol) {
    const std::size_t n = s.dim * s.dim;
    const ComplexMatrix p = gellmann_vec_columns(s.dim);
    const ComplexMatrix m = p.adjoint() * (s.matrix * p);

    double imag_sq = 0.0;
    RealMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = m(i, j).real();
            imag_sq += m(i, j).imag() * m(i, j).imag();
        }
    }
    if (std::sqrt(imag_sq) > tol * std::max(1.0, s.matrix.frobenius_norm()))
        fail(errc::not_hermiticity_preserving,
             "imaginary residual " + std::to_string(std::sqrt(imag_sq)));
    return out;
}

QuantumChannel channel_from_gellmann_diag(std::size_t d, const std::vector<double>& diagonal) {
    if (diagonal.size() != d * d)
        fail(errc::dimension_mismatch, "channel_from_gellmann_diag needs d^2 entries");
    if (std::abs(diagonal[0] - 1.0) > 1e-12)
        fail(errc::trace_not_preserved, "leading Gell-Mann diagonal entry must be 1");

    const ComplexMatrix p = gellmann_vec_columns(d);
    ComplexMatrix scaled = p;  // columns scaled by the diagonal
    for (std::size_t a = 0; a < d * d; ++a)
        for (std::size_t i = 0; i < d * d; ++i) scaled(i, a) *= diagonal[a];
    return make_channel(Superoperator(d, scaled * p.adjoint()));
}

int channel_det_sign(const Superoperator& s) {
    return det_sign(gellmann_representation(s));
}

} // namespace markdiv
