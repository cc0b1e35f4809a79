// Seed-controlled sampling (xoshiro256++ core, splitmix64 stream derivation).
// Hand-rolled generators keep outputs identical across standard libraries.
#pragma once

#include <cstdint>
#include <vector>

#include "markdiv/complex_matrix.hpp"

namespace markdiv {

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    // Independent stream derived from this generator's seed and an index;
    // restart batches use substream(i) so results merge deterministically.
    Rng substream(std::uint64_t index) const;

    std::uint64_t next_u64();
    double uniform();             // [0, 1)
    double uniform_open();        // (0, 1)
    double normal();              // N(0, 1)
    cx complex_normal();          // standard complex Gaussian, E|z|^2 = 1

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_ = 0;
    std::uint64_t s_[4] = {};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

// i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols);

// Haar-ish random unitary: QR of a Ginibre matrix with positive R diagonal.
ComplexMatrix random_unitary(Rng& rng, std::size_t d);

ComplexMatrix random_hermitian(Rng& rng, std::size_t d);

// Flat Dirichlet sample (normalized exponentials).
std::vector<double> dirichlet_flat(Rng& rng, std::size_t d);

} // namespace markdiv
