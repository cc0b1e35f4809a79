#include "markdiv/rng.hpp"

#include <cmath>

#include "markdiv/orthonormal.hpp"

namespace markdiv {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
}

Rng Rng::substream(std::uint64_t index) const {
    std::uint64_t sm = seed_ ^ (0xd1b54a32d192ed03ull * (index + 1));
    return Rng(splitmix64(sm));
}

std::uint64_t Rng::next_u64() {
    // xoshiro256++
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    return u;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(angle);
    has_cached_normal_ = true;
    return r * std::cos(angle);
}

cx Rng::complex_normal() {
    const double inv_sqrt2 = 0.70710678118654752440;
    const double re = normal();
    const double im = normal();
    return cx(re * inv_sqrt2, im * inv_sqrt2);
}

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t d) {
    return orthonormal_columns(ginibre(rng, d, d));
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t d) {
    ComplexMatrix g = ginibre(rng, d, d);
    ComplexMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

std::vector<double> dirichlet_flat(Rng& rng, std::size_t d) {
    std::vector<double> w(d);
    double total = 0.0;
    for (auto& v : w) {
        v = -std::log(rng.uniform_open());
        total += v;
    }
    for (auto& v : w) v /= total;
    return w;
}

} // namespace markdiv
