#include "uecsm/random.hpp"

#include <numbers>

#include "uecsm/errors.hpp"
#include "uecsm/linalg.hpp"

namespace uecsm {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(splitmix64(seed) ^ index)) {}

Complex RandomStream::complex_normal() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re, im};
}

double RandomStream::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Complex RandomStream::unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

ComplexMatrix sample_ginibre(std::size_t n, RandomStream& rng) {
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    return g;
}

ComplexMatrix sample_unitary(std::size_t n, RandomStream& rng) {
    const ComplexMatrix g = sample_ginibre(n, rng);
    ComplexMatrix s = 0.5 * (g - adjoint(g));
    return expm_skew_hermitian(s);
}

ComplexMatrix sample_partial_isometry(std::size_t n, std::size_t rank, RandomStream& rng) {
    if (rank > n) {
        throw Error(ErrorCode::RankOutOfRange,
                    "rank " + std::to_string(rank) + " exceeds n = " + std::to_string(n));
    }
    ComplexMatrix up = sample_unitary(n, rng);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = rank; j < n; ++j) up(i, j) = 0.0;
    return up;
}

ComplexMatrix sample_uecsm(std::size_t n, RandomStream& rng) {
    const ComplexMatrix g = sample_ginibre(n, rng);
    const ComplexMatrix sym = g + transpose(g);
    const ComplexMatrix v = sample_unitary(n, rng);
    return adjoint(v) * sym * v;
}

}  // namespace uecsm
