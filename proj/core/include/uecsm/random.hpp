#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "uecsm/matrix.hpp"

namespace uecsm {

/// Per-trial random stream. Streams for distinct (seed, index) pairs are
/// independent of each other and of the order they are drawn in.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);
    RandomStream(std::uint64_t seed, std::uint64_t index);

    /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
    Complex complex_normal();
    double uniform(double lo, double hi);
    /// e^{i theta}, theta uniform on [0, 2 pi).
    Complex unimodular();

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 0.7071067811865476};
};

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

[[nodiscard]] ComplexMatrix sample_ginibre(std::size_t n, RandomStream& rng);

/// exp((G - G*)/2) for Ginibre G.
[[nodiscard]] ComplexMatrix sample_unitary(std::size_t n, RandomStream& rng);

/// U P with P the projection onto the first `rank` coordinates. Throws
/// RankOutOfRange.
[[nodiscard]] ComplexMatrix sample_partial_isometry(std::size_t n, std::size_t rank,
                                                    RandomStream& rng);

/// V* (G + G^t) V for Ginibre G and sampled unitary V: UECSM by construction.
[[nodiscard]] ComplexMatrix sample_uecsm(std::size_t n, RandomStream& rng);

}  // namespace uecsm
