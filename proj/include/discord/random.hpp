#pragma once

// Seeded sampling shared by the state generators and the optimizer restarts.
//
// Seed splitting: child k of root seed s is splitmix64(s + (k + 1) * 0x9E3779B97F4A7C15).
// Every random object is drawn from a std::mt19937_64 seeded with its own
// child seed, so results do not depend on evaluation order.

#include <cstdint>
#include <random>

#include "discord/linalg.hpp"

namespace discord {

std::uint64_t splitmix64(std::uint64_t z) noexcept;
std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) noexcept;

using Rng = std::mt19937_64;

/// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts N(0, 1/2)).
CMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian with the phases of
/// diag(R) moved into Q.
CMatrix haar_unitary(int dim, Rng& rng);

}  // namespace discord
