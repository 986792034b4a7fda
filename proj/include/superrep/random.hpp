#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace superrep {

using Rng = std::mt19937_64;

/// Seed for worker `worker` of a run seeded with `seed` (splitmix64 mix, so
/// adjacent workers get well-separated streams).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t worker);

/// Haar-random unitary: QR of a complex Ginibre matrix with the R diagonal
/// phases folded into Q.
Eigen::MatrixXcd haar_unitary(int dim, Rng& rng);

/// Haar-random pure state: normalized complex Gaussian vector.
Eigen::VectorXcd haar_state(int dim, Rng& rng);

}  // namespace superrep
