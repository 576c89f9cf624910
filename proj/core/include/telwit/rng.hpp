#pragma once

#include <cstdint>
#include <random>

#include "telwit/qmat.hpp"

namespace telwit {

using Rng = std::mt19937_64;

/// Deterministic sub-seed for task `index` of a run seeded with `master`
/// (splitmix64 finalizer over both words). Used for restarts, grid points and
/// sampled test states so results never depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Matrix of i.i.d. standard complex Gaussians: real and imaginary parts
/// each N(0, 1/2).
ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

}  // namespace telwit
