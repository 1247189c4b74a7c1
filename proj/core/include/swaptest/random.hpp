#pragma once

#include "swaptest/complex_matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace swaptest {

/// Uniform double in [0, 1) built from the top 53 bits of the generator
/// output. Unlike std::uniform_real_distribution this is pinned to the
/// same stream on every platform.
double uniform_double(std::mt19937_64 &rng);

/// Standard normal via Box-Muller on uniform_double.
double gaussian(std::mt19937_64 &rng);

/// Haar-like random normalised state of the given dimension.
std::vector<Complex> random_state(std::size_t dim, std::mt19937_64 &rng);

/// Haar-distributed n x n unitary via Gram-Schmidt on a complex Gaussian
/// matrix.
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64 &rng);

} // namespace swaptest
