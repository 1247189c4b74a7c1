#pragma once

#include "swaptest/complex_matrix.hpp"

namespace swaptest {

/// Reference permanent: explicit sum over all permutations. Oracle-scale
/// only (dimension <= 10).
Complex permanent_naive(const ComplexMatrix &m);

/// Ryser's formula with Gray-code subset enumeration, O(2^n * n).
/// Matches permanent_naive to 1e-10 relative on the overlapping domain.
Complex permanent_ryser(const ComplexMatrix &m);

inline constexpr std::size_t kPermanentNaiveMaxDim = 10;
inline constexpr std::size_t kPermanentRyserMaxDim = 30;

} // namespace swaptest
