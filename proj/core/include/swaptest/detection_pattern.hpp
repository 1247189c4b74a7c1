#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace swaptest {

/// Photon counts per output mode. A valid pattern for an M-mode
/// interferometer has M entries summing to M: the device is passive and
/// the photon number is conserved.
struct DetectionPattern {
    std::vector<int> counts;

    std::size_t mode_count() const { return counts.size(); }
    int total() const;
    bool is_valid() const; // nonnegative counts summing to mode_count()

    /// D! = d_0! * ... * d_{M-1}!, exact in a double for M <= 12.
    double factorial_product() const;

    std::string to_string() const; // space-separated counts

    bool operator==(const DetectionPattern &other) const = default;
};

/// All compositions of M into M nonnegative parts, first part descending
/// (M,0,...,0) first. Count is C(2M-1, M-1).
std::vector<DetectionPattern> enumerate_patterns(std::size_t m);

inline constexpr std::size_t kEnumeratePatternsMaxModes = 12;

/// C(n, k) in exact integer arithmetic.
unsigned long long binomial(unsigned n, unsigned k);

} // namespace swaptest
