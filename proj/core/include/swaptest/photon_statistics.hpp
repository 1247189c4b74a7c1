#pragma once

#include "swaptest/complex_matrix.hpp"
#include "swaptest/detection_pattern.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace swaptest {

/// The single physical parameter of the test: c = |<phi|psi>|^2. Photon
/// internal states enter the statistics only through this overlap.
struct OverlapSpec {
    double c = 1.0;

    explicit OverlapSpec(double overlap);

    /// Derives c from two normalised state vectors of equal dimension.
    static OverlapSpec from_states(const std::vector<Complex> &phi,
                                   const std::vector<Complex> &psi, double tol = 1e-9);
};

Complex inner_product(const std::vector<Complex> &a, const std::vector<Complex> &b);
double norm_squared(const std::vector<Complex> &v);

/// Pr_i(D) = |Per(U_D)|^2 / D! with U_D the column-repeated submatrix.
/// Statistics of M indistinguishable photons, one per input mode.
double prob_indistinguishable(const ComplexMatrix &u, const DetectionPattern &d);

/// Pr_d(D) = (1/D!) sum_{k, d_k != 0} d_k |u_{0k} Per(U_{0,D-1_k})|^2.
/// The photon in input mode 0 is fully distinguishable from the rest and
/// routes independently.
double prob_distinguishable(const ComplexMatrix &u, const DetectionPattern &d);

/// Pr(D) = Pr_d(D) + c (Pr_i(D) - Pr_d(D)): linear interpolation in the
/// squared overlap between the two extreme cases.
double prob_mixture(const ComplexMatrix &u, const DetectionPattern &d, const OverlapSpec &o);

/// Exact per-pattern table of (Pr_i, Pr_d, Pr) over all detection patterns,
/// in enumeration order. Each probability column sums to 1.
struct PatternDistribution {
    struct Entry {
        DetectionPattern pattern;
        double prob_i = 0.0;
        double prob_d = 0.0;
        double prob_mixed = 0.0;
    };

    std::vector<Entry> entries;

    double sum_prob_i() const;
    double sum_prob_d() const;
    double sum_prob_mixed() const;
};

/// Builds the full table. Patterns are evaluated in parallel chunks when
/// the support is large; results are identical to the sequential order.
PatternDistribution compute_distribution(const ComplexMatrix &u, const OverlapSpec &o);

/// Rounding noise may leave probabilities slightly negative; raw values are
/// kept for slack checks and clamped only when reporting.
double clamp_probability(double p);

/// Checks Pr_d(D) >= Pr_i(D)/M for every pattern, records the patterns
/// achieving equality, and spot-checks the mixture lower bound
/// Pr(D) >= (1/M + (M-1)/M c) Pr_i(D) on a grid of overlaps.
struct BoundCheck {
    DetectionPattern pattern;
    double prob_i = 0.0;
    double prob_d = 0.0;
    double slack = 0.0; // Pr_d - Pr_i / M
};

struct BoundReport {
    std::size_t modes = 0;
    double tolerance = 0.0;
    std::vector<BoundCheck> violations;        // slack < -tolerance
    std::vector<BoundCheck> equality_patterns; // |slack| <= tolerance
    double min_slack = 0.0;
    std::vector<double> mixture_overlaps_checked;
    std::size_t mixture_violations = 0;

    bool passed() const { return violations.empty() && mixture_violations == 0; }
};

BoundReport verify_bound(const ComplexMatrix &u, double tol = 1e-10);

/// Same checks over an already-computed distribution (prob_i/prob_d are
/// overlap-independent, so any distribution of the same unitary works).
BoundReport verify_bound(const PatternDistribution &dist, double tol = 1e-10);

inline constexpr std::size_t kVerifyBoundMaxModes = 10;
inline constexpr std::size_t kSampleMaxModes = 10;

/// Seeded i.i.d. draws from the exact mixture distribution via inverse CDF
/// over the enumeration order. shots = 0 yields an empty list.
std::vector<DetectionPattern> sample(const ComplexMatrix &u, const OverlapSpec &o,
                                     std::size_t shots, std::uint64_t seed);

} // namespace swaptest
