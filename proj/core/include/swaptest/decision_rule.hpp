#pragma once

#include "swaptest/complex_matrix.hpp"
#include "swaptest/detection_pattern.hpp"
#include "swaptest/interferometer.hpp"
#include "swaptest/photon_statistics.hpp"

#include <cstddef>
#include <vector>

namespace swaptest {

/// Classical post-processing rule for a group interferometer. Holds the
/// unnormalised exponent table F_G (entries are roots of unity, stored as
/// integer exponents) and a generating set of rows; the accept test reduces
/// to N congruences over the exponent order, so the {0, M} dichotomy of
/// pi(D) is decided with no floating point at all.
class DecisionRule {
  public:
    /// Canonical rule for a group: table = group_unitary(g), generators =
    /// generator_rows(g).
    static DecisionRule for_group(const GroupSpec &g);

    /// Rule over an explicit table. Validates that row 0 is the identity
    /// row (all exponents zero), that rows are closed under element-wise
    /// multiplication, and that the generators reach every row.
    DecisionRule(GroupSpec group, RootOfUnityMatrix table, std::vector<std::size_t> generators);

    const GroupSpec &group() const { return group_; }
    const RootOfUnityMatrix &exponent_table() const { return table_; }
    const std::vector<std::size_t> &generators() const { return generators_; }
    std::size_t size() const { return table_.rows(); }

    /// Complex unitary table/sqrt(M) driving the photon statistics.
    ComplexMatrix unitary() const;

    /// Same rule with interferometer output modes relabelled: column j of
    /// the new table is column perm[j] of the old one.
    DecisionRule permuted(std::span<const std::size_t> perm) const;

  private:
    GroupSpec group_;
    RootOfUnityMatrix table_;
    std::vector<std::size_t> generators_;
};

/// pi(D) = sum_i prod_j (s_ij)^{d_j}, evaluated exactly: row i contributes
/// the root of unity with exponent sum_j d_j e_ij mod order, and the group
/// structure collapses the sum to M (every row lands on exponent 0) or 0.
int pi_value(const DecisionRule &rule, const DetectionPattern &d);

/// Binary outcome: 0 ("states identical", pi(D) = M) iff the generator-row
/// congruences sum_j d_j e_gj = 0 mod order all hold; 1 otherwise.
/// O(M * N) integer work.
int accept(const DecisionRule &rule, const DetectionPattern &d);

/// Sum of mixture probabilities over accepted patterns. Equals
/// 1/M + (M-1)/M * c for every group rule. The unitary must match the
/// rule's exponent table divided by sqrt(M).
double acceptance_probability(const DecisionRule &rule, const ComplexMatrix &u,
                              const OverlapSpec &o);
double acceptance_probability(const DecisionRule &rule, const OverlapSpec &o);

/// Same sum over an already-computed distribution of the rule's unitary,
/// remixed at the requested overlap.
double acceptance_probability(const DecisionRule &rule, const PatternDistribution &dist,
                              const OverlapSpec &o);

/// Pattern-by-pattern verification of the equivalence chain
/// pi(D) != 0 <=> pi(D) = M <=> Pr_i(D) != 0 <=> Pr_d(D) = Pr_i(D)/M.
///
/// The implications pi = 0 => Pr_i = 0 and pi = M => Pr_d = Pr_i/M hold for
/// every group rule and are enforced unconditionally. The converse
/// directions additionally need the sub-permanents to be nonvanishing,
/// which is a theorem for +-1 tables (order <= 2) but can genuinely fail
/// otherwise: the order-6 QFT already has patterns, e.g. (1,1,1,1,1,1),
/// whose sub-permanents are exactly zero. For order > 2 those patterns are
/// only counted, not flagged.
struct EquivalenceCounterexample {
    DetectionPattern pattern;
    int pi = 0;
    double prob_i = 0.0;
    double prob_d = 0.0;
    double equality_slack = 0.0; // Pr_d - Pr_i / M
};

struct EquivalenceReport {
    std::size_t modes = 0;
    std::size_t patterns_checked = 0;
    std::size_t accepted_patterns = 0;
    double zero_tolerance = 0.0;
    double equality_tolerance = 0.0;
    bool strict_positivity_enforced = false; // true for +-1 tables
    std::vector<EquivalenceCounterexample> counterexamples;
    double max_equality_slack = 0.0;          // over accepted patterns
    std::size_t vanishing_accepted = 0;       // pi = M with Pr_i ~ 0
    std::size_t vanishing_rejected_prob_d = 0; // pi = 0 with Pr_d ~ 0

    bool passed() const { return counterexamples.empty(); }
};

EquivalenceReport equivalence_report(const DecisionRule &rule, const ComplexMatrix &u,
                                     double zero_tol = 1e-12, double equality_tol = 1e-10);

/// Same report over an already-computed distribution of the rule's unitary.
EquivalenceReport equivalence_report(const DecisionRule &rule, const PatternDistribution &dist,
                                     double zero_tol = 1e-12, double equality_tol = 1e-10);

inline constexpr std::size_t kEquivalenceMaxModes = 10;

} // namespace swaptest
