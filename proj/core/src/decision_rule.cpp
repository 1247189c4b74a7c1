#include "swaptest/decision_rule.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace swaptest {

namespace {

constexpr double kRuleUnitaryMatchTol = 1e-9;

std::vector<int> table_row(const RootOfUnityMatrix &t, std::size_t i) {
    std::vector<int> row(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) {
        row[j] = t.exponent(i, j);
    }
    return row;
}

void require_pattern(const DecisionRule &rule, const DetectionPattern &d) {
    if (d.mode_count() != rule.size()) {
        throw std::invalid_argument("decision rule: pattern length must equal interferometer size");
    }
    if (!d.is_valid()) {
        throw std::invalid_argument("decision rule: pattern must be nonnegative and sum to M");
    }
}

void require_matching_unitary(const DecisionRule &rule, const ComplexMatrix &u) {
    if (u.rows() != rule.size() || u.cols() != rule.size() ||
        max_entry_distance(u, rule.unitary()) > kRuleUnitaryMatchTol) {
        throw std::invalid_argument(
            "decision rule: unitary does not match the rule's exponent table / sqrt(M)");
    }
}

} // namespace

DecisionRule DecisionRule::for_group(const GroupSpec &g) {
    return DecisionRule(g, group_unitary(g), generator_rows(g));
}

DecisionRule::DecisionRule(GroupSpec group, RootOfUnityMatrix table,
                           std::vector<std::size_t> generators)
    : group_(std::move(group)), table_(std::move(table)), generators_(std::move(generators)) {
    const std::size_t m = table_.rows();
    if (table_.cols() != m || group_.order() != m) {
        throw std::invalid_argument("DecisionRule: table must be square of the group order");
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (table_.exponent(0, j) != 0) {
            throw std::invalid_argument("DecisionRule: row 0 must be the identity row");
        }
    }
    for (std::size_t g : generators_) {
        if (g >= m) {
            throw std::invalid_argument("DecisionRule: generator row index out of range");
        }
    }

    // Generate the subgroup spanned by the generator rows (element-wise
    // multiplication = exponent addition mod order). Requiring the result
    // to be exactly the set of table rows verifies both closure and that
    // the generators reach every row.
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t i = 0; i < m; ++i) {
        if (!row_index.emplace(table_row(table_, i), i).second) {
            throw std::invalid_argument("DecisionRule: table rows must be distinct");
        }
    }
    const int order = table_.order();
    std::vector<std::vector<int>> frontier = {table_row(table_, 0)};
    std::map<std::vector<int>, bool> generated;
    generated[frontier.front()] = true;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &row : frontier) {
            for (std::size_t g : generators_) {
                std::vector<int> prod(m);
                for (std::size_t j = 0; j < m; ++j) {
                    prod[j] = (row[j] + table_.exponent(g, j)) % order;
                }
                if (row_index.find(prod) == row_index.end()) {
                    throw std::invalid_argument(
                        "DecisionRule: rows are not closed under element-wise multiplication");
                }
                if (!generated[prod]) {
                    generated[prod] = true;
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    std::size_t reached = 0;
    for (const auto &[row, flag] : generated) {
        if (flag) {
            ++reached;
        }
    }
    if (reached != m) {
        throw std::invalid_argument("DecisionRule: generators do not generate all rows");
    }
}

ComplexMatrix DecisionRule::unitary() const {
    ComplexMatrix u = table_.to_complex();
    const double scale = 1.0 / std::sqrt(static_cast<double>(size()));
    ComplexMatrix out(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i) {
        for (std::size_t j = 0; j < u.cols(); ++j) {
            out(i, j) = scale * u(i, j);
        }
    }
    return out;
}

DecisionRule DecisionRule::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != size()) {
        throw std::invalid_argument("DecisionRule::permuted: permutation length mismatch");
    }
    std::vector<bool> seen(size(), false);
    for (std::size_t j : perm) {
        if (j >= size() || seen[j]) {
            throw std::invalid_argument("DecisionRule::permuted: not a permutation");
        }
        seen[j] = true;
    }
    RootOfUnityMatrix t(size(), size(), table_.order());
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            t.set_exponent(i, j, table_.exponent(i, perm[j]));
        }
    }
    return DecisionRule(group_, std::move(t), generators_);
}

int pi_value(const DecisionRule &rule, const DetectionPattern &d) {
    require_pattern(rule, d);
    const RootOfUnityMatrix &t = rule.exponent_table();
    const int order = t.order();
    const std::size_t m = rule.size();
    // The congruence map i -> sum_j d_j e_ij mod order is a homomorphism on
    // the row group, so the character sum is M when it vanishes everywhere
    // and 0 otherwise.
    for (std::size_t i = 0; i < m; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < m; ++j) {
            s += static_cast<long long>(d.counts[j]) * t.exponent(i, j);
        }
        if (s % order != 0) {
            return 0;
        }
    }
    return static_cast<int>(m);
}

int accept(const DecisionRule &rule, const DetectionPattern &d) {
    require_pattern(rule, d);
    const RootOfUnityMatrix &t = rule.exponent_table();
    const int order = t.order();
    for (std::size_t g : rule.generators()) {
        long long s = 0;
        for (std::size_t j = 0; j < rule.size(); ++j) {
            s += static_cast<long long>(d.counts[j]) * t.exponent(g, j);
        }
        if (s % order != 0) {
            return 1;
        }
    }
    return 0;
}

double acceptance_probability(const DecisionRule &rule, const ComplexMatrix &u,
                              const OverlapSpec &o) {
    require_matching_unitary(rule, u);
    return acceptance_probability(rule, compute_distribution(u, o), o);
}

double acceptance_probability(const DecisionRule &rule, const OverlapSpec &o) {
    return acceptance_probability(rule, rule.unitary(), o);
}

double acceptance_probability(const DecisionRule &rule, const PatternDistribution &dist,
                              const OverlapSpec &o) {
    double total = 0.0;
    for (const auto &e : dist.entries) {
        if (accept(rule, e.pattern) == 0) {
            total += e.prob_d + o.c * (e.prob_i - e.prob_d);
        }
    }
    return total;
}

EquivalenceReport equivalence_report(const DecisionRule &rule, const ComplexMatrix &u,
                                     double zero_tol, double equality_tol) {
    require_matching_unitary(rule, u);
    if (rule.size() > kEquivalenceMaxModes) {
        throw std::invalid_argument("equivalence_report: size exceeds supported maximum");
    }
    return equivalence_report(rule, compute_distribution(u, OverlapSpec(1.0)), zero_tol,
                              equality_tol);
}

EquivalenceReport equivalence_report(const DecisionRule &rule, const PatternDistribution &dist,
                                     double zero_tol, double equality_tol) {
    EquivalenceReport report;
    report.modes = rule.size();
    report.zero_tolerance = zero_tol;
    report.equality_tolerance = equality_tol;
    report.strict_positivity_enforced = rule.exponent_table().order() <= 2;

    const double m = static_cast<double>(rule.size());
    for (const auto &e : dist.entries) {
        ++report.patterns_checked;
        const int pi = pi_value(rule, e.pattern);
        const double slack = e.prob_d - e.prob_i / m;
        bool ok = true;
        if (pi == static_cast<int>(rule.size())) {
            ++report.accepted_patterns;
            // pi = M forces the saturated bound Pr_d = Pr_i / M.
            ok = std::abs(slack) <= equality_tol;
            report.max_equality_slack = std::max(report.max_equality_slack, std::abs(slack));
            if (e.prob_i <= zero_tol) {
                ++report.vanishing_accepted;
                ok = ok && !report.strict_positivity_enforced;
            }
        } else {
            // pi = 0 forces Pr_i = 0.
            ok = e.prob_i <= zero_tol;
            if (e.prob_d <= zero_tol) {
                ++report.vanishing_rejected_prob_d;
                ok = ok && !report.strict_positivity_enforced;
            }
        }
        if (!ok) {
            report.counterexamples.push_back(
                {e.pattern, pi, e.prob_i, e.prob_d, slack});
        }
    }
    return report;
}

} // namespace swaptest
