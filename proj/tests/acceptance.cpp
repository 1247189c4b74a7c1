// Acceptance suite: runs the project's ten exit criteria end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include "swaptest/beam_splitter.hpp"
#include "swaptest/decision_rule.hpp"
#include "swaptest/interferometer.hpp"
#include "swaptest/permanent.hpp"
#include "swaptest/photon_statistics.hpp"
#include "swaptest/random.hpp"
#include "swaptest/swap_circuit.hpp"

#include "cli.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace swaptest;
using swaptest::testing::pi_exact_oracle;
using swaptest::testing::symmetric_projector;
using swaptest::testing::tensor;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string &what) {
    if (!cond) {
        throw Failure(what);
    }
}

double analytic(std::size_t m, double c) {
    const double md = static_cast<double>(m);
    return 1.0 / md + (md - 1.0) / md * c;
}

ComplexMatrix scaled_qft(int a) {
    const ComplexMatrix f = qft(a).to_complex();
    ComplexMatrix u(f.rows(), f.cols());
    const double s = 1.0 / std::sqrt(static_cast<double>(a));
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t j = 0; j < f.cols(); ++j) {
            u(i, j) = s * f(i, j);
        }
    }
    return u;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Swap-test probability law: Pr(0,...,0) = 1/M + (M-1)/M |<phi|psi>|^2
//    within 1e-10 for M in {2,4,8}, local dimensions 2 and 3, 100 seeded
//    random state pairs each. Must complete in under 10 s.
std::string criterion_swap_law() {
    double worst = 0.0;
    for (std::size_t m : {2UL, 4UL, 8UL}) {
        const CircuitLayout layout = build_layout(m, LayoutVariant::full);
        for (std::size_t d : {2UL, 3UL}) {
            std::mt19937_64 rng(10 * m + d);
            for (int pair = 0; pair < 100; ++pair) {
                const auto phi = random_state(d, rng);
                const auto psi = random_state(d, rng);
                const double c = std::norm(inner_product(phi, psi));
                const double got = accept_probability(layout, phi, psi);
                worst = std::max(worst, std::abs(got - analytic(m, c)));
            }
        }
    }
    require(worst <= 1e-10, "law violated by " + fmt(worst));
    return "max |Pr - law| = " + fmt(worst) + " over 600 state pairs";
}

// ---------------------------------------------------------------------------
// 2. Circuit/interferometer equivalence: the post-processed Hadamard
//    interferometer reproduces the law within 1e-9 for M in {2,4,8} and
//    c in {0,0.25,0.5,0.75,1}. Must complete in under 30 s.
std::string criterion_interferometer_law() {
    double worst = 0.0;
    for (std::size_t n : {1UL, 2UL, 3UL}) {
        const DecisionRule rule = DecisionRule::for_group(GroupSpec(std::vector<int>(n, 2)));
        for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double got = acceptance_probability(rule, OverlapSpec(c));
            worst = std::max(worst, std::abs(got - analytic(rule.size(), c)));
        }
    }
    require(worst <= 1e-9, "law violated by " + fmt(worst));
    return "max |acceptance - law| = " + fmt(worst);
}

// ---------------------------------------------------------------------------
// 3. Group generalisation: same law for the groups (3), (6), (2,4),
//    (2,2,2), and the generator congruence test agrees with the direct
//    pi(D) evaluation on every pattern.
std::string criterion_groups() {
    double worst = 0.0;
    std::size_t patterns = 0;
    for (const auto &factors :
         std::vector<std::vector<int>>{{3}, {6}, {2, 4}, {2, 2, 2}}) {
        const DecisionRule rule = DecisionRule::for_group(GroupSpec(factors));
        for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double got = acceptance_probability(rule, OverlapSpec(c));
            worst = std::max(worst, std::abs(got - analytic(rule.size(), c)));
        }
        for (const auto &d : enumerate_patterns(rule.size())) {
            ++patterns;
            const bool gen_accepts = accept(rule, d) == 0;
            const bool pi_full = pi_value(rule, d) == static_cast<int>(rule.size());
            require(gen_accepts == pi_full,
                    "generator test disagrees with pi(D) on " + d.to_string());
        }
    }
    require(worst <= 1e-9, "law violated by " + fmt(worst));
    return "max |acceptance - law| = " + fmt(worst) + ", generator test checked on " +
           std::to_string(patterns) + " patterns";
}

// ---------------------------------------------------------------------------
// 4. Cauchy-Schwarz bound: Pr_d >= Pr_i / M - 1e-10 for every pattern of
//    H_n (n <= 3), QFT_a (a <= 6) and 20 random unitaries with M <= 5;
//    equality on accepted patterns of the group interferometers.
std::string criterion_bound() {
    double min_slack = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(1234);

    std::vector<ComplexMatrix> unitaries;
    for (int n = 1; n <= 3; ++n) {
        unitaries.push_back(hadamard_walsh(n));
    }
    for (int a = 2; a <= 6; ++a) {
        unitaries.push_back(scaled_qft(a));
    }
    for (int trial = 0; trial < 20; ++trial) {
        unitaries.push_back(random_unitary(2 + static_cast<std::size_t>(trial % 4), rng));
    }
    for (const auto &u : unitaries) {
        const double m = static_cast<double>(u.cols());
        const PatternDistribution dist = compute_distribution(u, OverlapSpec(0.0));
        for (const auto &e : dist.entries) {
            min_slack = std::min(min_slack, e.prob_d - e.prob_i / m);
        }
    }
    require(min_slack >= -1e-10, "bound violated, min slack " + fmt(min_slack));

    // equality on accepted patterns (Hadamard and group rules)
    double worst_eq = 0.0;
    for (const auto &factors :
         std::vector<std::vector<int>>{{2}, {2, 2}, {2, 2, 2}, {3}, {4}, {5}, {6}}) {
        const DecisionRule rule = DecisionRule::for_group(GroupSpec(factors));
        const double m = static_cast<double>(rule.size());
        const PatternDistribution dist = compute_distribution(rule.unitary(), OverlapSpec(0.0));
        for (const auto &e : dist.entries) {
            if (pi_value(rule, e.pattern) == static_cast<int>(rule.size())) {
                worst_eq = std::max(worst_eq, std::abs(e.prob_d - e.prob_i / m));
            }
        }
    }
    require(worst_eq <= 1e-10, "equality violated on accepted pattern by " + fmt(worst_eq));
    return "min slack = " + fmt(min_slack) + ", max |Pr_d - Pr_i/M| on accepted = " + fmt(worst_eq);
}

// ---------------------------------------------------------------------------
// 5. Dichotomy: pi(D) in {0, M} for every pattern of every implemented
//    rule with M <= 8, decided in exact integer arithmetic (the cyclotomic
//    oracle throws if the character sum is anything else).
std::string criterion_dichotomy() {
    std::size_t patterns = 0;
    for (const auto &factors : std::vector<std::vector<int>>{
             {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}}) {
        const DecisionRule rule = DecisionRule::for_group(GroupSpec(factors));
        for (const auto &d : enumerate_patterns(rule.size())) {
            ++patterns;
            const int exact = pi_exact_oracle(rule, d); // throws unless 0 or M
            require(exact == pi_value(rule, d),
                    "modular pi disagrees with the cyclotomic oracle on " + d.to_string());
        }
    }
    return "pi in {0, M} on " + std::to_string(patterns) + " patterns across 10 rules";
}

// ---------------------------------------------------------------------------
// 6. Optimality bound: the permutation-sum bound equals the explicit
//    symmetric-projector trace within 1e-10 (M <= 4), reproduces the
//    swap-test law on (phi, psi, ..., psi), and copies_lower_bound(1/M)
//    returns M-1.
std::string criterion_optimality() {
    std::mt19937_64 rng(31415);
    double worst_trace = 0.0;
    for (std::size_t m : {2UL, 3UL, 4UL}) {
        for (int tuple = 0; tuple < 5; ++tuple) {
            std::vector<std::vector<Complex>> states;
            std::vector<Complex> joint{Complex(1.0, 0.0)};
            for (std::size_t k = 0; k < m; ++k) {
                states.push_back(random_state(2, rng));
                joint = tensor(joint, states.back());
            }
            const ComplexMatrix ps = symmetric_projector(2, m);
            Complex quad(0.0, 0.0);
            for (std::size_t i = 0; i < joint.size(); ++i) {
                for (std::size_t j = 0; j < joint.size(); ++j) {
                    quad += std::conj(joint[i]) * ps(i, j) * joint[j];
                }
            }
            worst_trace = std::max(worst_trace, std::abs(symmetric_bound(states) - quad.real()));
        }
    }
    require(worst_trace <= 1e-10, "projector trace mismatch " + fmt(worst_trace));

    double worst_law = 0.0;
    for (std::size_t m : {2UL, 3UL, 4UL, 5UL, 6UL}) {
        const auto phi = random_state(3, rng);
        const auto psi = random_state(3, rng);
        std::vector<std::vector<Complex>> states{phi};
        for (std::size_t k = 1; k < m; ++k) {
            states.push_back(psi);
        }
        const double c = std::norm(inner_product(phi, psi));
        worst_law = std::max(worst_law, std::abs(symmetric_bound(states) - analytic(m, c)));
    }
    require(worst_law <= 1e-10, "swap-test law mismatch " + fmt(worst_law));

    for (int m = 2; m <= 10; ++m) {
        require(copies_lower_bound(1.0 / m) == m - 1,
                "copies_lower_bound(1/" + std::to_string(m) + ") != " + std::to_string(m - 1));
    }
    return "projector trace delta = " + fmt(worst_trace) + ", law delta = " + fmt(worst_law);
}

// ---------------------------------------------------------------------------
// 7. Beam-splitter decomposition: reconstruct(decompose_hadamard(n)) equals
//    hadamard_walsh(n) within 1e-12 for n <= 4, with exactly M log2(M)/2
//    balanced beam splitters and no phase shifters (every layer entry is
//    real, 0 or +-1/sqrt(2)).
std::string criterion_decomposition() {
    double worst = 0.0;
    const double bs = 1.0 / std::sqrt(2.0);
    for (int n = 1; n <= 4; ++n) {
        const Decomposition d = decompose_hadamard(n);
        const std::size_t m = std::size_t{1} << n;
        require(d.beam_splitter_count() == m * static_cast<std::size_t>(n) / 2,
                "beam splitter count mismatch at n = " + std::to_string(n));
        worst = std::max(worst, max_entry_distance(reconstruct(d), hadamard_walsh(n)));
        for (const auto &layer : d.layers) {
            const ComplexMatrix lu = layer_unitary(layer, m);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    require(lu(i, j).imag() == 0.0, "phase shifter detected (complex entry)");
                    const double mag = std::abs(lu(i, j).real());
                    require(mag == 0.0 || std::abs(mag - bs) <= 1e-15 || mag == 1.0,
                            "layer entry is not a balanced beam-splitter amplitude");
                }
            }
        }
    }
    require(worst <= 1e-12, "reconstruction residual " + fmt(worst));
    return "max reconstruction residual = " + fmt(worst) + " for n <= 4";
}

// ---------------------------------------------------------------------------
// 8. Gate counts: full layout has M log2(M)/2 swaps, simplified M-1, for
//    M in {2,4,8,16}; both give identical acceptance probabilities within
//    1e-12.
std::string criterion_gate_counts() {
    double worst = 0.0;
    std::mt19937_64 rng(2);
    for (std::size_t m : {2UL, 4UL, 8UL, 16UL}) {
        const auto n = static_cast<std::size_t>(std::log2(static_cast<double>(m)));
        const CircuitLayout full = build_layout(m, LayoutVariant::full);
        const CircuitLayout simplified = build_layout(m, LayoutVariant::simplified);
        require(full.swap_count() == m * n / 2, "full swap count mismatch");
        require(simplified.swap_count() == m - 1, "simplified swap count mismatch");
        const auto phi = random_state(2, rng);
        const auto psi = random_state(2, rng);
        worst = std::max(worst, std::abs(accept_probability(full, phi, psi) -
                                         accept_probability(simplified, phi, psi)));
    }
    require(worst <= 1e-12, "variants disagree by " + fmt(worst));
    return "variants agree to " + fmt(worst) + " for M up to 16";
}

// ---------------------------------------------------------------------------
// 9. Normalisation: sum_D Pr_i = sum_D Pr_d = sum_D Pr = 1 within 1e-9 for
//    every tested interferometer and overlap.
std::string criterion_normalisation() {
    std::mt19937_64 rng(55);
    std::vector<ComplexMatrix> unitaries;
    for (int n = 1; n <= 3; ++n) {
        unitaries.push_back(hadamard_walsh(n));
    }
    for (int a = 2; a <= 6; ++a) {
        unitaries.push_back(scaled_qft(a));
    }
    unitaries.push_back(DecisionRule::for_group(GroupSpec({2, 4})).unitary());
    for (std::size_t m = 2; m <= 5; ++m) {
        unitaries.push_back(random_unitary(m, rng));
    }
    double worst = 0.0;
    for (const auto &u : unitaries) {
        for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const PatternDistribution dist = compute_distribution(u, OverlapSpec(c));
            worst = std::max({worst, std::abs(dist.sum_prob_i() - 1.0),
                              std::abs(dist.sum_prob_d() - 1.0),
                              std::abs(dist.sum_prob_mixed() - 1.0)});
        }
    }
    require(worst <= 1e-9, "normalisation off by " + fmt(worst));
    return "max |sum - 1| = " + fmt(worst) + " over " + std::to_string(unitaries.size()) +
           " interferometers";
}

// ---------------------------------------------------------------------------
// 10. Sampling statistics: 1e5 seeded shots at M = 4, c = 0 land within 3
//     binomial sigma of 1/4, and identical seeds reproduce byte-identical
//     streams.
std::string criterion_sampling() {
    const DecisionRule rule = DecisionRule::for_group(GroupSpec({2, 2}));
    const std::size_t shots = 100000;
    const auto draws = sample(rule.unitary(), OverlapSpec(0.0), shots, 20240811);
    std::size_t accepted = 0;
    for (const auto &p : draws) {
        if (accept(rule, p) == 0) {
            ++accepted;
        }
    }
    const double freq = static_cast<double>(accepted) / static_cast<double>(shots);
    const double sigma3 = 3.0 * std::sqrt(0.25 * 0.75 / static_cast<double>(shots));
    require(std::abs(freq - 0.25) <= sigma3,
            "frequency " + fmt(freq) + " outside 3 sigma of 0.25");

    const auto replay = sample(rule.unitary(), OverlapSpec(0.0), shots, 20240811);
    require(draws == replay, "library sampling is not reproducible");

    const std::vector<std::string> args{"sample", "--size", "4",    "--overlap", "0",
                                        "--shots", "2000",  "--seed", "77"};
    std::ostringstream out_a;
    std::ostringstream out_b;
    std::ostringstream err;
    require(swaptest::cli::run(args, out_a, err) == 0, "cli sample failed");
    require(swaptest::cli::run(args, out_b, err) == 0, "cli sample failed");
    require(out_a.str() == out_b.str(), "cli streams differ between identical seeds");
    return "frequency " + fmt(freq) + " within 3 sigma (" + fmt(sigma3) +
           "), streams byte-identical";
}

struct Criterion {
    int id;
    std::string label;
    std::function<std::string()> body;
    double time_limit_s; // 0 = no limit stated
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "swap-test probability law", criterion_swap_law, 10.0},
        {2, "circuit/interferometer equivalence", criterion_interferometer_law, 30.0},
        {3, "abelian-group generalisation", criterion_groups, 0.0},
        {4, "Cauchy-Schwarz bound and saturation", criterion_bound, 0.0},
        {5, "pi dichotomy in exact arithmetic", criterion_dichotomy, 0.0},
        {6, "symmetric-projector optimality bound", criterion_optimality, 0.0},
        {7, "beam-splitter decomposition", criterion_decomposition, 0.0},
        {8, "swap gate counts", criterion_gate_counts, 0.0},
        {9, "distribution normalisation", criterion_normalisation, 0.0},
        {10, "sampling statistics and reproducibility", criterion_sampling, 0.0},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool passed = true;
        try {
            detail = c.body();
        } catch (const std::exception &e) {
            passed = false;
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (passed && c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
            passed = false;
            detail = "exceeded time limit of " + fmt(c.time_limit_s) + " s";
        }
        std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", passed ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), detail.c_str(), elapsed);
        if (!passed) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
