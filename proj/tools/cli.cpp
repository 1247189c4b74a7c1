#include "cli.hpp"

#include "swaptest/beam_splitter.hpp"
#include "swaptest/decision_rule.hpp"
#include "swaptest/interferometer.hpp"
#include "swaptest/photon_statistics.hpp"
#include "swaptest/random.hpp"
#include "swaptest/swap_circuit.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace swaptest::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

double analytic_acceptance(std::size_t m, double c) {
    const double md = static_cast<double>(m);
    return 1.0 / md + (md - 1.0) / md * c;
}

GroupSpec resolve_group(unsigned size, const std::vector<int> &group_factors) {
    std::optional<GroupSpec> group;
    if (!group_factors.empty()) {
        group = GroupSpec(group_factors);
    } else if (size < 2) {
        throw UsageError("specify an interferometer with --size M (M >= 2) or --group a1,a2,...");
    } else if (std::has_single_bit(size)) {
        const auto n = static_cast<std::size_t>(std::countr_zero(size));
        group = GroupSpec(std::vector<int>(n, 2)); // Hadamard interferometer
    } else {
        group = GroupSpec({static_cast<int>(size)}); // cyclic group, QFT interferometer
    }
    // Pattern enumeration grows as C(2M-1, M-1) with an exponential
    // permanent per pattern; past order 10 a single report would take
    // minutes to hours.
    if (group->order() > 10) {
        throw UsageError("group order " + std::to_string(group->order()) +
                         " is beyond the per-pattern enumeration limit (10)");
    }
    return *group;
}

std::vector<Complex> load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open state file: " + path);
    }
    std::vector<Complex> state;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        double re = 0.0;
        double im = 0.0;
        if (!(fields >> re >> im) || !std::isfinite(re) || !std::isfinite(im)) {
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": expected one finite amplitude per line as \"re im\"");
        }
        state.emplace_back(re, im);
    }
    if (state.empty()) {
        throw UsageError(path + ": state file is empty");
    }
    if (std::abs(norm_squared(state) - 1.0) > 1e-9) {
        throw UsageError(path + ": state is not normalised (|norm^2 - 1| > 1e-9)");
    }
    return state;
}

ordered_json pattern_json(const DetectionPattern &d) {
    return ordered_json(d.counts);
}

void emit(const ordered_json &report, std::ostream &out) {
    out << report.dump(2) << "\n";
}

// ---------------------------------------------------------------- stats ---

struct OverlapArgs {
    double overlap = -1.0;
    std::string phi_file;
    std::string psi_file;

    bool has_overlap() const { return overlap >= 0.0; }
    bool has_files() const { return !phi_file.empty() || !psi_file.empty(); }

    OverlapSpec resolve() const {
        if (has_overlap() == has_files()) {
            throw UsageError("provide exactly one of --overlap or --phi/--psi");
        }
        if (has_overlap()) {
            return OverlapSpec(overlap);
        }
        if (phi_file.empty() || psi_file.empty()) {
            throw UsageError("--phi and --psi must be given together");
        }
        return OverlapSpec::from_states(load_state_file(phi_file), load_state_file(psi_file));
    }
};

int cmd_stats(const GroupSpec &group, const OverlapArgs &overlap_args, const std::string &format,
              std::ostream &out) {
    const DecisionRule rule = DecisionRule::for_group(group);
    const OverlapSpec overlap = overlap_args.resolve();
    const PatternDistribution dist = compute_distribution(rule.unitary(), overlap);

    double accepted_mass = 0.0;
    std::vector<int> pis;
    std::vector<int> accepts;
    pis.reserve(dist.entries.size());
    for (const auto &e : dist.entries) {
        const int bit = accept(rule, e.pattern);
        pis.push_back(pi_value(rule, e.pattern));
        accepts.push_back(bit);
        if (bit == 0) {
            accepted_mass += e.prob_mixed;
        }
    }
    const double analytic = analytic_acceptance(rule.size(), overlap.c);

    if (format == "csv") {
        out << "pattern,prob_i,prob_d,prob_mixed,pi,accept\n";
        for (std::size_t i = 0; i < dist.entries.size(); ++i) {
            const auto &e = dist.entries[i];
            out << e.pattern.to_string() << ',' << format_double(clamp_probability(e.prob_i))
                << ',' << format_double(clamp_probability(e.prob_d)) << ','
                << format_double(clamp_probability(e.prob_mixed)) << ',' << pis[i] << ','
                << accepts[i] << "\n";
        }
        out << "# acceptance_probability=" << format_double(accepted_mass) << "\n";
        out << "# analytic_acceptance=" << format_double(analytic) << "\n";
        return kExitOk;
    }

    ordered_json report;
    report["command"] = "stats";
    report["size"] = rule.size();
    report["group"] = group.invariant_factors;
    report["overlap"] = overlap.c;
    ordered_json patterns = ordered_json::array();
    for (std::size_t i = 0; i < dist.entries.size(); ++i) {
        const auto &e = dist.entries[i];
        ordered_json row;
        row["pattern"] = pattern_json(e.pattern);
        row["prob_i"] = clamp_probability(e.prob_i);
        row["prob_d"] = clamp_probability(e.prob_d);
        row["prob"] = clamp_probability(e.prob_mixed);
        row["pi"] = pis[i];
        row["accept"] = accepts[i];
        patterns.push_back(std::move(row));
    }
    report["patterns"] = std::move(patterns);
    report["acceptance_probability"] = accepted_mass;
    report["analytic_acceptance"] = analytic;
    emit(report, out);
    return kExitOk;
}

// --------------------------------------------------------------- verify ---

struct CheckResult {
    std::string name;
    bool passed = false;
    bool errored = false; // the check threw instead of producing a slack
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

template <typename Fn>
void run_check(std::vector<CheckResult> &results, const std::string &name, double tolerance,
               Fn &&fn) {
    CheckResult r;
    r.name = name;
    r.tolerance = tolerance;
    try {
        r.measured = fn(r);
        r.passed = std::isfinite(r.measured) && r.measured <= tolerance;
    } catch (const std::exception &e) {
        r.passed = false;
        r.errored = true;
        r.detail = e.what();
    }
    results.push_back(std::move(r));
}

int cmd_verify(const GroupSpec &group, double tol_override, double perturb, std::uint64_t seed,
               const std::string &format, std::ostream &out) {
    const DecisionRule rule = DecisionRule::for_group(group);
    ComplexMatrix u = rule.unitary();
    if (perturb != 0.0) {
        u(0, 0) += Complex(perturb, 0.0);
    }
    const std::size_t m = rule.size();
    const bool power_of_two = std::has_single_bit(m);
    const std::vector<double> c_grid{0.0, 0.25, 0.5, 0.75, 1.0};

    auto tol = [&](double fallback) { return tol_override > 0.0 ? tol_override : fallback; };

    // One pattern enumeration serves every distribution-based check below;
    // Pr_i and Pr_d do not depend on the overlap used to build it.
    std::optional<PatternDistribution> dist_cache;
    auto distribution = [&]() -> const PatternDistribution & {
        if (!dist_cache) {
            dist_cache = compute_distribution(u, OverlapSpec(0.0));
        }
        return *dist_cache;
    };

    std::vector<CheckResult> checks;

    run_check(checks, "unitarity", tol(1e-10), [&](CheckResult &) {
        return max_entry_distance(u * adjoint(u), ComplexMatrix::identity(m));
    });

    run_check(checks, "normalisation", tol(1e-9), [&](CheckResult &) {
        const PatternDistribution &dist = distribution();
        const double sum_i = dist.sum_prob_i();
        const double sum_d = dist.sum_prob_d();
        double worst = std::max(std::abs(sum_i - 1.0), std::abs(sum_d - 1.0));
        for (double c : c_grid) {
            worst = std::max(worst, std::abs(sum_d + c * (sum_i - sum_d) - 1.0));
        }
        return worst;
    });

    run_check(checks, "cauchy_schwarz_bound", tol(1e-10), [&](CheckResult &r) {
        const BoundReport report = verify_bound(distribution(), tol(1e-10));
        r.detail = std::to_string(report.equality_patterns.size()) + " equality patterns";
        if (report.mixture_violations > 0) {
            throw std::runtime_error(std::to_string(report.mixture_violations) +
                                     " mixture lower-bound violations");
        }
        return report.min_slack < 0.0 ? -report.min_slack : 0.0;
    });

    run_check(checks, "equivalences", tol(1e-10), [&](CheckResult &r) {
        const EquivalenceReport report =
            equivalence_report(rule, distribution(), 1e-12, tol(1e-10));
        r.detail = std::to_string(report.accepted_patterns) + "/" +
                   std::to_string(report.patterns_checked) + " accepted";
        if (!report.passed()) {
            throw std::runtime_error(std::to_string(report.counterexamples.size()) +
                                     " equivalence counterexamples");
        }
        return report.max_equality_slack;
    });

    run_check(checks, "acceptance_law", tol(1e-9), [&](CheckResult &) {
        double worst = 0.0;
        for (double c : c_grid) {
            const double got = acceptance_probability(rule, distribution(), OverlapSpec(c));
            worst = std::max(worst, std::abs(got - analytic_acceptance(m, c)));
        }
        return worst;
    });

    run_check(checks, "pi_dichotomy", 0.0, [&](CheckResult &) {
        std::size_t bad = 0;
        for (const auto &d : enumerate_patterns(m)) {
            const int pi = pi_value(rule, d);
            if (pi != 0 && pi != static_cast<int>(m)) {
                ++bad;
            }
            if ((accept(rule, d) == 0) != (pi == static_cast<int>(m))) {
                ++bad;
            }
        }
        return static_cast<double>(bad);
    });

    if (power_of_two) {
        const auto n = static_cast<std::size_t>(std::countr_zero(m));
        run_check(checks, "beam_splitter_decomposition", tol(1e-12), [&](CheckResult &r) {
            const Decomposition d = decompose_hadamard(static_cast<int>(n));
            r.detail = std::to_string(d.beam_splitter_count()) + " beam splitters";
            if (d.beam_splitter_count() != m * n / 2) {
                throw std::runtime_error("beam splitter count != M log2(M) / 2");
            }
            return max_entry_distance(reconstruct(d), hadamard_walsh(static_cast<int>(n)));
        });

        run_check(checks, "gate_counts", 0.0, [&](CheckResult &) {
            const auto full = build_layout(m, LayoutVariant::full).swap_count();
            const auto simplified = build_layout(m, LayoutVariant::simplified).swap_count();
            return static_cast<double>((full != m * n / 2) + (simplified != m - 1));
        });

        if (m + n <= kSimulateMaxQubits) {
            run_check(checks, "circuit_consistency", tol(1e-9), [&](CheckResult &) {
                std::mt19937_64 rng(seed);
                double worst = 0.0;
                for (int trial = 0; trial < 5; ++trial) {
                    const auto phi = random_state(2, rng);
                    const auto psi = random_state(2, rng);
                    const double c = std::norm(inner_product(phi, psi));
                    const double expected = analytic_acceptance(m, c);
                    const double full =
                        accept_probability(build_layout(m, LayoutVariant::full), phi, psi);
                    const double simplified =
                        accept_probability(build_layout(m, LayoutVariant::simplified), phi, psi);
                    worst = std::max(worst, std::abs(full - expected));
                    worst = std::max(worst, std::abs(simplified - expected));
                    worst = std::max(worst, std::abs(full - simplified));
                }
                return worst;
            });
        }
    }

    bool all_passed = true;
    for (const auto &c : checks) {
        all_passed = all_passed && c.passed;
    }

    if (format == "csv") {
        out << "check,passed,measured,tolerance,detail\n";
        for (const auto &c : checks) {
            out << c.name << ',' << (c.passed ? 1 : 0) << ','
                << (c.errored ? "error" : format_double(c.measured)) << ','
                << format_double(c.tolerance) << ',' << '"' << c.detail << '"' << "\n";
        }
        out << "# passed=" << (all_passed ? 1 : 0) << "\n";
    } else {
        ordered_json report;
        report["command"] = "verify";
        report["size"] = m;
        report["group"] = group.invariant_factors;
        ordered_json list = ordered_json::array();
        for (const auto &c : checks) {
            ordered_json row;
            row["name"] = c.name;
            row["passed"] = c.passed;
            if (c.errored) {
                row["measured"] = nullptr;
            } else {
                row["measured"] = c.measured;
            }
            row["tolerance"] = c.tolerance;
            row["detail"] = c.detail;
            list.push_back(std::move(row));
        }
        report["checks"] = std::move(list);
        report["passed"] = all_passed;
        emit(report, out);
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------ decompose ---

int cmd_decompose(unsigned size, const std::string &format, std::ostream &out) {
    if (size < 2 || !std::has_single_bit(size)) {
        throw UsageError("decompose requires --size M with M a power of two >= 2");
    }
    const auto n = static_cast<int>(std::countr_zero(size));
    const Decomposition d = decompose_hadamard(n);
    const double residual = max_entry_distance(reconstruct(d), hadamard_walsh(n));

    if (format == "csv") {
        out << "layer,permutation,pairs\n";
        for (std::size_t k = 0; k < d.layers.size(); ++k) {
            const auto &layer = d.layers[k];
            out << k << ',';
            for (std::size_t i = 0; i < layer.permutation.size(); ++i) {
                out << (i ? " " : "") << layer.permutation[i];
            }
            out << ',';
            for (std::size_t i = 0; i < layer.pairs.size(); ++i) {
                out << (i ? " " : "") << layer.pairs[i].first << '-' << layer.pairs[i].second;
            }
            out << "\n";
        }
        out << "# beam_splitters=" << d.beam_splitter_count() << "\n";
        out << "# reconstruction_residual=" << format_double(residual) << "\n";
        return kExitOk;
    }

    ordered_json report;
    report["command"] = "decompose";
    report["size"] = d.size;
    report["layer_count"] = d.layers.size();
    report["beam_splitters"] = d.beam_splitter_count();
    ordered_json layers = ordered_json::array();
    for (const auto &layer : d.layers) {
        ordered_json row;
        row["permutation"] = layer.permutation;
        ordered_json pairs = ordered_json::array();
        for (const auto &[a, b] : layer.pairs) {
            pairs.push_back(ordered_json::array({a, b}));
        }
        row["pairs"] = std::move(pairs);
        layers.push_back(std::move(row));
    }
    report["layers"] = std::move(layers);
    report["reconstruction_residual"] = residual;
    emit(report, out);
    return kExitOk;
}

// --------------------------------------------------------------- sample ---

int cmd_sample(const GroupSpec &group, const OverlapArgs &overlap_args, std::uint64_t shots,
               bool seed_given, std::uint64_t seed, const std::string &format, std::ostream &out) {
    if (shots < 1) {
        throw UsageError("sample requires --shots >= 1");
    }
    if (!seed_given) {
        throw UsageError("sample requires --seed for a reproducible stream");
    }
    const DecisionRule rule = DecisionRule::for_group(group);
    const OverlapSpec overlap = overlap_args.resolve();
    const auto draws = sample(rule.unitary(), overlap, shots, seed);

    std::size_t accepted = 0;
    std::vector<int> bits;
    bits.reserve(draws.size());
    for (const auto &p : draws) {
        const int bit = accept(rule, p);
        bits.push_back(bit);
        if (bit == 0) {
            ++accepted;
        }
    }
    const double freq = static_cast<double>(accepted) / static_cast<double>(shots);
    const double expected = analytic_acceptance(rule.size(), overlap.c);
    const double sigma3 =
        3.0 * std::sqrt(expected * (1.0 - expected) / static_cast<double>(shots));

    if (format == "csv") {
        out << "pattern,accept\n";
        for (std::size_t i = 0; i < draws.size(); ++i) {
            out << draws[i].to_string() << ',' << bits[i] << "\n";
        }
        out << "# shots=" << shots << "\n";
        out << "# seed=" << seed << "\n";
        out << "# acceptance_frequency=" << format_double(freq) << "\n";
        out << "# analytic_acceptance=" << format_double(expected) << "\n";
        out << "# sigma3=" << format_double(sigma3) << "\n";
        return kExitOk;
    }

    ordered_json report;
    report["command"] = "sample";
    report["size"] = rule.size();
    report["group"] = group.invariant_factors;
    report["overlap"] = overlap.c;
    report["shots"] = shots;
    report["seed"] = seed;
    ordered_json records = ordered_json::array();
    for (std::size_t i = 0; i < draws.size(); ++i) {
        ordered_json row;
        row["pattern"] = pattern_json(draws[i]);
        row["accept"] = bits[i];
        records.push_back(std::move(row));
    }
    report["records"] = std::move(records);
    report["accepted"] = accepted;
    report["acceptance_frequency"] = freq;
    report["analytic_acceptance"] = expected;
    report["sigma3"] = sigma3;
    report["within_3sigma"] = std::abs(freq - expected) <= sigma3;
    emit(report, out);
    return kExitOk;
}

// -------------------------------------------------------------- swapsim ---

int cmd_swapsim(unsigned size, const OverlapArgs &overlap_args, bool seed_given,
                std::uint64_t seed, unsigned local_dim, const std::string &format,
                std::ostream &out) {
    if (size < 2 || !std::has_single_bit(size)) {
        throw UsageError("swapsim requires --size M with M a power of two >= 2");
    }
    if (size > 8) {
        throw UsageError("swapsim enumerates detection patterns; M <= 8 is supported");
    }

    std::vector<Complex> phi;
    std::vector<Complex> psi;
    if (overlap_args.has_files()) {
        if (overlap_args.phi_file.empty() || overlap_args.psi_file.empty()) {
            throw UsageError("--phi and --psi must be given together");
        }
        phi = load_state_file(overlap_args.phi_file);
        psi = load_state_file(overlap_args.psi_file);
        if (phi.size() != psi.size()) {
            throw UsageError("swapsim: state files have different dimensions");
        }
    } else {
        if (!seed_given) {
            throw UsageError("swapsim needs --phi/--psi files or --seed for random states");
        }
        if (local_dim < 2) {
            throw UsageError("swapsim: --local-dim must be >= 2");
        }
        std::mt19937_64 rng(seed);
        phi = random_state(local_dim, rng);
        psi = random_state(local_dim, rng);
    }

    const double c = std::norm(inner_product(phi, psi));
    const double analytic = analytic_acceptance(size, c);
    const double full = accept_probability(build_layout(size, LayoutVariant::full), phi, psi);
    const double simplified =
        accept_probability(build_layout(size, LayoutVariant::simplified), phi, psi);

    const auto n = static_cast<std::size_t>(std::countr_zero(size));
    const DecisionRule rule = DecisionRule::for_group(GroupSpec(std::vector<int>(n, 2)));
    const double interferometer = acceptance_probability(rule, OverlapSpec(c));

    const double max_delta =
        std::max({std::abs(full - analytic), std::abs(simplified - analytic),
                  std::abs(interferometer - analytic), std::abs(full - simplified)});

    if (format == "csv") {
        out << "quantity,value\n";
        out << "size," << size << "\n";
        out << "overlap," << format_double(c) << "\n";
        out << "circuit_full," << format_double(full) << "\n";
        out << "circuit_simplified," << format_double(simplified) << "\n";
        out << "interferometer," << format_double(interferometer) << "\n";
        out << "analytic," << format_double(analytic) << "\n";
        out << "max_delta," << format_double(max_delta) << "\n";
        return kExitOk;
    }

    ordered_json report;
    report["command"] = "swapsim";
    report["size"] = size;
    report["local_dim"] = phi.size();
    report["overlap"] = c;
    report["circuit_full"] = full;
    report["circuit_simplified"] = simplified;
    report["interferometer"] = interferometer;
    report["analytic"] = analytic;
    report["deltas"] = {
        {"full_vs_analytic", std::abs(full - analytic)},
        {"simplified_vs_analytic", std::abs(simplified - analytic)},
        {"interferometer_vs_analytic", std::abs(interferometer - analytic)},
        {"full_vs_simplified", std::abs(full - simplified)},
    };
    report["max_delta"] = max_delta;
    emit(report, out);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Swap tests of order M: exact photon statistics of Hadamard/QFT/"
                 "abelian-group interferometers, the parity post-processing rule, and a "
                 "controlled-swap circuit cross-check"};
    app.name("swaptest");
    app.require_subcommand(1);

    unsigned size = 0;
    std::vector<int> group_factors;
    OverlapArgs overlap_args;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    unsigned local_dim = 2;
    std::string format = "json";
    double tol_override = 0.0;
    double perturb = 0.0;

    auto add_interferometer_options = [&](CLI::App *cmd) {
        auto *size_opt = cmd->add_option("--size", size, "Interferometer size M (Hadamard when "
                                                         "M is a power of two, cyclic QFT "
                                                         "otherwise)");
        cmd->add_option("--group", group_factors,
                        "Abelian group invariant factors a1,a2,... (ai | ai+1)")
            ->delimiter(',')
            ->excludes(size_opt);
    };
    auto add_overlap_options = [&](CLI::App *cmd) {
        cmd->add_option("--overlap", overlap_args.overlap, "Squared overlap c = |<phi|psi>|^2")
            ->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--phi", overlap_args.phi_file, "Input state file (one 're im' per line)");
        cmd->add_option("--psi", overlap_args.psi_file, "Reference state file");
    };
    auto add_format_option = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App *stats = app.add_subcommand("stats", "Per-pattern Pr_i, Pr_d, Pr, pi(D) and the "
                                                  "acceptance probability");
    add_interferometer_options(stats);
    add_overlap_options(stats);
    add_format_option(stats);

    CLI::App *verify = app.add_subcommand("verify", "Run every invariant suite for the chosen "
                                                    "interferometer");
    add_interferometer_options(verify);
    add_format_option(verify);
    verify->add_option("--tol", tol_override, "Override the per-check tolerances");
    verify->add_option("--perturb", perturb,
                       "Add this value to entry (0,0) of the unitary (negative control)");
    verify->add_option("--seed", seed, "Seed for the circuit-consistency states")
        ->default_val(12345);

    CLI::App *decompose = app.add_subcommand("decompose", "Balanced-beam-splitter decomposition "
                                                          "of the Hadamard interferometer");
    decompose->add_option("--size", size, "Interferometer size M (power of two)");
    add_format_option(decompose);

    CLI::App *sample_cmd = app.add_subcommand("sample", "Draw seeded shots from the exact "
                                                        "detection distribution");
    add_interferometer_options(sample_cmd);
    add_overlap_options(sample_cmd);
    add_format_option(sample_cmd);
    sample_cmd->add_option("--shots", shots, "Number of shots (>= 1)");
    sample_cmd->add_option("--seed", seed, "RNG seed (required)");

    CLI::App *swapsim = app.add_subcommand("swapsim", "Cross-check the controlled-swap circuit "
                                                      "against the interferometer");
    swapsim->add_option("--size", size, "Circuit order M (power of two, <= 8)");
    swapsim->add_option("--phi", overlap_args.phi_file, "Input state file");
    swapsim->add_option("--psi", overlap_args.psi_file, "Reference state file");
    swapsim->add_option("--seed", seed, "Seed for random states when no files are given");
    swapsim->add_option("--local-dim", local_dim, "Local dimension of seeded random states")
        ->check(CLI::Range(2U, 16U));
    add_format_option(swapsim);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("swaptest");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    argv.reserve(argv_storage.size());
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    seed_given = (sample_cmd->count("--seed") > 0) || (swapsim->count("--seed") > 0);

    try {
        if (stats->parsed()) {
            return cmd_stats(resolve_group(size, group_factors), overlap_args, format, out);
        }
        if (verify->parsed()) {
            return cmd_verify(resolve_group(size, group_factors), tol_override, perturb, seed,
                              format, out);
        }
        if (decompose->parsed()) {
            return cmd_decompose(size, format, out);
        }
        if (sample_cmd->parsed()) {
            return cmd_sample(resolve_group(size, group_factors), overlap_args, shots, seed_given,
                              seed, format, out);
        }
        if (swapsim->parsed()) {
            return cmd_swapsim(size, overlap_args, seed_given, seed, local_dim, format, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

} // namespace swaptest::cli
