#include "swaptest/photon_statistics.hpp"

#include "swaptest/permanent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace swaptest {

namespace {

constexpr double kUnitaryTol = 1e-10;

void require_unitary(const ComplexMatrix &u) {
    if (!u.is_square()) {
        throw std::invalid_argument("photon statistics: interferometer matrix must be square");
    }
    if (!is_unitary(u, kUnitaryTol)) {
        throw std::invalid_argument("photon statistics: matrix is not unitary within 1e-10");
    }
}

void require_pattern(const ComplexMatrix &u, const DetectionPattern &d) {
    if (d.mode_count() != u.cols()) {
        throw std::invalid_argument("photon statistics: pattern length must equal mode count");
    }
    if (!d.is_valid()) {
        throw std::invalid_argument("photon statistics: pattern must be nonnegative and sum to M");
    }
}

double prob_i_unchecked(const ComplexMatrix &u, const DetectionPattern &d) {
    const ComplexMatrix ud = repeat_columns(u, d.counts);
    const Complex per = permanent_ryser(ud);
    return std::norm(per) / d.factorial_product();
}

double prob_d_unchecked(const ComplexMatrix &u, const DetectionPattern &d) {
    const ComplexMatrix u0 = remove_row(u, 0);
    const std::size_t m = u.cols();
    std::vector<int> reduced = d.counts;
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        if (d.counts[k] == 0) {
            continue;
        }
        reduced[k] -= 1;
        const Complex per = permanent_ryser(repeat_columns(u0, reduced));
        reduced[k] += 1;
        sum += d.counts[k] * std::norm(u(0, k) * per);
    }
    return sum / d.factorial_product();
}

} // namespace

OverlapSpec::OverlapSpec(double overlap) : c(overlap) {
    // absorb harmless rounding from |<phi|psi>|^2 before range-checking
    if (c < 0.0 && c >= -1e-12) {
        c = 0.0;
    }
    if (c > 1.0 && c <= 1.0 + 1e-12) {
        c = 1.0;
    }
    if (!(c >= 0.0 && c <= 1.0)) { // rejects NaN as well
        throw std::invalid_argument("OverlapSpec: overlap must lie in [0, 1]");
    }
}

OverlapSpec OverlapSpec::from_states(const std::vector<Complex> &phi,
                                     const std::vector<Complex> &psi, double tol) {
    if (phi.size() != psi.size() || phi.empty()) {
        throw std::invalid_argument("OverlapSpec: states must have equal nonzero dimension");
    }
    if (!(std::abs(norm_squared(phi) - 1.0) <= tol) ||
        !(std::abs(norm_squared(psi) - 1.0) <= tol)) { // also rejects NaN amplitudes
        throw std::invalid_argument("OverlapSpec: states must be normalised");
    }
    return OverlapSpec(std::norm(inner_product(phi, psi)));
}

Complex inner_product(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm_squared(const std::vector<Complex> &v) {
    double s = 0.0;
    for (const Complex &z : v) {
        s += std::norm(z);
    }
    return s;
}

double prob_indistinguishable(const ComplexMatrix &u, const DetectionPattern &d) {
    require_unitary(u);
    require_pattern(u, d);
    return prob_i_unchecked(u, d);
}

double prob_distinguishable(const ComplexMatrix &u, const DetectionPattern &d) {
    require_unitary(u);
    require_pattern(u, d);
    return prob_d_unchecked(u, d);
}

double prob_mixture(const ComplexMatrix &u, const DetectionPattern &d, const OverlapSpec &o) {
    require_unitary(u);
    require_pattern(u, d);
    const double pi = prob_i_unchecked(u, d);
    const double pd = prob_d_unchecked(u, d);
    return pd + o.c * (pi - pd);
}

double PatternDistribution::sum_prob_i() const {
    double s = 0.0;
    for (const Entry &e : entries) {
        s += e.prob_i;
    }
    return s;
}

double PatternDistribution::sum_prob_d() const {
    double s = 0.0;
    for (const Entry &e : entries) {
        s += e.prob_d;
    }
    return s;
}

double PatternDistribution::sum_prob_mixed() const {
    double s = 0.0;
    for (const Entry &e : entries) {
        s += e.prob_mixed;
    }
    return s;
}

PatternDistribution compute_distribution(const ComplexMatrix &u, const OverlapSpec &o) {
    require_unitary(u);
    const std::size_t m = u.cols();
    PatternDistribution dist;
    auto patterns = enumerate_patterns(m);
    dist.entries.resize(patterns.size());

    auto fill_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            PatternDistribution::Entry &e = dist.entries[i];
            e.prob_i = prob_i_unchecked(u, patterns[i]);
            e.prob_d = prob_d_unchecked(u, patterns[i]);
            e.prob_mixed = e.prob_d + o.c * (e.prob_i - e.prob_d);
            e.pattern = std::move(patterns[i]);
        }
    };

    // Each entry is an independent pure computation; chunk over threads
    // for large supports. Entry order, and therefore every reduction over
    // the table, is unchanged.
    const std::size_t hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        patterns.size() >= 2048 ? std::clamp<std::size_t>(hw, 1, 8) : 1;
    if (workers == 1) {
        fill_range(0, patterns.size());
        return dist;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (patterns.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(lo + chunk, patterns.size());
        if (lo < hi) {
            pool.emplace_back(fill_range, lo, hi);
        }
    }
    for (auto &t : pool) {
        t.join();
    }
    return dist;
}

double clamp_probability(double p) {
    return p < 0.0 ? 0.0 : p;
}

BoundReport verify_bound(const ComplexMatrix &u, double tol) {
    require_unitary(u);
    if (u.cols() > kVerifyBoundMaxModes) {
        throw std::invalid_argument("verify_bound: mode count exceeds supported maximum");
    }
    return verify_bound(compute_distribution(u, OverlapSpec(0.0)), tol);
}

BoundReport verify_bound(const PatternDistribution &dist, double tol) {
    if (dist.entries.empty()) {
        throw std::invalid_argument("verify_bound: empty distribution");
    }
    const std::size_t modes = dist.entries.front().pattern.mode_count();
    const auto m = static_cast<double>(modes);
    BoundReport report;
    report.modes = modes;
    report.tolerance = tol;
    report.min_slack = std::numeric_limits<double>::infinity();
    report.mixture_overlaps_checked = {0.0, 0.25, 0.5, 0.75, 1.0};

    for (const auto &e : dist.entries) {
        BoundCheck check;
        check.prob_i = e.prob_i;
        check.prob_d = e.prob_d;
        check.slack = check.prob_d - check.prob_i / m;
        check.pattern = e.pattern;
        report.min_slack = std::min(report.min_slack, check.slack);
        if (check.slack < -tol) {
            report.violations.push_back(check);
        } else if (std::abs(check.slack) <= tol) {
            report.equality_patterns.push_back(check);
        }
        for (double c : report.mixture_overlaps_checked) {
            const double mixed = check.prob_d + c * (check.prob_i - check.prob_d);
            const double lower = (1.0 / m + (m - 1.0) / m * c) * check.prob_i;
            if (mixed < lower - tol) {
                ++report.mixture_violations;
            }
        }
    }
    return report;
}

std::vector<DetectionPattern> sample(const ComplexMatrix &u, const OverlapSpec &o,
                                     std::size_t shots, std::uint64_t seed) {
    require_unitary(u);
    if (u.cols() > kSampleMaxModes) {
        throw std::invalid_argument("sample: mode count exceeds supported maximum");
    }
    std::vector<DetectionPattern> out;
    if (shots == 0) {
        return out;
    }
    const PatternDistribution dist = compute_distribution(u, o);
    std::vector<double> cdf;
    cdf.reserve(dist.entries.size());
    double acc = 0.0;
    for (const auto &e : dist.entries) {
        acc += clamp_probability(e.prob_mixed);
        cdf.push_back(acc);
    }

    std::mt19937_64 rng(seed);
    out.reserve(shots);
    for (std::size_t s = 0; s < shots; ++s) {
        // 53-bit mantissa draw; keeps the stream identical across platforms.
        const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
        const std::size_t idx =
            std::min(static_cast<std::size_t>(it - cdf.begin()), dist.entries.size() - 1);
        out.push_back(dist.entries[idx].pattern);
    }
    return out;
}

} // namespace swaptest
