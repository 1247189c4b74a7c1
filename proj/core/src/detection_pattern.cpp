#include "swaptest/detection_pattern.hpp"

#include <numeric>
#include <stdexcept>

namespace swaptest {

int DetectionPattern::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

bool DetectionPattern::is_valid() const {
    int sum = 0;
    for (int d : counts) {
        if (d < 0) {
            return false;
        }
        sum += d;
    }
    return static_cast<std::size_t>(sum) == counts.size();
}

double DetectionPattern::factorial_product() const {
    long long f = 1;
    for (int d : counts) {
        for (int v = 2; v <= d; ++v) {
            f *= v;
        }
    }
    return static_cast<double>(f);
}

std::string DetectionPattern::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) {
            s += ' ';
        }
        s += std::to_string(counts[i]);
    }
    return s;
}

namespace {

void enumerate_rec(std::size_t mode, int remaining, std::vector<int> &current,
                   std::vector<DetectionPattern> &out) {
    if (mode + 1 == current.size()) {
        current[mode] = remaining;
        out.push_back(DetectionPattern{current});
        return;
    }
    for (int d = remaining; d >= 0; --d) {
        current[mode] = d;
        enumerate_rec(mode + 1, remaining - d, current, out);
    }
}

} // namespace

std::vector<DetectionPattern> enumerate_patterns(std::size_t m) {
    if (m < 1 || m > kEnumeratePatternsMaxModes) {
        throw std::invalid_argument("enumerate_patterns: mode count out of range");
    }
    std::vector<DetectionPattern> out;
    out.reserve(binomial(static_cast<unsigned>(2 * m - 1), static_cast<unsigned>(m - 1)));
    std::vector<int> current(m, 0);
    enumerate_rec(0, static_cast<int>(m), current, out);
    return out;
}

unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace swaptest
