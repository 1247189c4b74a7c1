#include "swaptest/beam_splitter.hpp"

#include <cmath>
#include <stdexcept>

namespace swaptest {

namespace {

// Pairs coupled by P (I_{M/2} x H) P^T: block l couples sigma(2l), sigma(2l+1).
std::vector<std::pair<std::size_t, std::size_t>>
pairs_from_permutation(const std::vector<std::size_t> &sigma) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(sigma.size() / 2);
    for (std::size_t l = 0; 2 * l + 1 < sigma.size(); ++l) {
        pairs.emplace_back(sigma[2 * l], sigma[2 * l + 1]);
    }
    return pairs;
}

} // namespace

std::size_t Decomposition::beam_splitter_count() const {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.pairs.size();
    }
    return total;
}

Decomposition decompose_hadamard(int n) {
    if (n < 1 || n > kDecomposeMaxOrder) {
        throw std::invalid_argument("decompose_hadamard: order out of range");
    }
    // Base case M = 2: a single beam splitter, identity permutation.
    std::vector<std::vector<std::size_t>> perms = {{0, 1}};

    for (int level = 1; level < n; ++level) {
        const std::size_t m = std::size_t{1} << level; // previous size
        const std::size_t m2 = 2 * m;
        // Perfect shuffle q(b*m + x) = 2x + b realising A x I_2 = Q (I_2 x A) Q^T.
        std::vector<std::vector<std::size_t>> next;
        next.reserve(perms.size() + 1);
        for (const auto &p : perms) {
            std::vector<std::size_t> lifted(m2);
            for (std::size_t b = 0; b < 2; ++b) {
                for (std::size_t x = 0; x < m; ++x) {
                    lifted[b * m + x] = 2 * p[x] + b;
                }
            }
            next.push_back(std::move(lifted));
        }
        std::vector<std::size_t> identity(m2);
        for (std::size_t i = 0; i < m2; ++i) {
            identity[i] = i;
        }
        next.push_back(std::move(identity));
        perms = std::move(next);
    }

    Decomposition d;
    d.size = std::size_t{1} << n;
    d.layers.reserve(perms.size());
    for (auto &p : perms) {
        BeamSplitterLayer layer;
        layer.pairs = pairs_from_permutation(p);
        layer.permutation = std::move(p);
        d.layers.push_back(std::move(layer));
    }
    return d;
}

ComplexMatrix layer_unitary(const BeamSplitterLayer &layer, std::size_t m) {
    ComplexMatrix u(m, m);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<bool> touched(m, false);
    for (const auto &[a, b] : layer.pairs) {
        if (a >= m || b >= m || a == b || touched[a] || touched[b]) {
            throw std::invalid_argument("layer_unitary: pairs must be disjoint mode pairs");
        }
        touched[a] = touched[b] = true;
        u(a, a) = inv_sqrt2;
        u(a, b) = inv_sqrt2;
        u(b, a) = inv_sqrt2;
        u(b, b) = -inv_sqrt2;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!touched[i]) {
            u(i, i) = Complex(1.0, 0.0);
        }
    }
    return u;
}

ComplexMatrix reconstruct(const Decomposition &d) {
    ComplexMatrix product = ComplexMatrix::identity(d.size);
    for (const auto &layer : d.layers) {
        product = product * layer_unitary(layer, d.size);
    }
    return product;
}

} // namespace swaptest
