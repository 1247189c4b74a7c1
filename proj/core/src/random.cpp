#include "swaptest/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swaptest {

double uniform_double(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64 &rng) {
    double u1 = uniform_double(rng);
    while (u1 == 0.0) {
        u1 = uniform_double(rng);
    }
    const double u2 = uniform_double(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Complex> random_state(std::size_t dim, std::mt19937_64 &rng) {
    if (dim == 0) {
        throw std::invalid_argument("random_state: dimension must be positive");
    }
    std::vector<Complex> v(dim);
    double norm2 = 0.0;
    while (norm2 == 0.0) {
        for (auto &z : v) {
            z = Complex(gaussian(rng), gaussian(rng));
            norm2 += std::norm(z);
        }
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &z : v) {
        z *= scale;
    }
    return v;
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64 &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_unitary: dimension must be positive");
    }
    // Columns of a Gaussian matrix, orthonormalised with two Gram-Schmidt
    // passes for numerical safety at small n.
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (auto &col : cols) {
        for (auto &z : col) {
            z = Complex(gaussian(rng), gaussian(rng));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) {
                    proj += std::conj(cols[k][i]) * cols[j][i];
                }
                for (std::size_t i = 0; i < n; ++i) {
                    cols[j][i] -= proj * cols[k][i];
                }
            }
        }
        double norm2 = 0.0;
        for (const auto &z : cols[j]) {
            norm2 += std::norm(z);
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto &z : cols[j]) {
            z *= scale;
        }
    }
    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u(i, j) = cols[j][i];
        }
    }
    return u;
}

} // namespace swaptest
