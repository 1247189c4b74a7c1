#include "swaptest/interferometer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swaptest {

GroupSpec::GroupSpec(std::vector<int> factors) : invariant_factors(std::move(factors)) {
    if (invariant_factors.empty()) {
        throw std::invalid_argument("GroupSpec: at least one invariant factor required");
    }
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        if (invariant_factors[i] < 1) {
            throw std::invalid_argument("GroupSpec: invariant factors must be positive");
        }
        if (i + 1 < invariant_factors.size() &&
            invariant_factors[i + 1] % invariant_factors[i] != 0) {
            throw std::invalid_argument("GroupSpec: a_i must divide a_{i+1} (got " +
                                        std::to_string(invariant_factors[i]) + ", " +
                                        std::to_string(invariant_factors[i + 1]) + ")");
        }
    }
}

std::size_t GroupSpec::order() const {
    std::size_t m = 1;
    for (int a : invariant_factors) {
        m *= static_cast<std::size_t>(a);
    }
    return m;
}

ComplexMatrix hadamard_walsh(int n) {
    if (n < 0 || n > kHadamardWalshMaxOrder) {
        throw std::invalid_argument("hadamard_walsh: order out of range");
    }
    ComplexMatrix h(1, 1);
    h(0, 0) = Complex(1.0, 0.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < n; ++k) {
        const std::size_t m = h.rows();
        ComplexMatrix next(2 * m, 2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const Complex v = inv_sqrt2 * h(i, j);
                next(i, j) = v;
                next(i, j + m) = v;
                next(i + m, j) = v;
                next(i + m, j + m) = -v;
            }
        }
        h = std::move(next);
    }
    return h;
}

RootOfUnityMatrix qft(int a) {
    if (a < 1) {
        throw std::invalid_argument("qft: order must be positive");
    }
    RootOfUnityMatrix f(static_cast<std::size_t>(a), static_cast<std::size_t>(a), a);
    for (int k = 0; k < a; ++k) {
        for (int l = 0; l < a; ++l) {
            f.set_exponent(static_cast<std::size_t>(k), static_cast<std::size_t>(l),
                           static_cast<long long>(k) * l);
        }
    }
    return f;
}

RootOfUnityMatrix group_unitary(const GroupSpec &g) {
    const std::size_t m = g.order();
    const auto &factors = g.invariant_factors;
    const int common_order = factors.back(); // lcm of a divisibility chain
    RootOfUnityMatrix f(m, m, common_order);

    // Mixed-radix digits with a_1 most significant, matching the Kronecker
    // order F_{a_1} x ... x F_{a_N}.
    std::vector<std::size_t> strides(factors.size(), 1);
    for (std::size_t t = factors.size(); t-- > 1;) {
        strides[t - 1] = strides[t] * static_cast<std::size_t>(factors[t]);
    }

    std::vector<int> row_digits(factors.size(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t rest = i;
        for (std::size_t t = 0; t < factors.size(); ++t) {
            row_digits[t] = static_cast<int>(rest / strides[t]);
            rest %= strides[t];
        }
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t crest = j;
            long long e = 0;
            for (std::size_t t = 0; t < factors.size(); ++t) {
                const int col_digit = static_cast<int>(crest / strides[t]);
                crest %= strides[t];
                // e^{2 pi i k l / a_t} expressed over the common order.
                e += static_cast<long long>(row_digits[t]) * col_digit *
                     (common_order / factors[t]);
            }
            f.set_exponent(i, j, e);
        }
    }
    return f;
}

std::vector<std::size_t> generator_rows(const GroupSpec &g) {
    const std::size_t m = g.order();
    const auto &factors = g.invariant_factors;
    std::vector<std::size_t> strides(factors.size(), 1);
    for (std::size_t t = factors.size(); t-- > 1;) {
        strides[t - 1] = strides[t] * static_cast<std::size_t>(factors[t]);
    }
    // A factor a_t = 1 is trivial and its stride wraps to the identity row.
    for (std::size_t &s : strides) {
        s %= m;
    }
    return strides;
}

} // namespace swaptest
