#pragma once

// Shared test oracles. Everything here is deliberately independent of the
// implementation paths it checks: naive permutation sums, explicit tensor
// products, and exact integer cyclotomic arithmetic.

#include "swaptest/complex_matrix.hpp"
#include "swaptest/decision_rule.hpp"
#include "swaptest/detection_pattern.hpp"
#include "swaptest/permanent.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swaptest::testing {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close(const Complex &a, const Complex &b, double tol) {
    return std::abs(a - b) <= tol;
}

/// Kronecker product, used as the tensor-construction oracle.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline std::vector<Complex> tensor(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    std::vector<Complex> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

/// Brute-force complex evaluation of pi(D) = sum_i prod_j s_ij^{d_j}
/// straight from the rule's complex table.
inline Complex pi_complex_oracle(const DecisionRule &rule, const DetectionPattern &d) {
    const ComplexMatrix s = rule.exponent_table().to_complex();
    Complex total(0.0, 0.0);
    for (std::size_t i = 0; i < s.rows(); ++i) {
        Complex prod(1.0, 0.0);
        for (std::size_t j = 0; j < s.cols(); ++j) {
            for (int rep = 0; rep < d.counts[j]; ++rep) {
                prod *= s(i, j);
            }
        }
        total += prod;
    }
    return total;
}

/// Integer polynomials for the exact cyclotomic route below.
using Poly = std::vector<long long>; // coefficient of x^k at index k

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
    return p;
}

/// Exact quotient of integer polynomials; denominator must be monic and
/// divide exactly.
inline Poly poly_divide_exact(Poly num, const Poly &den) {
    num = poly_trim(std::move(num));
    Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const long long c = num[k + den.size() - 1];
        quot[k] = c;
        if (c != 0) {
            for (std::size_t j = 0; j < den.size(); ++j) {
                num[k + j] -= c * den[j];
            }
        }
    }
    for (long long c : num) {
        if (c != 0) {
            throw std::logic_error("poly_divide_exact: nonzero remainder");
        }
    }
    return poly_trim(std::move(quot));
}

/// Cyclotomic polynomial Phi_a via x^a - 1 = prod_{d | a} Phi_d.
inline Poly cyclotomic(int a) {
    Poly num(static_cast<std::size_t>(a) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(a)] = 1;
    for (int d = 1; d < a; ++d) {
        if (a % d == 0) {
            num = poly_divide_exact(std::move(num), cyclotomic(d));
        }
    }
    return num;
}

/// Exact integer decision of pi(D): reduces sum_e count_e x^e modulo
/// Phi_order, where count_e counts rows whose exponent congruence lands on
/// e. The result must be the zero polynomial (pi = 0) or the constant M
/// (pi = M); any other remainder throws. No floating point involved.
inline int pi_exact_oracle(const DecisionRule &rule, const DetectionPattern &d) {
    const RootOfUnityMatrix &t = rule.exponent_table();
    const int order = t.order();
    const std::size_t m = rule.size();
    Poly counts(static_cast<std::size_t>(order), 0);
    for (std::size_t i = 0; i < m; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < m; ++j) {
            s += static_cast<long long>(d.counts[j]) * t.exponent(i, j);
        }
        counts[static_cast<std::size_t>(s % order)] += 1;
    }
    Poly rem = poly_trim(std::move(counts));
    const Poly phi = cyclotomic(order);
    while (rem.size() >= phi.size()) {
        const long long c = rem.back();
        const std::size_t shift = rem.size() - phi.size();
        for (std::size_t j = 0; j < phi.size(); ++j) {
            rem[shift + j] -= c * phi[j];
        }
        rem = poly_trim(std::move(rem));
    }
    if (rem.empty()) {
        return 0;
    }
    if (rem.size() == 1 && rem[0] == static_cast<long long>(m)) {
        return static_cast<int>(m);
    }
    throw std::logic_error("pi_exact_oracle: pi(D) is neither 0 nor M");
}

/// Independent route for the distinguishable-case probability: the extra
/// photon lands in output k with weight |u_0k|^2 while the other M-1
/// photons produce D - 1_k with the (M-1)-photon permanent formula,
/// evaluated with the naive permanent.
inline double prob_distinguishable_oracle(const ComplexMatrix &u, const DetectionPattern &d) {
    const ComplexMatrix rest = remove_row(u, 0);
    double total = 0.0;
    for (std::size_t k = 0; k < u.cols(); ++k) {
        if (d.counts[k] == 0) {
            continue;
        }
        std::vector<int> reduced = d.counts;
        reduced[k] -= 1;
        double fact = 1.0;
        for (int c : reduced) {
            for (int v = 2; v <= c; ++v) {
                fact *= v;
            }
        }
        const Complex per = permanent_naive(repeat_columns(rest, reduced));
        total += std::norm(u(0, k)) * std::norm(per) / fact;
    }
    return total;
}

/// Dense symmetric-subspace projector P_S = (1/M!) sum_sigma P_sigma on
/// (C^d)^{x M}, built entry by entry.
inline ComplexMatrix symmetric_projector(std::size_t d, std::size_t m) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < m; ++i) {
        dim *= d;
    }
    auto digits = [&](std::size_t x) {
        std::vector<std::size_t> out(m);
        for (std::size_t k = m; k-- > 0;) {
            out[k] = x % d;
            x /= d;
        }
        return out;
    };
    ComplexMatrix p(dim, dim);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    double factorial = 1.0;
    for (std::size_t k = 2; k <= m; ++k) {
        factorial *= static_cast<double>(k);
    }
    do {
        for (std::size_t x = 0; x < dim; ++x) {
            const auto dx = digits(x);
            std::size_t y = 0;
            for (std::size_t k = 0; k < m; ++k) {
                y = y * d + dx[perm[k]];
            }
            p(y, x) += Complex(1.0 / factorial, 0.0);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

} // namespace swaptest::testing
