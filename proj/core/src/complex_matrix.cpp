#include "swaptest/complex_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swaptest {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count " +
                                    std::to_string(entries_.size()) + " does not match " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    if (!has_finite_entries()) {
        throw std::invalid_argument("ComplexMatrix: entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex(1.0, 0.0);
    }
    return m;
}

bool ComplexMatrix::has_finite_entries() const {
    for (const Complex &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimensions mismatch");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        throw std::invalid_argument("is_unitary: matrix must be square");
    }
    const ComplexMatrix prod = m * adjoint(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < prod.rows(); ++i) {
        for (std::size_t j = 0; j < prod.cols(); ++j) {
            const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            worst = std::max(worst, std::abs(prod(i, j) - expected));
        }
    }
    return worst <= tol;
}

double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_entry_distance: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

ComplexMatrix repeat_columns(const ComplexMatrix &m, std::span<const int> multiplicities) {
    if (multiplicities.size() != m.cols()) {
        throw std::invalid_argument("repeat_columns: multiplicity count must equal column count");
    }
    std::size_t out_cols = 0;
    for (int d : multiplicities) {
        if (d < 0) {
            throw std::invalid_argument("repeat_columns: negative multiplicity");
        }
        out_cols += static_cast<std::size_t>(d);
    }
    ComplexMatrix out(m.rows(), out_cols);
    std::size_t c = 0;
    for (std::size_t k = 0; k < m.cols(); ++k) {
        for (int rep = 0; rep < multiplicities[k]; ++rep, ++c) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                out(i, c) = m(i, k);
            }
        }
    }
    return out;
}

ComplexMatrix remove_row(const ComplexMatrix &m, std::size_t i) {
    if (i >= m.rows()) {
        throw std::invalid_argument("remove_row: row index out of range");
    }
    ComplexMatrix out(m.rows() - 1, m.cols());
    std::size_t r = 0;
    for (std::size_t src = 0; src < m.rows(); ++src) {
        if (src == i) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(r, j) = m(src, j);
        }
        ++r;
    }
    return out;
}

ComplexMatrix permute_columns(const ComplexMatrix &m, std::span<const std::size_t> perm) {
    if (perm.size() != m.cols()) {
        throw std::invalid_argument("permute_columns: permutation length mismatch");
    }
    std::vector<bool> seen(m.cols(), false);
    for (std::size_t j : perm) {
        if (j >= m.cols() || seen[j]) {
            throw std::invalid_argument("permute_columns: not a permutation");
        }
        seen[j] = true;
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            out(i, j) = m(i, perm[j]);
        }
    }
    return out;
}

RootOfUnityMatrix::RootOfUnityMatrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), exps_(rows * cols, 0) {
    if (order < 1) {
        throw std::invalid_argument("RootOfUnityMatrix: order must be positive");
    }
}

void RootOfUnityMatrix::set_exponent(std::size_t r, std::size_t c, long long e) {
    long long reduced = e % order_;
    if (reduced < 0) {
        reduced += order_;
    }
    exps_[r * cols_ + c] = static_cast<int>(reduced);
}

ComplexMatrix RootOfUnityMatrix::to_complex() const {
    ComplexMatrix out(rows_, cols_);
    // Precompute the order-th roots once; exponents are already reduced.
    std::vector<Complex> roots(static_cast<std::size_t>(order_));
    for (int e = 0; e < order_; ++e) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / order_;
        roots[static_cast<std::size_t>(e)] = Complex(std::cos(angle), std::sin(angle));
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(i, j) = roots[static_cast<std::size_t>(exponent(i, j))];
        }
    }
    return out;
}

RootOfUnityMatrix RootOfUnityMatrix::from_complex(const ComplexMatrix &m, int order, double tol) {
    RootOfUnityMatrix out(m.rows(), m.cols(), order);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            const double angle = std::arg(z);
            const double turns = angle / (2.0 * std::numbers::pi) * order;
            long long e = static_cast<long long>(std::llround(turns)) % order;
            if (e < 0) {
                e += order;
            }
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(e) / order;
            const Complex root(std::cos(phase), std::sin(phase));
            if (std::abs(z - root) > tol) {
                throw std::invalid_argument(
                    "RootOfUnityMatrix::from_complex: entry is not an order-" +
                    std::to_string(order) + " root of unity");
            }
            out.set_exponent(i, j, e);
        }
    }
    return out;
}

} // namespace swaptest
