#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace swaptest {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Used for interferometer unitaries and
/// the column-repeated submatrices that feed permanent evaluation.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    const std::vector<Complex> &entries() const { return entries_; }

    bool has_finite_entries() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &m);

/// Max-norm of (m * m^dagger - I) compared against tol.
bool is_unitary(const ComplexMatrix &m, double tol);

/// Largest entry-wise |a - b|; matrices must have equal shape.
double max_entry_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// New matrix whose column list repeats column k of m multiplicities[k]
/// times, repetitions grouped by ascending source index.
ComplexMatrix repeat_columns(const ComplexMatrix &m, std::span<const int> multiplicities);

/// Copy of m with row i deleted.
ComplexMatrix remove_row(const ComplexMatrix &m, std::size_t i);

/// Copy of m with columns reordered: column j of the result is column perm[j] of m.
ComplexMatrix permute_columns(const ComplexMatrix &m, std::span<const std::size_t> perm);

/// Exact representation of a matrix whose entries are a-th roots of unity:
/// entry(i,j) = exp(2*pi*i * exponents(i,j) / order). Exponents are kept
/// reduced modulo the order so the decision rule can work in integer
/// arithmetic only.
class RootOfUnityMatrix {
  public:
    RootOfUnityMatrix(std::size_t rows, std::size_t cols, int order);

    int order() const { return order_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int exponent(std::size_t r, std::size_t c) const { return exps_[r * cols_ + c]; }
    void set_exponent(std::size_t r, std::size_t c, long long e);

    ComplexMatrix to_complex() const;

    /// Recovers exponents from a matrix of unit-modulus entries. Throws if
    /// any entry is farther than tol from every a-th root of unity.
    static RootOfUnityMatrix from_complex(const ComplexMatrix &m, int order, double tol = 1e-9);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    int order_ = 1;
    std::vector<int> exps_;
};

} // namespace swaptest
