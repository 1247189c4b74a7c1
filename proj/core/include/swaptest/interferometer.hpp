#pragma once

#include "swaptest/complex_matrix.hpp"

#include <vector>

namespace swaptest {

/// Invariant factors (a_1,...,a_N) of a finite abelian group, a_i | a_{i+1}.
/// The group order M = a_1 * ... * a_N sets the interferometer size.
struct GroupSpec {
    std::vector<int> invariant_factors;

    explicit GroupSpec(std::vector<int> factors);

    std::size_t order() const;
    std::size_t factor_count() const { return invariant_factors.size(); }
};

/// Hadamard-Walsh transform H_n of size 2^n, defined by the block recursion
/// H_{k+1} = (1/sqrt(2)) [[H_k, H_k], [H_k, -H_k]] with H_0 = [1].
ComplexMatrix hadamard_walsh(int n);

inline constexpr int kHadamardWalshMaxOrder = 10;

/// Quantum Fourier transform of order a without normalisation:
/// exponent(k, l) = k*l mod a, i.e. entries e^{2*pi*i*k*l/a}.
RootOfUnityMatrix qft(int a);

/// Unnormalised group interferometer F_G = F_{a_1} x ... x F_{a_N} in exact
/// exponent arithmetic over the common order a_N. The complex unitary is
/// to_complex() / sqrt(M). Rows form a group isomorphic to G under
/// element-wise multiplication.
RootOfUnityMatrix group_unitary(const GroupSpec &g);

/// One row index per invariant factor, at the tensor-position stride
/// prod_{j>i} a_j. Together these rows generate all M rows of
/// group_unitary(g) under element-wise multiplication; for (2,...,2) they
/// are the rows 2^k.
std::vector<std::size_t> generator_rows(const GroupSpec &g);

} // namespace swaptest
