#pragma once

#include "swaptest/complex_matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace swaptest {

/// Statevector over M qudit registers of local dimension d plus a block of
/// ancilla qubits. Register 0 carries the tested state, registers 1..M-1
/// the reference copies; ancillas occupy the most-significant index block.
struct QuditState {
    int local_dim = 2;
    std::size_t register_count = 0;
    std::size_t ancilla_count = 0;
    std::vector<Complex> amplitudes;

    std::size_t register_dim() const; // d^register_count
    double norm_squared() const;
};

enum class LayoutVariant {
    full,      // n layers, M*log2(M)/2 swaps, order-independent
    simplified // n layers, M-1 swaps, fixed ascending order
};

/// One controlled layer: a single ancilla controls a product of disjoint
/// register swaps.
struct ControlledSwapLayer {
    std::size_t control_ancilla = 0;
    std::vector<std::pair<std::size_t, std::size_t>> register_pairs;
};

struct CircuitLayout {
    std::size_t register_count = 0; // M = 2^n
    LayoutVariant variant = LayoutVariant::full;
    std::vector<ControlledSwapLayer> layers;

    std::size_t ancilla_count() const { return layers.size(); }
    std::size_t swap_count() const;
};

/// Swap circuit of order M. Full variant, layer k: pairs
/// (j*2^{k+1}+i, j*2^{k+1}+i+2^k); simplified variant, layer k: pairs
/// (l, l+2^k) for l < 2^k, which must be applied in ascending order.
CircuitLayout build_layout(std::size_t m, LayoutVariant variant);

/// Runs the circuit on |phi> in register 0 and M-1 copies of |psi>:
/// Hadamards on the ancillas, the controlled-swap layers, Hadamards again.
/// Returns the full pre-measurement state (norm 1).
QuditState simulate(const CircuitLayout &layout, const std::vector<Complex> &phi,
                    const std::vector<Complex> &psi);

/// Probability that every ancilla reads 0, i.e. the squared norm of the
/// all-zero-ancilla block. Equals 1/M + (M-1)/M |<phi|psi>|^2.
double accept_probability(const CircuitLayout &layout, const std::vector<Complex> &phi,
                          const std::vector<Complex> &psi);

double all_zero_ancilla_probability(const QuditState &state);

/// Unnormalised register state after projecting the ancillas onto zero:
/// the symmetrised superposition (1/M)(|phi psi...psi> + ... + |psi...psi phi>).
QuditState project_all_zero_ancillas(const QuditState &state);

QuditState post_measurement_state(const CircuitLayout &layout, const std::vector<Complex> &phi,
                                  const std::vector<Complex> &psi);

inline constexpr std::size_t kSimulateMaxQubits = 22;

/// One-sided-error floor for any identity test of the given states:
/// (1/M!) sum_sigma prod_k <psi_k|psi_sigma(k)>, the symmetric-subspace
/// projection weight. Real within 1e-12 for normalised inputs.
double symmetric_bound(const std::vector<std::vector<Complex>> &states);

inline constexpr std::size_t kSymmetricBoundMaxStates = 6;

/// Smallest copy count N with N >= 1/epsilon - 1 (programmable projective
/// measurement with error epsilon needs at least this many references).
int copies_lower_bound(double epsilon);

} // namespace swaptest
