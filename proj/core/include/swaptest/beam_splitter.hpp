#pragma once

#include "swaptest/complex_matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace swaptest {

/// One optical layer: a mode permutation conjugating a block of M/2
/// balanced beam splitters. The layer unitary is P (I_{M/2} x H) P^T where
/// P maps mode j to permutation[j]. The coupled mode pairs are ordered:
/// pair (a, b) receives the 2x2 Hadamard in basis order (a, b).
struct BeamSplitterLayer {
    std::vector<std::size_t> permutation;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Layer sequence whose product reconstructs the Hadamard-Walsh transform.
/// log2(M) layers, M*log2(M)/2 balanced beam splitters, no phase shifters.
struct Decomposition {
    std::size_t size = 1;
    std::vector<BeamSplitterLayer> layers;

    std::size_t beam_splitter_count() const;
};

/// Inductive decomposition of hadamard_walsh(n) into n beam-splitter
/// layers: the layer-k permutations satisfy P_k(n+1) = Q (I_2 x P_k(n))
/// with Q the perfect shuffle and P_n(n+1) the identity.
Decomposition decompose_hadamard(int n);

inline constexpr int kDecomposeMaxOrder = 8;

/// Unitary of a single layer as an M x M complex matrix.
ComplexMatrix layer_unitary(const BeamSplitterLayer &layer, std::size_t m);

/// Product of the layer unitaries, in layer order (layer 0 leftmost).
/// Equals hadamard_walsh(n) for the output of decompose_hadamard(n).
ComplexMatrix reconstruct(const Decomposition &d);

} // namespace swaptest
