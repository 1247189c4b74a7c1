#include "swaptest/swap_circuit.hpp"

#include "swaptest/photon_statistics.hpp" // inner_product, norm_squared

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swaptest {

namespace {

bool is_power_of_two(std::size_t m) {
    return m >= 2 && std::has_single_bit(m);
}

std::size_t int_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

// In-place H on ancilla qubit k (ancilla bits sit above the register block).
void apply_ancilla_hadamard(QuditState &state, std::size_t k) {
    const std::size_t reg_dim = state.register_dim();
    const std::size_t bit_stride = reg_dim << k;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t total = state.amplitudes.size();
    for (std::size_t base = 0; base < total; base += 2 * bit_stride) {
        for (std::size_t offset = 0; offset < bit_stride; ++offset) {
            Complex &a0 = state.amplitudes[base + offset];
            Complex &a1 = state.amplitudes[base + offset + bit_stride];
            const Complex lo = inv_sqrt2 * (a0 + a1);
            const Complex hi = inv_sqrt2 * (a0 - a1);
            a0 = lo;
            a1 = hi;
        }
    }
}

// Swaps the digits of registers (p, q) on every amplitude whose control
// ancilla is set. The register permutation is an involution, so each
// amplitude pair is visited once.
void apply_controlled_swap(QuditState &state, std::size_t control, std::size_t p, std::size_t q) {
    const std::size_t d = static_cast<std::size_t>(state.local_dim);
    const std::size_t m = state.register_count;
    const std::size_t reg_dim = state.register_dim();
    const std::size_t stride_p = int_pow(d, m - 1 - p);
    const std::size_t stride_q = int_pow(d, m - 1 - q);
    const std::size_t ancilla_dim = std::size_t{1} << state.ancilla_count;
    for (std::size_t a = 0; a < ancilla_dim; ++a) {
        if (((a >> control) & 1U) == 0) {
            continue;
        }
        const std::size_t block = a * reg_dim;
        for (std::size_t r = 0; r < reg_dim; ++r) {
            const std::size_t dp = (r / stride_p) % d;
            const std::size_t dq = (r / stride_q) % d;
            if (dp >= dq) {
                continue; // visit each unordered pair once
            }
            const std::size_t swapped = r + (dq - dp) * stride_p - (dq - dp) * stride_q;
            std::swap(state.amplitudes[block + r], state.amplitudes[block + swapped]);
        }
    }
}

QuditState initial_state(const CircuitLayout &layout, const std::vector<Complex> &phi,
                         const std::vector<Complex> &psi) {
    if (phi.size() != psi.size() || phi.size() < 2) {
        throw std::invalid_argument("swap circuit: states must share a local dimension >= 2");
    }
    constexpr double kNormTol = 1e-9;
    if (!(std::abs(norm_squared(phi) - 1.0) <= kNormTol) ||
        !(std::abs(norm_squared(psi) - 1.0) <= kNormTol)) { // also rejects NaN amplitudes
        throw std::invalid_argument("swap circuit: input states must be normalised");
    }
    const std::size_t d = phi.size();
    const std::size_t m = layout.register_count;
    const std::size_t n = layout.ancilla_count();
    const double qubits = static_cast<double>(m) * std::log2(static_cast<double>(d)) +
                          static_cast<double>(n);
    if (qubits > static_cast<double>(kSimulateMaxQubits) + 1e-9) {
        throw std::invalid_argument("swap circuit: statevector too large to simulate");
    }

    QuditState state;
    state.local_dim = static_cast<int>(d);
    state.register_count = m;
    state.ancilla_count = n;
    state.amplitudes.assign(int_pow(d, m) << n, Complex(0.0, 0.0));

    // Product state phi (x) psi^{(x)(M-1)} in the zero-ancilla block;
    // register 0 is the most significant digit.
    const std::size_t reg_dim = state.register_dim();
    for (std::size_t r = 0; r < reg_dim; ++r) {
        Complex amp(1.0, 0.0);
        std::size_t rest = r;
        for (std::size_t reg = 0; reg < m; ++reg) {
            const std::size_t stride = int_pow(d, m - 1 - reg);
            const std::size_t digit = rest / stride;
            rest %= stride;
            amp *= (reg == 0) ? phi[digit] : psi[digit];
            if (amp == Complex(0.0, 0.0)) {
                break;
            }
        }
        state.amplitudes[r] = amp;
    }
    return state;
}

} // namespace

std::size_t QuditState::register_dim() const {
    return int_pow(static_cast<std::size_t>(local_dim), register_count);
}

double QuditState::norm_squared() const {
    double s = 0.0;
    for (const Complex &z : amplitudes) {
        s += std::norm(z);
    }
    return s;
}

std::size_t CircuitLayout::swap_count() const {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        total += layer.register_pairs.size();
    }
    return total;
}

CircuitLayout build_layout(std::size_t m, LayoutVariant variant) {
    if (!is_power_of_two(m)) {
        throw std::invalid_argument("build_layout: M must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(m));
    CircuitLayout layout;
    layout.register_count = m;
    layout.variant = variant;
    layout.layers.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        ControlledSwapLayer layer;
        layer.control_ancilla = k;
        const std::size_t half = std::size_t{1} << k;
        if (variant == LayoutVariant::full) {
            for (std::size_t j = 0; j < (m >> (k + 1)); ++j) {
                for (std::size_t i = 0; i < half; ++i) {
                    const std::size_t lo = j * (half << 1) + i;
                    layer.register_pairs.emplace_back(lo, lo + half);
                }
            }
        } else {
            for (std::size_t l = 0; l < half; ++l) {
                layer.register_pairs.emplace_back(l, l + half);
            }
        }
        layout.layers.push_back(std::move(layer));
    }
    return layout;
}

QuditState simulate(const CircuitLayout &layout, const std::vector<Complex> &phi,
                    const std::vector<Complex> &psi) {
    QuditState state = initial_state(layout, phi, psi);
    for (std::size_t k = 0; k < state.ancilla_count; ++k) {
        apply_ancilla_hadamard(state, k);
    }
    for (const auto &layer : layout.layers) {
        for (const auto &[p, q] : layer.register_pairs) {
            apply_controlled_swap(state, layer.control_ancilla, p, q);
        }
    }
    for (std::size_t k = 0; k < state.ancilla_count; ++k) {
        apply_ancilla_hadamard(state, k);
    }
    return state;
}

double accept_probability(const CircuitLayout &layout, const std::vector<Complex> &phi,
                          const std::vector<Complex> &psi) {
    return all_zero_ancilla_probability(simulate(layout, phi, psi));
}

double all_zero_ancilla_probability(const QuditState &state) {
    const std::size_t reg_dim = state.register_dim();
    double p = 0.0;
    for (std::size_t r = 0; r < reg_dim; ++r) {
        p += std::norm(state.amplitudes[r]);
    }
    return p;
}

QuditState project_all_zero_ancillas(const QuditState &state) {
    QuditState out;
    out.local_dim = state.local_dim;
    out.register_count = state.register_count;
    out.ancilla_count = 0;
    const std::size_t reg_dim = state.register_dim();
    out.amplitudes.assign(state.amplitudes.begin(),
                          state.amplitudes.begin() + static_cast<std::ptrdiff_t>(reg_dim));
    return out;
}

QuditState post_measurement_state(const CircuitLayout &layout, const std::vector<Complex> &phi,
                                  const std::vector<Complex> &psi) {
    return project_all_zero_ancillas(simulate(layout, phi, psi));
}

double symmetric_bound(const std::vector<std::vector<Complex>> &states) {
    const std::size_t m = states.size();
    if (m == 0 || m > kSymmetricBoundMaxStates) {
        throw std::invalid_argument("symmetric_bound: state count out of range");
    }
    constexpr double kNormTol = 1e-9;
    for (const auto &s : states) {
        if (s.size() != states.front().size()) {
            throw std::invalid_argument("symmetric_bound: states must share a dimension");
        }
        if (!(std::abs(norm_squared(s) - 1.0) <= kNormTol)) {
            throw std::invalid_argument("symmetric_bound: states must be normalised");
        }
    }
    // Gram matrix g_{ij} = <psi_i|psi_j>; the bound is its permanent / M!.
    std::vector<std::vector<Complex>> gram(m, std::vector<Complex>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            gram[i][j] = inner_product(states[i], states[j]);
        }
    }
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total(0.0, 0.0);
    double factorial = 1.0;
    for (std::size_t k = 2; k <= m; ++k) {
        factorial *= static_cast<double>(k);
    }
    do {
        Complex prod(1.0, 0.0);
        for (std::size_t k = 0; k < m; ++k) {
            prod *= gram[k][perm[k]];
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Complex bound = total / factorial;
    if (std::abs(bound.imag()) > 1e-12) {
        throw std::domain_error("symmetric_bound: imaginary residue above 1e-12");
    }
    return bound.real();
}

int copies_lower_bound(double epsilon) {
    if (!(epsilon > 0.0) || epsilon > 1.0) {
        throw std::invalid_argument("copies_lower_bound: epsilon must lie in (0, 1]");
    }
    // Tiny slack so epsilon = 1/M computed in floating point lands on M-1.
    const double v = 1.0 / epsilon - 1.0;
    const double n = std::ceil(v - 1e-9);
    return n <= 0.0 ? 0 : static_cast<int>(n);
}

} // namespace swaptest
