#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "gvqe/errors.hpp"
#include "gvqe/pauli.hpp"
#include "gvqe/rng.hpp"

namespace gvqe {

// 2^n complex amplitudes; qubit 0 is the least-significant bit of the index.
struct StateVector {
    int n_qubits = 0;
    std::vector<cxd> amps;

    static StateVector zero_state(int n_qubits) {
        StateVector s;
        s.n_qubits = n_qubits;
        s.amps.assign(std::size_t{1} << n_qubits, cxd{});
        s.amps[0] = 1.0;
        return s;
    }

    double norm_squared() const {
        double acc = 0.0;
        for (const auto& a : amps) acc += std::norm(a);
        return acc;
    }
};

// Gate conventions: RX(t) = exp(-i t X / 2), RZ(t) = exp(-i t Z / 2),
// CNOT control is the named qubit, H and S are the usual single-qubit gates.

inline void apply_rx(StateVector& s, int q, double theta) {
    const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
    const cxd m00(c, 0.0), m01(0.0, -sn);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (i & bit) continue;
        const cxd a0 = s.amps[i], a1 = s.amps[i | bit];
        s.amps[i] = m00 * a0 + m01 * a1;
        s.amps[i | bit] = m01 * a0 + m00 * a1;
    }
}

inline void apply_rz(StateVector& s, int q, double theta) {
    const cxd e0 = std::polar(1.0, -theta / 2.0), e1 = std::polar(1.0, theta / 2.0);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < s.amps.size(); ++i) s.amps[i] *= (i & bit) ? e1 : e0;
}

inline void apply_h(StateVector& s, int q) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < s.amps.size(); ++i) {
        if (i & bit) continue;
        const cxd a0 = s.amps[i], a1 = s.amps[i | bit];
        s.amps[i] = inv_sqrt2 * (a0 + a1);
        s.amps[i | bit] = inv_sqrt2 * (a0 - a1);
    }
}

inline void apply_s(StateVector& s, int q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < s.amps.size(); ++i)
        if (i & bit) s.amps[i] *= cxd(0.0, 1.0);
}

inline void apply_cnot(StateVector& s, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < s.amps.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(s.amps[i], s.amps[i | tbit]);
}

// Layered hardware-efficient ansatz: per layer, RX then RZ on every qubit
// (an independent angle for each rotation), then a CNOT chain on (q, q+1).
// The ring flag closes the chain with CNOT(n-1, 0).
struct AnsatzConfig {
    int n_qubits = 1;
    int layers = 1;
    bool ring = false;

    int param_count() const { return 2 * n_qubits * layers; }
};

inline StateVector apply_ansatz(const AnsatzConfig& cfg, const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != cfg.param_count())
        throw DomainError("theta length must be 2 * n_qubits * layers");
    StateVector s = StateVector::zero_state(cfg.n_qubits);
    std::size_t k = 0;
    for (int layer = 0; layer < cfg.layers; ++layer) {
        for (int q = 0; q < cfg.n_qubits; ++q) {
            apply_rx(s, q, theta[k++]);
            apply_rz(s, q, theta[k++]);
        }
        for (int q = 0; q + 1 < cfg.n_qubits; ++q) apply_cnot(s, q, q + 1);
        if (cfg.ring && cfg.n_qubits >= 2) apply_cnot(s, cfg.n_qubits - 1, 0);
    }
    return s;
}

// Pauli sums pre-lowered to bit masks so repeated expectation evaluations
// skip the per-letter dispatch.
struct CompiledSum {
    int n_qubits = 0;
    struct Term {
        cxd coeff;
        std::uint64_t flip;
        std::uint64_t phase_yz;
        cxd y_phase;
    };
    std::vector<Term> terms;
};

inline CompiledSum compile_sum(const PauliSum& h) {
    CompiledSum c;
    c.n_qubits = h.n_qubits;
    for (const auto& t : h.terms) {
        detail::check_word(t.word, h.n_qubits);
        const auto m = detail::masks_for(t.word);
        c.terms.push_back({t.coeff, m.flip, m.phase_yz, m.y_phase});
    }
    return c;
}

inline cxd expectation_compiled(const CompiledSum& h, const StateVector& psi) {
    if (h.n_qubits != psi.n_qubits) throw DomainError("operator/state qubit count mismatch");
    cxd total = 0.0;
    for (const auto& t : h.terms) {
        cxd acc = 0.0;
        for (std::size_t i = 0; i < psi.amps.size(); ++i) {
            const double sign = (std::popcount(i & t.phase_yz) & 1) ? -1.0 : 1.0;
            acc += std::conj(psi.amps[i]) * sign * psi.amps[i ^ t.flip];
        }
        total += t.coeff * t.y_phase * acc;
    }
    return total;
}

// <psi|H|psi> term by term, O(2^n) per term. Hermitian sums give a real
// value up to rounding.
inline cxd expectation_exact(const PauliSum& h, const StateVector& psi) {
    return expectation_compiled(compile_sum(h), psi);
}

inline bool is_hermitian(const PauliSum& h, double eps = 1e-12) {
    for (const auto& t : h.terms)
        if (std::abs(t.coeff.imag()) > eps) return false;
    return true;
}

// Shot-based estimator: every term is rotated into its measurement basis
// (H for X; S then H for Y under the conjugated-Y convention), bitstrings are
// sampled from the rotated distribution, and the +-1 parities over the term's
// support are averaged. Unbiased for Hermitian sums.
inline double expectation_sampled(const PauliSum& h, const StateVector& psi, int shots,
                                  std::uint64_t seed) {
    if (shots < 1) throw DomainError("shots must be >= 1");
    if (!is_hermitian(h))
        throw DomainError(
            "expectation_sampled needs a Hermitian sum (real coefficients); "
            "use expectation_exact or pass the Hermitian part");
    double total = 0.0;
    const std::size_t dim = psi.amps.size();
    std::vector<double> cdf(dim);
    for (std::size_t ti = 0; ti < h.terms.size(); ++ti) {
        const auto& term = h.terms[ti];
        detail::check_word(term.word, h.n_qubits);
        const auto masks = detail::masks_for(term.word);
        const std::uint64_t support = masks.flip | masks.phase_yz;
        if (support == 0) {
            total += term.coeff.real();  // identity term, parity always +1
            continue;
        }
        StateVector rotated = psi;
        for (int q = 0; q < h.n_qubits; ++q) {
            const char letter = term.word[static_cast<std::size_t>(h.n_qubits - 1 - q)];
            if (letter == 'X') {
                apply_h(rotated, q);
            } else if (letter == 'Y') {
                apply_s(rotated, q);
                apply_h(rotated, q);
            }
        }
        double running = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            running += std::norm(rotated.amps[i]);
            cdf[i] = running;
        }
        SplitMix64 rng(derive_seed(seed, ti));
        long long parity_sum = 0;
        for (int shot = 0; shot < shots; ++shot) {
            const double u = rng.next_double() * running;
            const std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            parity_sum += (std::popcount(std::min(idx, dim - 1) & support) & 1) ? -1 : 1;
        }
        total += term.coeff.real() * static_cast<double>(parity_sum) / static_cast<double>(shots);
    }
    return total;
}

// Probability mass on basis states at or above first_padded_index; diagnostic
// for optimum states of zero-padded matrices.
inline double weight_from_index(const StateVector& s, std::size_t first_padded_index) {
    double acc = 0.0;
    for (std::size_t i = first_padded_index; i < s.amps.size(); ++i) acc += std::norm(s.amps[i]);
    return acc;
}

inline nlohmann::json amplitudes_json(const StateVector& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : s.amps) arr.push_back({a.real(), a.imag()});
    return arr;
}

}  // namespace gvqe
