#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "gvqe/errors.hpp"
#include "gvqe/matrix.hpp"
#include "gvqe/nelder_mead.hpp"
#include "gvqe/pauli.hpp"
#include "gvqe/rng.hpp"
#include "gvqe/statevector.hpp"

namespace gvqe {

struct VqeConfig {
    int layers = 3;
    int shots = 0;             // 0 = exact expectation
    int max_iterations = 0;    // 0 = auto: 200 * parameter count
    double tolerance = 0.0;    // 0 = auto: 1e-6 exact, 1e-3 sampled
    int restarts = 1;
    std::uint64_t seed = 0;
    bool ring = false;         // CNOT chain by default, optional closing gate

    // Called with every objective value when set; used for diagnostics such
    // as verifying the variational bound over a whole run.
    std::function<void(double)> on_evaluation;

    int resolved_max_iterations(int param_count) const {
        return max_iterations > 0 ? max_iterations : 200 * param_count;
    }
    double resolved_tolerance() const {
        if (tolerance > 0.0) return tolerance;
        return shots > 0 ? 1e-3 : 1e-6;
    }
};

struct VqeResult {
    double eigenvalue = 0.0;
    std::vector<double> theta;
    StateVector state;
    int iterations = 0;
    int evaluations = 0;
    double wall_time_ms = 0.0;
    int restarts_used = 0;
    double padded_weight = 0.0;  // filled by callers that know the true vertex count
};

// Minimizes Re<psi(theta)|H|psi(theta)> over the layered ansatz with
// Nelder-Mead, keeping the best of `restarts` random initializations
// (theta uniform in [0, 2pi), one substream per restart).
inline VqeResult vqe_min(const PauliSum& h, const VqeConfig& cfg) {
    if (cfg.restarts < 1) throw DomainError("restarts must be >= 1");
    if (cfg.layers < 1) throw DomainError("layers must be >= 1");
    if (cfg.shots > 0 && !is_hermitian(h))
        throw DomainError("sampled expectation requires a Hermitian sum");

    const AnsatzConfig ansatz{h.n_qubits, cfg.layers, cfg.ring};
    const int params = ansatz.param_count();
    const CompiledSum compiled = compile_sum(h);

    const auto t0 = std::chrono::steady_clock::now();
    VqeResult best;
    bool have_best = false;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        int eval_counter = 0;
        auto objective = [&](const std::vector<double>& theta) {
            const StateVector psi = apply_ansatz(ansatz, theta);
            double value;
            if (cfg.shots > 0) {
                const std::uint64_t shot_seed =
                    derive_seed(derive_seed(cfg.seed, 0x5A000000ull + restart), eval_counter++);
                value = expectation_sampled(h, psi, cfg.shots, shot_seed);
            } else {
                value = expectation_compiled(compiled, psi).real();
            }
            if (cfg.on_evaluation) cfg.on_evaluation(value);
            return value;
        };

        SplitMix64 init_rng(derive_seed(cfg.seed, restart));
        std::vector<double> theta0(params);
        for (double& t : theta0) t = 2.0 * M_PI * init_rng.next_double();

        const NelderMeadResult nm = nelder_mead(objective, theta0, cfg.resolved_tolerance(),
                                                cfg.resolved_max_iterations(params));
        if (!have_best || nm.value < best.eigenvalue) {
            best.eigenvalue = nm.value;
            best.theta = nm.x;
            have_best = true;
        }
        best.iterations += nm.iterations;
        best.evaluations += nm.evaluations;
    }
    best.state = apply_ansatz(ansatz, best.theta);
    best.restarts_used = cfg.restarts;
    best.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return best;
}

// Maximum eigenvalue via the negated sum; exactly -vqe_min(-H) for the same
// configuration.
inline VqeResult vqe_max(const PauliSum& h, const VqeConfig& cfg) {
    PauliSum negated{h.n_qubits, {}};
    for (const auto& t : h.terms) negated.terms.push_back({-t.coeff, t.word});
    VqeConfig inner = cfg;
    if (cfg.on_evaluation)
        inner.on_evaluation = [&cfg](double v) { cfg.on_evaluation(-v); };
    VqeResult r = vqe_min(negated, inner);
    r.eigenvalue = -r.eigenvalue;
    return r;
}

namespace detail {

inline SquareMatrix subtract_outer(const SquareMatrix& m, double weight,
                                   const std::vector<double>& v) {
    double norm2 = 0.0;
    for (double a : v) norm2 += a * a;
    if (!(norm2 > 0.0)) throw DomainError("deflation vector must be non-zero");
    SquareMatrix out = m;
    const double scale = weight / norm2;
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c) out.at(r, c) -= scale * v[r] * v[c];
    return out;
}

// Principal real direction of a complex vector: the real combination of
// Re(v) and Im(v) with the largest norm. Equal to v up to scale whenever v is
// a real vector times a global phase, so the conjugate outer product
// v v* / |v|^2 and the real outer product of the reduced vector coincide
// there. A genuinely complex v (possible inside a degenerate eigenspace)
// spans two real directions; deflating the dominant one keeps the update
// rank-1 so the rest of the spectrum is left intact.
inline std::vector<double> principal_real_direction(const std::vector<cxd>& v) {
    double gaa = 0.0, gbb = 0.0, gab = 0.0;
    for (const auto& a : v) {
        gaa += a.real() * a.real();
        gbb += a.imag() * a.imag();
        gab += a.real() * a.imag();
    }
    if (!(gaa + gbb > 0.0)) throw DomainError("deflation vector must be non-zero");
    const double half_gap = 0.5 * (gaa - gbb);
    const double top = 0.5 * (gaa + gbb) + std::sqrt(half_gap * half_gap + gab * gab);
    double ca, cb;  // direction of the top eigenvector of [[gaa, gab], [gab, gbb]]
    if (std::abs(top - gaa) > std::abs(top - gbb)) {
        ca = gab;
        cb = top - gaa;
    } else {
        ca = top - gbb;
        cb = gab;
    }
    const double norm = std::hypot(ca, cb);
    if (norm == 0.0) {
        ca = 1.0;  // spherical a/b Gram: any combination works
        cb = 0.0;
    } else {
        ca /= norm;
        cb /= norm;
    }
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ca * v[i].real() + cb * v[i].imag();
    return out;
}

}  // namespace detail

// Hotelling deflation M - lambda v v* / |v|^2: v becomes an eigenvector of
// the result with eigenvalue ~0. Defined for the symmetric path only.
inline SquareMatrix deflate(const SquareMatrix& m, double lambda, const std::vector<double>& v) {
    if (max_asymmetry(m) > 1e-12) throw DomainError("deflation requires a symmetric matrix");
    if (v.size() != m.dim) throw DomainError("deflation vector length mismatch");
    return detail::subtract_outer(m, lambda, v);
}

inline SquareMatrix deflate(const SquareMatrix& m, double lambda, const StateVector& v) {
    if (max_asymmetry(m) > 1e-12) throw DomainError("deflation requires a symmetric matrix");
    if (v.amps.size() != m.dim) throw DomainError("deflation vector length mismatch");
    return detail::subtract_outer(m, lambda, detail::principal_real_direction(v.amps));
}

struct SpectrumResult {
    std::vector<double> eigenvalues;  // discovery order: descending up to solver error
    std::vector<VqeResult> results;
};

// Full spectrum by iterated max-eigenvalue extraction and deflation.
//
// Deflation maps each found eigenvalue to 0, so once any genuine eigenvalue
// is negative the artificial zero directions would dominate every later
// scan. The engine therefore keeps a record of the deflated directions; when
// a scan returns ~0 while artificial zeros are outstanding, the found value
// is attributed to the record, that direction is pushed below a lower bound
// on the remaining spectrum (sum of |coefficients|) instead of being
// re-reported, and the scan repeats. Reported values are genuine eigenvalues
// in discovery order.
inline SpectrumResult full_spectrum(const SquareMatrix& m, std::size_t k, const VqeConfig& cfg) {
    if (max_asymmetry(m) > 1e-12)
        throw DomainError("full_spectrum requires a symmetric matrix (directed kinds unsupported)");
    if (k < 1 || k > m.dim) throw DomainError("k must lie in [1, dim]");

    constexpr double zero_tie_tol = 1e-2;
    SpectrumResult spectrum;
    SquareMatrix current = m;
    std::vector<StateVector> artificial_zeros;

    while (spectrum.eigenvalues.size() < k) {
        const PauliSum h = pauli_decompose(current);
        VqeConfig step_cfg = cfg;
        step_cfg.seed = derive_seed(cfg.seed, spectrum.eigenvalues.size() * 64 +
                                                  artificial_zeros.size());
        const VqeResult r = vqe_max(h, step_cfg);

        if (std::abs(r.eigenvalue) <= zero_tie_tol && !artificial_zeros.empty()) {
            // A deflated direction resurfaced; push it below the spectrum.
            double bound = 1.0;
            for (const auto& t : h.terms) bound += std::abs(t.coeff);
            current = deflate(current, bound, artificial_zeros.back());
            artificial_zeros.pop_back();
            continue;
        }

        spectrum.eigenvalues.push_back(r.eigenvalue);
        spectrum.results.push_back(r);
        if (spectrum.eigenvalues.size() == k) break;
        current = deflate(current, r.eigenvalue, r.state);
        artificial_zeros.push_back(r.state);
    }
    return spectrum;
}

inline nlohmann::json to_json(const VqeResult& r) {
    return {{"eigenvalue", r.eigenvalue},
            {"theta", r.theta},
            {"iterations", r.iterations},
            {"evaluations", r.evaluations},
            {"wall_time_ms", r.wall_time_ms},
            {"restarts_used", r.restarts_used},
            {"padded_weight", r.padded_weight}};
}

inline nlohmann::json to_json(const SpectrumResult& s) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : s.results) results.push_back(to_json(r));
    return {{"eigenvalues", s.eigenvalues}, {"results", results}};
}

}  // namespace gvqe
