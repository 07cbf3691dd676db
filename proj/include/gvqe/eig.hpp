#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "gvqe/errors.hpp"
#include "gvqe/matrix.hpp"

namespace gvqe {

struct EigResult {
    std::vector<double> values;  // descending
    SquareMatrix vectors;        // column k pairs with values[k], orthonormal

    EigResult(std::size_t dim) : vectors(dim) {}
};

// Dense symmetric eigendecomposition by cyclic Jacobi rotations. Serves as
// the classical ground truth the variational results are measured against,
// so it stays independent of the Pauli/simulator path.
inline EigResult classical_eig_symmetric(const SquareMatrix& m) {
    if (max_asymmetry(m) > 1e-12) throw DomainError("matrix is not symmetric");
    const std::size_t n = m.dim;
    std::vector<double> a = m.entries;
    EigResult res(n);
    for (std::size_t i = 0; i < n; ++i) res.vectors.at(i, i) = 1.0;

    auto off_max = [&]() {
        double worst = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) worst = std::max(worst, std::abs(a[p * n + q]));
        return worst;
    };
    double scale = 0.0;
    for (double v : m.entries) scale = std::max(scale, std::abs(v));
    const double stop = scale > 0.0 ? scale * 1e-15 : 0.0;

    for (int sweep = 0; sweep < 100 && off_max() > stop; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= stop) continue;
                const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = res.vectors.at(k, p), vkq = res.vectors.at(k, q);
                    res.vectors.at(k, p) = c * vkp - s * vkq;
                    res.vectors.at(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });
    res.values.resize(n);
    SquareMatrix sorted_vecs(n);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a[order[k] * n + order[k]];
        for (std::size_t r = 0; r < n; ++r) sorted_vecs.at(r, k) = res.vectors.at(r, order[k]);
    }
    res.vectors = std::move(sorted_vecs);
    return res;
}

inline SquareMatrix symmetric_part(const SquareMatrix& m) {
    SquareMatrix out(m.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c) out.at(r, c) = 0.5 * (m.at(r, c) + m.at(c, r));
    return out;
}

inline double trace(const SquareMatrix& m) {
    double t = 0.0;
    for (std::size_t i = 0; i < m.dim; ++i) t += m.at(i, i);
    return t;
}

// Monic characteristic polynomial coefficients [1, c1, ..., cn] by the
// Faddeev-LeVerrier recurrence; exact in double for the small integer
// matrices it is used on.
inline std::vector<double> char_poly(const SquareMatrix& m) {
    const std::size_t n = m.dim;
    std::vector<double> coeff{1.0};
    std::vector<double> mk(n * n, 0.0);
    double ck = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        // mk <- A * mk_prev + c_{k-1} I
        std::vector<double> next(n * n, 0.0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < n; ++j) {
                double acc = 0.0;
                for (std::size_t c = 0; c < n; ++c) acc += m.at(r, c) * mk[c * n + j];
                next[r * n + j] = acc;
            }
        for (std::size_t i = 0; i < n; ++i) next[i * n + i] += ck;
        mk = std::move(next);
        double tr = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) tr += m.at(r, c) * mk[c * n + r];
        ck = -tr / static_cast<double>(k);
        coeff.push_back(ck);
    }
    return coeff;
}

// All complex roots of a monic polynomial by Durand-Kerner iteration.
// Adequate for the low degrees it is used at; repeated roots converge to
// ~sqrt(eps) accuracy.
inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& monic_coeffs) {
    const std::size_t deg = monic_coeffs.size() - 1;
    if (deg == 0) return {};
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = monic_coeffs[0];
        for (std::size_t k = 1; k < monic_coeffs.size(); ++k) acc = acc * z + monic_coeffs[k];
        return acc;
    };
    std::vector<std::complex<double>> z(deg);
    const std::complex<double> seed(0.4, 0.9);
    z[0] = seed;
    for (std::size_t k = 1; k < deg; ++k) z[k] = z[k - 1] * seed;
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0.0;
        for (std::size_t k = 0; k < deg; ++k) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) denom *= z[k] - z[j];
            const std::complex<double> step = eval(z[k]) / denom;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-13) break;
    }
    return z;
}

// Real parts of the full (possibly complex) spectrum, descending. Used as
// the second error baseline for directed-graph matrices; capped because the
// characteristic-polynomial route degrades for large dimensions.
inline std::vector<double> eigenvalue_real_parts(const SquareMatrix& m, std::size_t max_dim = 16) {
    if (m.dim > max_dim)
        throw ResourceError("eigenvalue_real_parts supports dim <= " + std::to_string(max_dim));
    std::vector<double> out;
    for (const auto& root : poly_roots(char_poly(m))) out.push_back(root.real());
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace gvqe
