#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "gvqe/errors.hpp"

namespace gvqe {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
};

// Downhill simplex (Nelder-Mead) with the standard coefficients: reflection 1,
// expansion 2, contraction 0.5, shrink 0.5. Terminates when the sample
// standard deviation of the simplex values drops below tol or after max_iter
// iterations. A simplex whose values tie exactly (symmetric brackets around a
// minimum do this) would otherwise stop arbitrarily far from the optimum, so
// termination additionally waits for the simplex diameter to shrink below
// sqrt(tol). The initial simplex is x0 plus one per-coordinate step.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0, double tol, int max_iter,
                                    double initial_step = 0.25) {
    if (x0.empty()) throw DomainError("nelder_mead needs at least one dimension");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (max_iter < 1) throw DomainError("max_iter must be positive");

    const std::size_t dim = x0.size();
    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        ++result.evaluations;
        if (!std::isfinite(v)) throw OptimizerError("objective returned a non-finite value", x);
        return v;
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    for (std::size_t k = 0; k < dim; ++k) simplex[k + 1][k] += initial_step;
    for (std::size_t k = 0; k <= dim; ++k) values[k] = eval(simplex[k]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), candidate(dim);
    for (result.iterations = 0; result.iterations < max_iter; ++result.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(dim + 1);
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        double diameter = 0.0;
        for (std::size_t k = 0; k <= dim; ++k)
            for (std::size_t j = 0; j < dim; ++j)
                diameter = std::max(diameter, std::abs(simplex[k][j] - simplex[order[0]][j]));
        if (std::sqrt(var / static_cast<double>(dim)) < tol && diameter < std::sqrt(tol)) break;

        const std::size_t best = order[0], second_worst = order[dim - 1], worst = order[dim];
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k <= dim; ++k) {
            if (k == worst) continue;
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[k][j];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        for (std::size_t j = 0; j < dim; ++j)
            candidate[j] = centroid[j] + alpha * (centroid[j] - simplex[worst][j]);
        const double reflected = eval(candidate);

        if (reflected < values[best]) {
            std::vector<double> expanded(dim);
            for (std::size_t j = 0; j < dim; ++j)
                expanded[j] = centroid[j] + gamma * (candidate[j] - centroid[j]);
            const double expanded_value = eval(expanded);
            if (expanded_value < reflected) {
                simplex[worst] = std::move(expanded);
                values[worst] = expanded_value;
            } else {
                simplex[worst] = candidate;
                values[worst] = reflected;
            }
        } else if (reflected < values[second_worst]) {
            simplex[worst] = candidate;
            values[worst] = reflected;
        } else {
            const bool outside = reflected < values[worst];
            std::vector<double> contracted(dim);
            if (outside) {
                for (std::size_t j = 0; j < dim; ++j)
                    contracted[j] = centroid[j] + rho * (candidate[j] - centroid[j]);
            } else {
                for (std::size_t j = 0; j < dim; ++j)
                    contracted[j] = centroid[j] - rho * (centroid[j] - simplex[worst][j]);
            }
            const double contracted_value = eval(contracted);
            // outside contraction accepts ties, inside must strictly improve
            // on the worst vertex or the whole simplex shrinks
            const bool accept =
                outside ? contracted_value <= reflected : contracted_value < values[worst];
            if (accept) {
                simplex[worst] = std::move(contracted);
                values[worst] = contracted_value;
            } else {
                for (std::size_t k = 0; k <= dim; ++k) {
                    if (k == best) continue;
                    for (std::size_t j = 0; j < dim; ++j)
                        simplex[k][j] = simplex[best][j] + sigma * (simplex[k][j] - simplex[best][j]);
                    values[k] = eval(simplex[k]);
                }
            }
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

}  // namespace gvqe
