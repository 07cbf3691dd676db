#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gvqe/errors.hpp"

namespace gvqe {

struct FitReport {
    std::string model;                 // "polynomial" or "exponential"
    int degree = 0;                    // polynomial only
    std::vector<double> coefficients;  // ascending powers, or {a, b} for a*b^x
    double r_squared = 0.0;            // computed in linear space
    double r_squared_log = 0.0;        // exponential only, fit-space quality
    std::vector<double> residuals;     // linear space, y - yhat
};

namespace detail {

// R^2 = 1 - SS_res/SS_tot; degenerate SS_tot = 0 counts as a perfect fit
// when the residuals vanish too, else as no fit.
inline double r_squared_for(const std::vector<double>& ys, const std::vector<double>& fitted) {
    double mean = 0.0;
    for (double y : ys) mean += y;
    mean /= static_cast<double>(ys.size());
    double ss_tot = 0.0, ss_res = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
        ss_res += (ys[i] - fitted[i]) * (ys[i] - fitted[i]);
    }
    if (ss_tot == 0.0) return ss_res < 1e-18 ? 1.0 : 0.0;
    return 1.0 - ss_res / ss_tot;
}

inline std::vector<double> solve_linear(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (std::abs(a[pivot * n + col]) < 1e-12)
            throw FitError("rank-deficient design matrix");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a[r * n + c] * x[c];
        x[r] = acc / a[r * n + r];
    }
    return x;
}

}  // namespace detail

inline double eval_polynomial(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

// Least-squares polynomial via the normal equations.
inline FitReport fit_polynomial(const std::vector<double>& xs, const std::vector<double>& ys,
                                int degree) {
    if (degree < 0) throw DomainError("polynomial degree must be non-negative");
    if (xs.size() != ys.size()) throw DomainError("xs and ys differ in length");
    if (xs.size() < static_cast<std::size_t>(degree) + 1)
        throw DomainError("need at least degree + 1 points");
    const std::size_t k = static_cast<std::size_t>(degree) + 1;
    std::vector<double> ata(k * k, 0.0), aty(k, 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<double> row(k, 1.0);
        for (std::size_t p = 1; p < k; ++p) row[p] = row[p - 1] * xs[i];
        for (std::size_t r = 0; r < k; ++r) {
            aty[r] += row[r] * ys[i];
            for (std::size_t c = 0; c < k; ++c) ata[r * k + c] += row[r] * row[c];
        }
    }
    FitReport rep;
    rep.model = "polynomial";
    rep.degree = degree;
    rep.coefficients = detail::solve_linear(std::move(ata), std::move(aty));
    std::vector<double> fitted;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fitted.push_back(eval_polynomial(rep.coefficients, xs[i]));
        rep.residuals.push_back(ys[i] - fitted.back());
    }
    rep.r_squared = detail::r_squared_for(ys, fitted);
    return rep;
}

// Log-linear least squares for y = a * b^x; requires strictly positive ys.
// r_squared is reported against the original data, r_squared_log against the
// transformed fit space.
inline FitReport fit_exponential(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw DomainError("xs and ys differ in length");
    if (xs.size() < 2) throw DomainError("need at least two points");
    std::vector<double> logy;
    for (double y : ys) {
        if (!(y > 0.0)) throw DomainError("exponential fit requires positive y values");
        logy.push_back(std::log(y));
    }
    const FitReport line = fit_polynomial(xs, logy, 1);
    FitReport rep;
    rep.model = "exponential";
    rep.coefficients = {std::exp(line.coefficients[0]), std::exp(line.coefficients[1])};
    rep.r_squared_log = line.r_squared;
    std::vector<double> fitted;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fitted.push_back(rep.coefficients[0] * std::pow(rep.coefficients[1], xs[i]));
        rep.residuals.push_back(ys[i] - fitted.back());
    }
    rep.r_squared = detail::r_squared_for(ys, fitted);
    return rep;
}

inline nlohmann::json to_json(const FitReport& r) {
    return {{"model", r.model},
            {"degree_or_base", r.model == "polynomial" ? static_cast<double>(r.degree)
                                                       : r.coefficients[1]},
            {"coefficients", r.coefficients},
            {"r_squared", r.r_squared}};
}

}  // namespace gvqe
