#include <catch2/catch.hpp>

#include <cmath>

#include "gvqe/fit.hpp"

using namespace gvqe;

TEST_CASE("quadratic data fits exactly", "[fit]") {
    std::vector<double> xs, ys;
    for (int x = -3; x <= 3; ++x) {
        xs.push_back(x);
        ys.push_back(static_cast<double>(x) * x);
    }
    const FitReport rep = fit_polynomial(xs, ys, 2);
    CHECK(rep.coefficients[0] == Approx(0.0).margin(1e-10));
    CHECK(rep.coefficients[1] == Approx(0.0).margin(1e-10));
    CHECK(rep.coefficients[2] == Approx(1.0));
    CHECK(rep.r_squared == Approx(1.0));
}

TEST_CASE("constant data and the degenerate R^2 convention", "[fit]") {
    const std::vector<double> xs{1, 2, 3, 4};
    const std::vector<double> ys{5, 5, 5, 5};
    const FitReport rep = fit_polynomial(xs, ys, 0);
    CHECK(rep.coefficients[0] == Approx(5.0));
    CHECK(rep.r_squared == 1.0);  // SS_tot = 0 with vanishing residuals
}

TEST_CASE("exponential fits", "[fit]") {
    std::vector<double> xs, pow2, scaled_e;
    for (int x = 0; x <= 6; ++x) {
        xs.push_back(x);
        pow2.push_back(std::pow(2.0, x));
        scaled_e.push_back(3.0 * std::exp(x));
    }
    const FitReport two = fit_exponential(xs, pow2);
    CHECK(two.coefficients[0] == Approx(1.0));
    CHECK(two.coefficients[1] == Approx(2.0));
    CHECK(two.r_squared == Approx(1.0));
    CHECK(two.r_squared_log == Approx(1.0));

    const FitReport e3 = fit_exponential(xs, scaled_e);
    CHECK(e3.coefficients[0] == Approx(3.0));
    CHECK(e3.coefficients[1] == Approx(std::exp(1.0)));
}

TEST_CASE("fit input validation", "[fit]") {
    CHECK_THROWS_AS(fit_exponential({1, 2, 3}, {1, 0, 2}), DomainError);
    CHECK_THROWS_AS(fit_exponential({1, 2, 3}, {1, -1, 2}), DomainError);
    CHECK_THROWS_AS(fit_polynomial({1, 2}, {1, 2, 3}, 1), DomainError);
    CHECK_THROWS_AS(fit_polynomial({1, 2}, {1, 2}, 3), DomainError);
    // Identical x values leave the quadratic design rank-deficient.
    CHECK_THROWS_AS(fit_polynomial({2, 2, 2}, {1, 2, 3}, 2), FitError);
}

TEST_CASE("fit report json schema", "[fit]") {
    const FitReport rep = fit_polynomial({0, 1, 2, 3}, {0, 1, 4, 9}, 2);
    const auto j = to_json(rep);
    CHECK(j["model"] == "polynomial");
    CHECK(j["degree_or_base"] == 2.0);
    CHECK(j["coefficients"].size() == 3);
    CHECK(j.contains("r_squared"));
}
