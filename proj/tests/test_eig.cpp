#include <catch2/catch.hpp>

#include <cmath>

#include "gvqe/eig.hpp"
#include "gvqe/graph.hpp"

using namespace gvqe;

namespace {

SquareMatrix random_symmetric(std::size_t dim, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SquareMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = r; c < dim; ++c) {
            const double v = 2.0 * rng.next_double() - 1.0;
            m.at(r, c) = v;
            m.at(c, r) = v;
        }
    return m;
}

}  // namespace

TEST_CASE("eigenvalues of small closed forms", "[oracle]") {
    const auto x = classical_eig_symmetric(SquareMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(x.values[0] == Approx(1.0));
    CHECK(x.values[1] == Approx(-1.0));

    const Graph k4 = generate_random_graph(4, 1.0, false, 1);
    const auto ek4 = classical_eig_symmetric(adjacency_matrix(k4));
    CHECK(ek4.values[0] == Approx(3.0));
    for (int k = 1; k < 4; ++k) CHECK(ek4.values[k] == Approx(-1.0));
}

TEST_CASE("cycle graph laplacian matches the circulant closed form", "[oracle]") {
    Graph c4(4, false);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(0, 3);
    const auto eig = classical_eig_symmetric(laplacian_matrix(c4, MatrixKind::UndirectedLaplacian));
    // 2 - 2 cos(2 pi k / 4) for k = 0..3, sorted descending: {4, 2, 2, 0}.
    std::vector<double> expected;
    for (int k = 0; k < 4; ++k) expected.push_back(2.0 - 2.0 * std::cos(2.0 * M_PI * k / 4.0));
    std::sort(expected.rbegin(), expected.rend());
    for (int k = 0; k < 4; ++k) CHECK(eig.values[k] == Approx(expected[k]).margin(1e-10));
}

TEST_CASE("oracle rejects asymmetric input", "[oracle]") {
    CHECK_THROWS_AS(classical_eig_symmetric(SquareMatrix::from_rows({{0, 1}, {0, 0}})), DomainError);
}

TEST_CASE("eigenvectors are orthonormal and satisfy the residual bound", "[oracle]") {
    for (std::size_t dim : {4u, 8u, 16u}) {
        const SquareMatrix m = random_symmetric(dim, 1234 + dim);
        const auto eig = classical_eig_symmetric(m);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                double dot = 0.0;
                for (std::size_t r = 0; r < dim; ++r) dot += eig.vectors.at(r, a) * eig.vectors.at(r, b);
                CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-8);
            }
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t r = 0; r < dim; ++r) {
                double mv = 0.0;
                for (std::size_t c = 0; c < dim; ++c) mv += m.at(r, c) * eig.vectors.at(c, k);
                CHECK(std::abs(mv - eig.values[k] * eig.vectors.at(r, k)) <= 1e-8);
            }
        }
        double value_sum = 0.0;
        for (double v : eig.values) value_sum += v;
        CHECK(value_sum == Approx(trace(m)).margin(1e-8));
    }
}

TEST_CASE("trace identity on graph matrices", "[oracle]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = generate_random_graph(6, 0.5, false, seed);
        const auto adj = classical_eig_symmetric(adjacency_matrix(g));
        double sum = 0.0;
        for (double v : adj.values) sum += v;
        CHECK(std::abs(sum) <= 1e-8);  // adjacency has zero trace

        const auto lap = classical_eig_symmetric(laplacian_matrix(g, MatrixKind::UndirectedLaplacian));
        sum = 0.0;
        for (double v : lap.values) sum += v;
        CHECK(sum == Approx(2.0 * static_cast<double>(g.edges.size())).margin(1e-8));
    }
}

TEST_CASE("jacobi agrees with characteristic polynomial roots", "[oracle]") {
    // 2x2 closed form and a corpus of 4x4 matrices, both via the independent
    // char-poly route.
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const SquareMatrix m2 = random_symmetric(2, seed);
        const auto eig2 = classical_eig_symmetric(m2);
        const double tr = m2.at(0, 0) + m2.at(1, 1);
        const double det = m2.at(0, 0) * m2.at(1, 1) - m2.at(0, 1) * m2.at(1, 0);
        const double disc = std::sqrt(tr * tr / 4.0 - det);
        CHECK(eig2.values[0] == Approx(tr / 2.0 + disc).margin(1e-10));
        CHECK(eig2.values[1] == Approx(tr / 2.0 - disc).margin(1e-10));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SquareMatrix m4 = random_symmetric(4, 500 + seed);
        const auto jacobi = classical_eig_symmetric(m4);
        auto roots = eigenvalue_real_parts(m4);
        REQUIRE(roots.size() == 4);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(jacobi.values[k] == Approx(roots[k]).margin(1e-7));
    }
}

TEST_CASE("symmetric part", "[oracle]") {
    const SquareMatrix s = symmetric_part(SquareMatrix::from_rows({{0, 1}, {0, 0}}));
    CHECK(s.at(0, 1) == 0.5);
    CHECK(s.at(1, 0) == 0.5);

    const SquareMatrix m = random_symmetric(4, 77);
    const SquareMatrix twice = symmetric_part(m);
    for (std::size_t k = 0; k < m.entries.size(); ++k) CHECK(twice.entries[k] == m.entries[k]);

    const auto eig =
        classical_eig_symmetric(symmetric_part(SquareMatrix::from_rows({{0, 2}, {0, 0}})));
    CHECK(eig.values[0] == Approx(1.0));
    CHECK(eig.values[1] == Approx(-1.0));
}

TEST_CASE("real parts of a non-symmetric spectrum", "[oracle]") {
    // Nilpotent: double root at zero.
    for (double re : eigenvalue_real_parts(SquareMatrix::from_rows({{0, 2}, {0, 0}})))
        CHECK(std::abs(re) < 1e-6);
    // Rotation generator: conjugate pair +-i.
    for (double re : eigenvalue_real_parts(SquareMatrix::from_rows({{0, -1}, {1, 0}})))
        CHECK(std::abs(re) < 1e-9);
    // Directed triangle 0->1->2->0 has eigenvalues {1, w, w^2}.
    Graph tri(4, true);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    const auto parts = eigenvalue_real_parts(adjacency_matrix(tri));
    CHECK(parts.front() == Approx(1.0).margin(1e-9));
    CHECK(parts.back() == Approx(-0.5).margin(1e-9));

    CHECK_THROWS_AS(eigenvalue_real_parts(SquareMatrix(32)), ResourceError);
}
