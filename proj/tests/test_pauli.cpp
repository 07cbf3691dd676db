#include <catch2/catch.hpp>

#include <complex>
#include <cstdlib>

#include "gvqe/eig.hpp"
#include "gvqe/graph.hpp"
#include "gvqe/pauli.hpp"

using namespace gvqe;

namespace {

double reconstruction_error(const SquareMatrix& m) {
    const ComplexMatrix back = pauli_to_matrix(pauli_decompose(m));
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = 0; c < m.dim; ++c)
            worst = std::max(worst, std::abs(back.at(r, c) - cxd(m.at(r, c), 0.0)));
    return worst;
}

SquareMatrix random_signed_matrix(std::size_t dim, std::uint64_t seed, bool symmetric) {
    SplitMix64 rng(seed);
    SquareMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = symmetric ? r : 0; c < dim; ++c) {
            const double v = 2.0 * rng.next_double() - 1.0;
            m.at(r, c) = v;
            if (symmetric) m.at(c, r) = v;
        }
    return m;
}

}  // namespace

TEST_CASE("decompose 2x2 base cases", "[pauli]") {
    const PauliSum x = pauli_decompose(SquareMatrix::from_rows({{0, 1}, {1, 0}}));
    REQUIRE(x.terms.size() == 1);
    CHECK(x.terms[0].word == "X");
    CHECK(x.terms[0].coeff.real() == Approx(1.0));
    CHECK(x.terms[0].coeff.imag() == 0.0);

    // Upper single-entry matrix: (X - iY)/2 under the conjugated-Y convention.
    const PauliSum raise = pauli_decompose(SquareMatrix::from_rows({{0, 1}, {0, 0}}));
    REQUIRE(raise.terms.size() == 2);
    CHECK(raise.terms[0].word == "X");
    CHECK(raise.terms[0].coeff == cxd(0.5, 0.0));
    CHECK(raise.terms[1].word == "Y");
    CHECK(raise.terms[1].coeff == cxd(0.0, -0.5));
    CHECK(reconstruction_error(SquareMatrix::from_rows({{0, 1}, {0, 0}})) < 1e-15);
}

TEST_CASE("decompose complete graph adjacency", "[pauli]") {
    const Graph k4 = generate_random_graph(4, 1.0, false, 1);
    const SquareMatrix a = adjacency_matrix(k4);
    const PauliSum h = pauli_decompose(a);
    REQUIRE(h.terms.size() == 3);
    CHECK(h.terms[0].word == "IX");
    CHECK(h.terms[1].word == "XI");
    CHECK(h.terms[2].word == "XX");
    for (const auto& t : h.terms) CHECK(t.coeff == cxd(1.0, 0.0));
    // Cross-check through the classical oracle: spectrum {3, -1, -1, -1}.
    const auto eig = classical_eig_symmetric(a);
    CHECK(eig.values[0] == Approx(3.0));
    for (int k = 1; k < 4; ++k) CHECK(eig.values[k] == Approx(-1.0));
}

TEST_CASE("pauli laplacian from adjacency sum", "[pauli]") {
    Graph k2(2, false);
    k2.add_edge(0, 1);
    const PauliSum pa = pauli_decompose(adjacency_matrix(k2));
    const PauliSum pl = pauli_laplacian(pa, degree_sequence(k2, MatrixKind::UndirectedLaplacian));
    REQUIRE(pl.terms.size() == 2);
    CHECK(pl.terms[0].word == "I");
    CHECK(pl.terms[0].coeff == cxd(1.0, 0.0));
    CHECK(pl.terms[1].word == "X");
    CHECK(pl.terms[1].coeff == cxd(-1.0, 0.0));

    const Graph empty(2, false);
    const PauliSum pe = pauli_laplacian(pauli_decompose(adjacency_matrix(empty)), {0, 0});
    CHECK(pe.terms.empty());

    Graph arrow(2, true);
    arrow.add_edge(0, 1);
    const PauliSum via_formula = pauli_laplacian(
        pauli_decompose(adjacency_matrix(arrow)),
        degree_sequence(arrow, MatrixKind::DirectedLaplacianIndegree));
    const PauliSum direct =
        pauli_decompose(laplacian_matrix(arrow, MatrixKind::DirectedLaplacianIndegree));
    REQUIRE(via_formula.terms.size() == direct.terms.size());
    for (std::size_t k = 0; k < direct.terms.size(); ++k) {
        CHECK(via_formula.terms[k].word == direct.terms[k].word);
        CHECK(std::abs(via_formula.terms[k].coeff - direct.terms[k].coeff) < 1e-14);
    }

    CHECK_THROWS_AS(pauli_laplacian(pa, {1, 1, 0, 0}), DomainError);
}

TEST_CASE("simplify merges, cancels and orders", "[pauli]") {
    const PauliSum merged = simplify({1, {{0.5, "X"}, {0.5, "X"}}});
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].coeff == cxd(1.0, 0.0));

    CHECK(simplify({1, {{1.0, "Z"}, {-1.0, "Z"}}}).terms.empty());

    const PauliSum unordered = simplify({2, {{1.0, "ZI"}, {1.0, "IX"}, {1.0, "XY"}}});
    CHECK(unordered.terms[0].word == "IX");
    CHECK(unordered.terms[1].word == "XY");
    CHECK(unordered.terms[2].word == "ZI");

    CHECK_THROWS_AS(simplify({2, {{1.0, "Q"}, {1.0, "IX"}}}), DomainError);
}

TEST_CASE("pauli products reduce with the documented phases", "[pauli]") {
    const PauliTerm zx = multiply_terms({1.0, "Z"}, {1.0, "X"});
    CHECK(zx.word == "Y");
    CHECK(zx.coeff == cxd(0.0, -1.0));

    const PauliTerm xz = multiply_terms({1.0, "X"}, {1.0, "Z"});
    CHECK(xz.coeff == cxd(0.0, 1.0));

    // Squares collapse to the identity word.
    for (const char* w : {"X", "Y", "Z"}) {
        const PauliTerm sq = multiply_terms({1.0, w}, {1.0, w});
        CHECK(sq.word == "I");
        CHECK(sq.coeff == cxd(1.0, 0.0));
    }

    // Product inputs simplify like any other term.
    const PauliSum reduced = simplify({1, {{zx.coeff, zx.word}}});
    REQUIRE(reduced.terms.size() == 1);
    CHECK(reduced.terms[0].coeff == cxd(0.0, -1.0));
    CHECK(reduced.terms[0].word == "Y");
}

TEST_CASE("pauli_to_matrix basics", "[pauli]") {
    const ComplexMatrix x = pauli_to_matrix({1, {{1.0, "X"}}});
    CHECK(x.at(0, 1) == cxd(1.0, 0.0));
    CHECK(x.at(1, 0) == cxd(1.0, 0.0));
    CHECK(x.at(0, 0) == cxd(0.0, 0.0));

    const ComplexMatrix zero = pauli_to_matrix({2, {}});
    for (const auto& v : zero.entries) CHECK(v == cxd(0.0, 0.0));

    const ComplexMatrix raise = pauli_to_matrix({1, {{{0.5, 0.0}, "X"}, {{0.0, -0.5}, "Y"}}});
    CHECK(std::abs(raise.at(0, 1) - cxd(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(raise.at(1, 0)) < 1e-15);

    CHECK_THROWS_AS(pauli_to_matrix({12, {}}), ResourceError);
}

TEST_CASE("gate cost accounting", "[pauli]") {
    const GateCost single = gate_cost({1, {{1.0, "X"}}});
    CHECK(single.term_count == 1);
    CHECK(single.max_locality == 1);
    CHECK(single.gate_estimate == 3);

    const GateCost k4 = gate_cost({2, {{1.0, "XI"}, {1.0, "IX"}, {1.0, "XX"}}});
    CHECK(k4.term_count == 3);
    CHECK(k4.max_locality == 2);
    CHECK(k4.gate_estimate == 13);

    const GateCost empty = gate_cost({2, {}});
    CHECK(empty.term_count == 0);
    CHECK(empty.max_locality == 0);
    CHECK(empty.gate_estimate == 0);

    const GateCost identity = gate_cost({2, {{2.5, "II"}}});
    CHECK(identity.gate_estimate == 1);
}

TEST_CASE("round trip over all binary 2x2 matrices", "[pauli]") {
    for (int bits = 0; bits < 16; ++bits) {
        SquareMatrix m(2);
        m.at(0, 0) = bits & 1 ? 1.0 : 0.0;
        m.at(0, 1) = bits & 2 ? 1.0 : 0.0;
        m.at(1, 0) = bits & 4 ? 1.0 : 0.0;
        m.at(1, 1) = bits & 8 ? 1.0 : 0.0;
        CHECK(reconstruction_error(m) <= 1e-12);
    }
}

TEST_CASE("round trip over random graph matrices", "[pauli]") {
    for (int n : {3, 5, 8, 13, 16}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Graph g = generate_random_graph(n, 0.5, n % 2 == 0, seed);
            CHECK(reconstruction_error(adjacency_matrix(g)) <= 1e-12);
        }
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(reconstruction_error(random_signed_matrix(16, seed, false)) <= 1e-12);
}

TEST_CASE("symmetric matrices decompose with real coefficients", "[pauli]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const PauliSum sym = pauli_decompose(random_signed_matrix(8, seed, true));
        for (const auto& t : sym.terms) CHECK(std::abs(t.coeff.imag()) <= 1e-12);
    }
    // and a genuinely asymmetric matrix needs an imaginary coefficient
    const PauliSum dir = pauli_decompose(SquareMatrix::from_rows({{0, 1}, {0, 0}}));
    bool has_imag = false;
    for (const auto& t : dir.terms) has_imag |= std::abs(t.coeff.imag()) > 1e-12;
    CHECK(has_imag);
}

TEST_CASE("decomposition is linear", "[pauli]") {
    const SquareMatrix m1 = random_signed_matrix(8, 21, false);
    const SquareMatrix m2 = random_signed_matrix(8, 22, false);
    const double alpha = 0.75, beta = -1.5;
    SquareMatrix combo(8);
    for (std::size_t k = 0; k < combo.entries.size(); ++k)
        combo.entries[k] = alpha * m1.entries[k] + beta * m2.entries[k];

    PauliSum stitched{3, {}};
    for (const auto& t : pauli_decompose(m1).terms) stitched.terms.push_back({alpha * t.coeff, t.word});
    for (const auto& t : pauli_decompose(m2).terms) stitched.terms.push_back({beta * t.coeff, t.word});
    const PauliSum lhs = pauli_decompose(combo);
    const PauliSum rhs = simplify(stitched);
    REQUIRE(lhs.terms.size() == rhs.terms.size());
    for (std::size_t k = 0; k < lhs.terms.size(); ++k) {
        CHECK(lhs.terms[k].word == rhs.terms[k].word);
        CHECK(std::abs(lhs.terms[k].coeff - rhs.terms[k].coeff) < 1e-12);
    }
}

TEST_CASE("term count stays within the entrywise bound", "[pauli]") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (int n : {4, 8, 16}) {
            const Graph g = generate_random_graph(n, 0.5, false, seed);
            const SquareMatrix a = adjacency_matrix(g);
            CHECK(pauli_decompose(a).terms.size() <= a.dim * a.dim);
        }
    }
}

TEST_CASE("text rendering matches the documented format", "[pauli]") {
    CHECK(render_text(pauli_decompose(SquareMatrix::from_rows({{0, 1}, {1, 0}}))) == "(1.0,0.0) X\n");
    CHECK(render_text(pauli_decompose(SquareMatrix::from_rows({{0, 1}, {0, 0}}))) ==
          "(0.5,0.0) X\n(0.0,-0.5) Y\n");
    CHECK(render_text({2, {}}).empty());
}

TEST_CASE("json export carries the schema fields", "[pauli]") {
    const auto j = to_json(pauli_decompose(SquareMatrix::from_rows({{0, 1}, {0, 0}})));
    CHECK(j["n_qubits"] == 1);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == "X");
    CHECK(j["terms"][0]["re"] == 0.5);
    CHECK(j["terms"][1]["im"] == -0.5);
}
