// Compiles a random graph's adjacency matrix into a Pauli sum, prints the
// terms and the circuit-cost summary, then reconstructs the matrix to show
// the round trip is exact.

#include <complex>
#include <iostream>

#include "gvqe/gvqe.hpp"

int main() {
    using namespace gvqe;

    const Graph g = generate_random_graph(5, 0.5, false, 7);
    std::cout << "graph: " << g.n_vertices << " vertices, " << g.edges.size() << " edges\n";

    const SquareMatrix a = adjacency_matrix(g);
    std::cout << "padded matrix dimension: " << a.dim << "\n\n";

    const PauliSum h = pauli_decompose(a);
    std::cout << render_text(h);

    const GateCost cost = gate_cost(h);
    std::cout << "\nterms: " << cost.term_count << ", max locality: " << cost.max_locality
              << ", gate estimate: " << cost.gate_estimate << "\n";

    const ComplexMatrix back = pauli_to_matrix(h);
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t c = 0; c < a.dim; ++c)
            worst = std::max(worst, std::abs(back.at(r, c) - cxd(a.at(r, c), 0.0)));
    std::cout << "max reconstruction error: " << worst << "\n";
    return 0;
}
