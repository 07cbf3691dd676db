// Extreme eigenvalues and the deflated full spectrum of the complete graph
// on four vertices, next to the classical reference.

#include <iostream>

#include "gvqe/gvqe.hpp"

int main() {
    using namespace gvqe;

    const Graph k4 = generate_random_graph(4, 1.0, false, 1);
    const SquareMatrix a = adjacency_matrix(k4);
    const PauliSum h = pauli_decompose(a);

    VqeConfig cfg;
    cfg.layers = 3;
    cfg.restarts = 3;
    cfg.seed = 11;

    const VqeResult lo = vqe_min(h, cfg);
    const VqeResult hi = vqe_max(h, cfg);
    std::cout << "variational min: " << lo.eigenvalue << "  (" << lo.evaluations
              << " evaluations, " << lo.wall_time_ms << " ms)\n";
    std::cout << "variational max: " << hi.eigenvalue << "  (" << hi.evaluations
              << " evaluations, " << hi.wall_time_ms << " ms)\n";

    const auto oracle = classical_eig_symmetric(a);
    std::cout << "oracle spectrum:";
    for (double v : oracle.values) std::cout << ' ' << v;
    std::cout << '\n';

    const SpectrumResult spectrum = full_spectrum(a, 4, cfg);
    std::cout << "deflated spectrum:";
    for (double v : spectrum.eigenvalues) std::cout << ' ' << v;
    std::cout << '\n';
    return 0;
}
