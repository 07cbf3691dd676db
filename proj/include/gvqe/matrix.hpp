#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gvqe/errors.hpp"
#include "gvqe/graph.hpp"

namespace gvqe {

using cxd = std::complex<double>;

// Dense real matrix whose dimension is a power of two, row-major storage.
// Graph matrices are padded with zero rows/columns up to the next power of
// two so they act on a whole number of qubits; padding only adds eigenvalue-0
// directions.
struct SquareMatrix {
    std::size_t dim = 1;
    std::vector<double> entries;

    explicit SquareMatrix(std::size_t d) : dim(d), entries(d * d, 0.0) {
        if (d == 0 || !std::has_single_bit(d))
            throw DomainError("matrix dimension must be a power of two");
    }

    double& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    double at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    static SquareMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        SquareMatrix m(rows.size());
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != m.dim) throw DomainError("ragged matrix literal");
            std::size_t c = 0;
            for (double v : row) m.at(r, c++) = v;
            ++r;
        }
        return m;
    }
};

// Complex-valued counterpart, used for Pauli reconstructions.
struct ComplexMatrix {
    std::size_t dim = 1;
    std::vector<std::complex<double>> entries;

    explicit ComplexMatrix(std::size_t d) : dim(d), entries(d * d) {
        if (d == 0 || !std::has_single_bit(d))
            throw DomainError("matrix dimension must be a power of two");
    }

    std::complex<double>& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    std::complex<double> at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

enum class MatrixKind {
    UndirectedAdjacency,
    DirectedAdjacency,
    UndirectedLaplacian,
    DirectedLaplacianIndegree,
    DirectedLaplacianOutdegree,
};

inline const char* kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::UndirectedAdjacency: return "undirected_adjacency";
        case MatrixKind::DirectedAdjacency: return "directed_adjacency";
        case MatrixKind::UndirectedLaplacian: return "undirected_laplacian";
        case MatrixKind::DirectedLaplacianIndegree: return "directed_laplacian_indegree";
        case MatrixKind::DirectedLaplacianOutdegree: return "directed_laplacian_outdegree";
    }
    return "?";
}

inline bool kind_is_laplacian(MatrixKind k) {
    return k == MatrixKind::UndirectedLaplacian || k == MatrixKind::DirectedLaplacianIndegree ||
           k == MatrixKind::DirectedLaplacianOutdegree;
}

inline bool kind_is_directed(MatrixKind k) {
    return k == MatrixKind::DirectedAdjacency || k == MatrixKind::DirectedLaplacianIndegree ||
           k == MatrixKind::DirectedLaplacianOutdegree;
}

inline std::size_t padded_dim(int n_vertices) {
    return std::bit_ceil(static_cast<std::size_t>(n_vertices));
}

inline std::size_t n_qubits_for(int n_vertices) {
    return static_cast<std::size_t>(std::countr_zero(padded_dim(n_vertices)));
}

// 0/1 adjacency, zero diagonal, mirrored for undirected graphs, padded.
inline SquareMatrix adjacency_matrix(const Graph& g) {
    SquareMatrix m(padded_dim(g.n_vertices));
    for (const auto& [i, j] : g.edges) {
        m.at(i, j) = 1.0;
        if (!g.directed) m.at(j, i) = 1.0;
    }
    return m;
}

// Degree of each vertex in the sense of the given Laplacian kind, with zeros
// for padded slots.
inline std::vector<int> degree_sequence(const Graph& g, MatrixKind kind) {
    std::vector<int> deg(padded_dim(g.n_vertices), 0);
    for (int v = 0; v < g.n_vertices; ++v) {
        switch (kind) {
            case MatrixKind::UndirectedLaplacian: deg[v] = undirected_degree(g, v); break;
            case MatrixKind::DirectedLaplacianIndegree: deg[v] = indegree(g, v); break;
            case MatrixKind::DirectedLaplacianOutdegree: deg[v] = outdegree(g, v); break;
            default: throw DomainError("degree_sequence needs a Laplacian kind");
        }
    }
    return deg;
}

// Degree diagonal minus adjacency; kind selects undirected degree, indegree
// or outdegree and must match the graph's directedness.
inline SquareMatrix laplacian_matrix(const Graph& g, MatrixKind kind) {
    if (!kind_is_laplacian(kind)) throw DomainError("laplacian_matrix needs a Laplacian kind");
    if (kind_is_directed(kind) != g.directed)
        throw DomainError("Laplacian kind does not match graph directedness");
    SquareMatrix m(padded_dim(g.n_vertices));
    for (const auto& [i, j] : g.edges) {
        m.at(i, j) = -1.0;
        if (!g.directed) m.at(j, i) = -1.0;
    }
    const auto deg = degree_sequence(g, kind);
    for (std::size_t v = 0; v < m.dim; ++v) m.at(v, v) = static_cast<double>(deg[v]);
    return m;
}

inline SquareMatrix build_matrix(const Graph& g, MatrixKind kind) {
    if (kind_is_laplacian(kind)) return laplacian_matrix(g, kind);
    if (kind_is_directed(kind) != g.directed)
        throw DomainError("adjacency kind does not match graph directedness");
    return adjacency_matrix(g);
}

inline double max_asymmetry(const SquareMatrix& m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim; ++r)
        for (std::size_t c = r + 1; c < m.dim; ++c)
            worst = std::max(worst, std::abs(m.at(r, c) - m.at(c, r)));
    return worst;
}

}  // namespace gvqe
