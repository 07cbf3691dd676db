#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "gvqe/errors.hpp"
#include "gvqe/rng.hpp"

namespace gvqe {

// Simple graph without self-loops. Undirected edges are stored once in
// canonical (i, j) form with i < j and interpreted symmetrically.
struct Graph {
    int n_vertices = 0;
    bool directed = false;
    std::set<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n, bool is_directed) : n_vertices(n), directed(is_directed) {
        if (n < 1) throw DomainError("graph needs at least one vertex");
    }

    void add_edge(int i, int j) {
        if (i == j) throw DomainError("self-loops are not allowed");
        if (i < 0 || j < 0 || i >= n_vertices || j >= n_vertices)
            throw DomainError("edge endpoint out of range");
        if (!directed && i > j) std::swap(i, j);
        if (!edges.emplace(i, j).second) throw DomainError("duplicate edge");
    }

    bool has_edge(int i, int j) const {
        if (!directed && i > j) std::swap(i, j);
        return edges.count({i, j}) > 0;
    }
};

// Seeded Erdos-Renyi style generation. Edge ordering contract: candidate
// pairs are visited row-major -- undirected (i, j) with i < j, directed all
// ordered pairs (i, j), i != j -- and one uniform draw in [0, 1) is consumed
// per candidate, included iff draw < density. This makes graphs reproducible
// bit-exactly across reimplementations given (n, density, directed, seed).
inline Graph generate_random_graph(int n, double density, bool directed, std::uint64_t seed) {
    if (n < 2) throw DomainError("random graph needs n >= 2");
    if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must lie in [0, 1]");
    Graph g(n, directed);
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i) {
        for (int j = directed ? 0 : i + 1; j < n; ++j) {
            if (i == j) continue;
            if (rng.next_double() < density) g.edges.emplace(i, j);
        }
    }
    return g;
}

inline int undirected_degree(const Graph& g, int v) {
    int d = 0;
    for (const auto& [i, j] : g.edges)
        if (i == v || j == v) ++d;
    return d;
}

inline int indegree(const Graph& g, int v) {
    int d = 0;
    for (const auto& [i, j] : g.edges)
        if (j == v) ++d;
    return d;
}

inline int outdegree(const Graph& g, int v) {
    int d = 0;
    for (const auto& [i, j] : g.edges)
        if (i == v) ++d;
    return d;
}

// Text format: line 1 is "<n> <directed|undirected>", every following
// non-empty line is "<i> <j>" with 0-indexed endpoints, i != j.
// Duplicate edges are rejected.
inline Graph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty graph file");
    std::istringstream header(line);
    int n = 0;
    std::string mode, extra;
    if (!(header >> n >> mode) || header >> extra) throw DomainError("bad graph header: " + line);
    bool directed;
    if (mode == "directed")
        directed = true;
    else if (mode == "undirected")
        directed = false;
    else
        throw DomainError("graph header must say directed or undirected, got: " + mode);
    Graph g(n, directed);
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        int i, j;
        if (!(row >> i >> j) || row >> extra) throw DomainError("bad edge line: " + line);
        g.add_edge(i, j);
    }
    return g;
}

inline void write_graph(const Graph& g, std::ostream& out) {
    out << g.n_vertices << ' ' << (g.directed ? "directed" : "undirected") << '\n';
    for (const auto& [i, j] : g.edges) out << i << ' ' << j << '\n';
}

}  // namespace gvqe
