#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gvqe/eig.hpp"
#include "gvqe/errors.hpp"
#include "gvqe/fit.hpp"
#include "gvqe/graph.hpp"
#include "gvqe/matrix.hpp"
#include "gvqe/pauli.hpp"
#include "gvqe/vqe.hpp"

namespace gvqe {

// One sweep data point. swept_value holds the swept quantity as text (a
// number for density/layers/size sweeps, a label for the type sweep) so CSV
// round-trips are exact.
struct ExperimentRecord {
    std::string experiment;
    std::string swept_value;
    int trial = 0;
    long long seed = 0;
    int n_vertices = 0;
    std::string matrix_kind;
    int layers = 0;
    int shots = 0;
    double runtime_ms = 0.0;
    double estimate = 0.0;
    double oracle_value = 0.0;
    double abs_error = 0.0;

    bool operator==(const ExperimentRecord&) const = default;
};

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline ExperimentRecord make_record(std::string experiment, std::string swept, int trial,
                                    long long seed, int n_vertices, MatrixKind kind, int layers,
                                    int shots, double runtime_ms, double estimate, double oracle) {
    ExperimentRecord r;
    r.experiment = std::move(experiment);
    r.swept_value = std::move(swept);
    r.trial = trial;
    r.seed = seed;
    r.n_vertices = n_vertices;
    r.matrix_kind = kind_name(kind);
    r.layers = layers;
    r.shots = shots;
    r.runtime_ms = runtime_ms;
    r.estimate = estimate;
    r.oracle_value = oracle;
    r.abs_error = std::abs(estimate - oracle);
    return r;
}

}  // namespace detail

// Sweep defaults follow the experiment tables: the primary density run is
// 8 vertices / 3 trials / 3 layers over 36 uniform densities, the
// higher-trial secondary run is 4 vertices / 20 trials / 5 layers over
// {0, 0.1, 0.3, 0.5, 0.7, 0.9, 1}.
struct DensitySweepConfig {
    int n_vertices = 8;
    int trials = 3;
    int layers = 3;
    std::vector<double> densities;  // empty = 36 uniform in [0, 1]
    int shots = 0;
    int restarts = 1;
    std::uint64_t seed = 1;

    static std::vector<double> uniform_densities(int count) {
        std::vector<double> d(count);
        for (int i = 0; i < count; ++i) d[i] = static_cast<double>(i) / (count - 1);
        return d;
    }
    static std::vector<double> secondary_densities() { return {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}; }
};

// Minimum-eigenvalue runs on undirected adjacency matrices across densities.
inline std::vector<ExperimentRecord> run_density_sweep(const DensitySweepConfig& cfg) {
    const std::vector<double> densities =
        cfg.densities.empty() ? DensitySweepConfig::uniform_densities(36) : cfg.densities;
    std::vector<ExperimentRecord> records;
    for (double density : densities) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(trial);
            const Graph g = generate_random_graph(cfg.n_vertices, density, false, seed);
            const SquareMatrix a = adjacency_matrix(g);
            const double oracle = classical_eig_symmetric(a).values.back();
            VqeConfig vqe_cfg;
            vqe_cfg.layers = cfg.layers;
            vqe_cfg.shots = cfg.shots;
            vqe_cfg.restarts = cfg.restarts;
            vqe_cfg.seed = seed;
            const VqeResult r = vqe_min(pauli_decompose(a), vqe_cfg);
            records.push_back(detail::make_record(
                "density", format_g17(density), trial, static_cast<long long>(seed),
                cfg.n_vertices, MatrixKind::UndirectedAdjacency, cfg.layers, cfg.shots,
                r.wall_time_ms, r.eigenvalue, oracle));
        }
    }
    return records;
}

struct LayerSweepConfig {
    int n_vertices = 4;
    int trials = 20;
    double density = 0.5;
    std::vector<int> layer_counts{1, 2, 3, 4, 5, 7, 10, 15, 20};
    int shots = 0;
    int restarts = 1;
    std::uint64_t seed = 1;
};

inline std::vector<ExperimentRecord> run_layer_sweep(const LayerSweepConfig& cfg) {
    std::vector<ExperimentRecord> records;
    for (int layers : cfg.layer_counts) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(trial);
            const Graph g = generate_random_graph(cfg.n_vertices, cfg.density, false, seed);
            const SquareMatrix a = adjacency_matrix(g);
            const double oracle = classical_eig_symmetric(a).values.back();
            VqeConfig vqe_cfg;
            vqe_cfg.layers = layers;
            vqe_cfg.shots = cfg.shots;
            vqe_cfg.restarts = cfg.restarts;
            vqe_cfg.seed = seed;
            const VqeResult r = vqe_min(pauli_decompose(a), vqe_cfg);
            records.push_back(detail::make_record(
                "layers", std::to_string(layers), trial, static_cast<long long>(seed),
                cfg.n_vertices, MatrixKind::UndirectedAdjacency, layers, cfg.shots, r.wall_time_ms,
                r.eigenvalue, oracle));
        }
    }
    return records;
}

struct TypeSweepConfig {
    int n_vertices = 8;
    int trials = 5;
    double density = 0.5;
    int layers = 3;
    int shots = 0;
    int restarts = 1;
    std::uint64_t seed = 1;
};

// Maximum-eigenvalue runs across all five matrix kinds. Directed kinds emit
// two records per trial, one against the symmetric-part spectrum and one
// against the real parts of the true spectrum, labeled "[sym]" and "[real]".
inline std::vector<ExperimentRecord> run_type_sweep(const TypeSweepConfig& cfg) {
    static constexpr MatrixKind kinds[] = {
        MatrixKind::UndirectedAdjacency, MatrixKind::DirectedAdjacency,
        MatrixKind::UndirectedLaplacian, MatrixKind::DirectedLaplacianIndegree,
        MatrixKind::DirectedLaplacianOutdegree};
    std::vector<ExperimentRecord> records;
    for (MatrixKind kind : kinds) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(trial);
            const Graph g =
                generate_random_graph(cfg.n_vertices, cfg.density, kind_is_directed(kind), seed);
            const SquareMatrix m = build_matrix(g, kind);
            VqeConfig vqe_cfg;
            vqe_cfg.layers = cfg.layers;
            vqe_cfg.shots = cfg.shots;
            vqe_cfg.restarts = cfg.restarts;
            vqe_cfg.seed = seed;
            const VqeResult r = vqe_max(pauli_decompose(m), vqe_cfg);
            if (!kind_is_directed(kind)) {
                const double oracle = classical_eig_symmetric(m).values.front();
                records.push_back(detail::make_record("types", kind_name(kind), trial,
                                                      static_cast<long long>(seed), cfg.n_vertices,
                                                      kind, cfg.layers, cfg.shots, r.wall_time_ms,
                                                      r.eigenvalue, oracle));
            } else {
                const double sym_oracle =
                    classical_eig_symmetric(symmetric_part(m)).values.front();
                const double real_oracle = eigenvalue_real_parts(m).front();
                records.push_back(detail::make_record(
                    "types", std::string(kind_name(kind)) + "[sym]", trial,
                    static_cast<long long>(seed), cfg.n_vertices, kind, cfg.layers, cfg.shots,
                    r.wall_time_ms, r.eigenvalue, sym_oracle));
                records.push_back(detail::make_record(
                    "types", std::string(kind_name(kind)) + "[real]", trial,
                    static_cast<long long>(seed), cfg.n_vertices, kind, cfg.layers, cfg.shots,
                    r.wall_time_ms, r.eigenvalue, real_oracle));
            }
        }
    }
    return records;
}

struct SizeSweepConfig {
    std::vector<int> sizes{4, 5, 8, 9, 16, 32, 64};
    std::vector<int> trials{10, 5, 5, 2, 2, 1, 1};
    double density = 0.5;
    int layers = 3;
    int shots = 0;
    int restarts = 1;
    std::uint64_t seed = 1;
};

inline std::vector<ExperimentRecord> run_size_sweep(const SizeSweepConfig& cfg) {
    if (cfg.sizes.size() != cfg.trials.size())
        throw DomainError("sizes and trials lists differ in length");
    std::vector<ExperimentRecord> records;
    for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
        for (int trial = 0; trial < cfg.trials[si]; ++trial) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(trial);
            const Graph g = generate_random_graph(cfg.sizes[si], cfg.density, false, seed);
            const SquareMatrix a = adjacency_matrix(g);
            const double oracle = classical_eig_symmetric(a).values.back();
            VqeConfig vqe_cfg;
            vqe_cfg.layers = cfg.layers;
            vqe_cfg.shots = cfg.shots;
            vqe_cfg.restarts = cfg.restarts;
            vqe_cfg.seed = seed;
            const VqeResult r = vqe_min(pauli_decompose(a), vqe_cfg);
            records.push_back(detail::make_record(
                "size", std::to_string(cfg.sizes[si]), trial, static_cast<long long>(seed),
                cfg.sizes[si], MatrixKind::UndirectedAdjacency, cfg.layers, cfg.shots,
                r.wall_time_ms, r.eigenvalue, oracle));
        }
    }
    return records;
}

// Mean runtime grouped by padded vertex count, ascending; input for the
// scaling fits.
inline std::pair<std::vector<double>, std::vector<double>> mean_runtime_by_padded_size(
    const std::vector<ExperimentRecord>& records) {
    std::vector<std::pair<std::size_t, std::pair<double, int>>> groups;
    for (const auto& r : records) {
        const std::size_t padded = padded_dim(r.n_vertices);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == padded; });
        if (it == groups.end())
            groups.push_back({padded, {r.runtime_ms, 1}});
        else {
            it->second.first += r.runtime_ms;
            it->second.second += 1;
        }
    }
    std::sort(groups.begin(), groups.end());
    std::pair<std::vector<double>, std::vector<double>> out;
    for (const auto& [padded, acc] : groups) {
        out.first.push_back(static_cast<double>(padded));
        out.second.push_back(acc.first / acc.second);
    }
    return out;
}

struct GateSweepConfig {
    std::vector<int> sizes{4, 8, 16, 32, 64, 128, 256};
    int graphs_per_size = 5;
    double density = 0.5;
    std::uint64_t seed = 1;
};

struct GateSweepResult {
    std::vector<ExperimentRecord> records;  // estimate = worst gate_estimate per size
    FitReport quadratic_fit;                // gate estimate vs vertex count
};

// Decomposition-only scaling study: per size, decompose several random
// undirected adjacency matrices, keep the largest circuit cost, and fit a
// quadratic in the vertex count. runtime_ms holds the decomposition time.
inline GateSweepResult run_gate_sweep(const GateSweepConfig& cfg) {
    GateSweepResult out;
    std::vector<double> xs, ys;
    for (int size : cfg.sizes) {
        long long worst = 0;
        double decompose_ms = 0.0;
        for (int trial = 0; trial < cfg.graphs_per_size; ++trial) {
            const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(trial);
            const Graph g = generate_random_graph(size, cfg.density, false, seed);
            const auto t0 = std::chrono::steady_clock::now();
            const PauliSum h = pauli_decompose(adjacency_matrix(g));
            decompose_ms +=
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            worst = std::max(worst, gate_cost(h).gate_estimate);
        }
        xs.push_back(static_cast<double>(size));
        ys.push_back(static_cast<double>(worst));
        out.records.push_back(detail::make_record(
            "gates", std::to_string(size), 0, static_cast<long long>(cfg.seed), size,
            MatrixKind::UndirectedAdjacency, 0, 0, decompose_ms, static_cast<double>(worst), 0.0));
    }
    out.quadratic_fit = fit_polynomial(xs, ys, 2);
    return out;
}

inline constexpr const char* kCsvHeader =
    "experiment,swept_value,trial,seed,n_vertices,matrix_kind,layers,shots,"
    "runtime_ms,estimate,oracle_value,abs_error";

inline void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.experiment << ',' << r.swept_value << ',' << r.trial << ',' << r.seed << ','
            << r.n_vertices << ',' << r.matrix_kind << ',' << r.layers << ',' << r.shots << ','
            << format_g17(r.runtime_ms) << ',' << format_g17(r.estimate) << ','
            << format_g17(r.oracle_value) << ',' << format_g17(r.abs_error) << '\n';
    }
}

inline std::vector<ExperimentRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw DomainError("unrecognized CSV header: " + line);
    std::vector<ExperimentRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream row(line);
        std::string col;
        while (std::getline(row, col, ',')) cols.push_back(col);
        if (cols.size() != 12) throw DomainError("bad CSV row: " + line);
        ExperimentRecord r;
        r.experiment = cols[0];
        r.swept_value = cols[1];
        r.trial = std::stoi(cols[2]);
        r.seed = std::stoll(cols[3]);
        r.n_vertices = std::stoi(cols[4]);
        r.matrix_kind = cols[5];
        r.layers = std::stoi(cols[6]);
        r.shots = std::stoi(cols[7]);
        r.runtime_ms = std::stod(cols[8]);
        r.estimate = std::stod(cols[9]);
        r.oracle_value = std::stod(cols[10]);
        r.abs_error = std::stod(cols[11]);
        records.push_back(std::move(r));
    }
    return records;
}

inline nlohmann::json to_json(const std::vector<ExperimentRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"experiment", r.experiment},
                       {"swept_value", r.swept_value},
                       {"trial", r.trial},
                       {"seed", r.seed},
                       {"n_vertices", r.n_vertices},
                       {"matrix_kind", r.matrix_kind},
                       {"layers", r.layers},
                       {"shots", r.shots},
                       {"runtime_ms", r.runtime_ms},
                       {"estimate", r.estimate},
                       {"oracle_value", r.oracle_value},
                       {"abs_error", r.abs_error}});
    return arr;
}

inline double median(std::vector<double> values) {
    if (values.empty()) throw DomainError("median of empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

inline std::vector<double> select_errors(const std::vector<ExperimentRecord>& records,
                                         const std::string& swept_value) {
    std::vector<double> out;
    for (const auto& r : records)
        if (r.swept_value == swept_value) out.push_back(r.abs_error);
    return out;
}

inline std::vector<double> select_runtimes(const std::vector<ExperimentRecord>& records,
                                           const std::string& swept_value) {
    std::vector<double> out;
    for (const auto& r : records)
        if (r.swept_value == swept_value) out.push_back(r.runtime_ms);
    return out;
}

}  // namespace gvqe
