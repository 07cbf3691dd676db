// Command-line front end: graph generation, Pauli compilation, variational
// eigenvalue runs, classical reference spectra, and the experiment sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gvqe/gvqe.hpp"

namespace {

using namespace gvqe;

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graph file: " + path);
    return read_graph(in);
}

MatrixKind resolve_kind(const std::string& flag, const Graph& g) {
    if (flag == "adjacency")
        return g.directed ? MatrixKind::DirectedAdjacency : MatrixKind::UndirectedAdjacency;
    if (flag == "laplacian") {
        if (g.directed)
            throw DomainError("directed graphs need --matrix laplacian-in or laplacian-out");
        return MatrixKind::UndirectedLaplacian;
    }
    if (flag == "laplacian-in") return MatrixKind::DirectedLaplacianIndegree;
    if (flag == "laplacian-out") return MatrixKind::DirectedLaplacianOutdegree;
    throw DomainError("unknown matrix kind: " + flag);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot open output file: " + out_path);
    out << text;
}

struct VqeFlags {
    int layers = 3;
    int shots = 0;
    long long seed = 0;
    double tol = 0.0;
    int max_iter = 0;
    int restarts = 3;
    bool ring = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--layers", layers, "ansatz layers")->check(CLI::PositiveNumber);
        cmd->add_option("--shots", shots, "measurement shots per evaluation (0 = exact)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--tol", tol, "optimizer tolerance (0 = default)");
        cmd->add_option("--max-iter", max_iter, "optimizer iteration cap (0 = default)");
        cmd->add_option("--restarts", restarts, "random restarts")->check(CLI::PositiveNumber);
        cmd->add_flag("--ring", ring, "close the CNOT chain into a ring");
    }

    VqeConfig to_config() const {
        VqeConfig cfg;
        cfg.layers = layers;
        cfg.shots = shots;
        cfg.seed = static_cast<std::uint64_t>(seed);
        cfg.tolerance = tol;
        cfg.max_iterations = max_iter;
        cfg.restarts = restarts;
        cfg.ring = ring;
        return cfg;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"graph spectra via Pauli compilation and a variational eigensolver"};
    app.require_subcommand(1);

    // random
    auto* random_cmd = app.add_subcommand("random", "generate a seeded random graph");
    int rnd_n = 4;
    double rnd_density = 0.5;
    bool rnd_directed = false;
    long long rnd_seed = 0;
    std::string rnd_out;
    random_cmd->add_option("--n", rnd_n, "vertex count")->required()->check(CLI::Range(2, 1 << 20));
    random_cmd->add_option("--density", rnd_density, "edge probability in [0,1]")->required();
    random_cmd->add_flag("--directed", rnd_directed, "sample ordered pairs");
    random_cmd->add_option("--seed", rnd_seed, "random seed");
    random_cmd->add_option("--out", rnd_out, "output path (default stdout)");

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "compile a graph matrix to a Pauli sum");
    std::string dec_input, dec_matrix = "adjacency", dec_format = "text", dec_out;
    decompose_cmd->add_option("--input", dec_input, "graph file")->required();
    decompose_cmd->add_option("--matrix", dec_matrix, "adjacency|laplacian|laplacian-in|laplacian-out");
    decompose_cmd->add_option("--format", dec_format, "text|json");
    decompose_cmd->add_option("--out", dec_out, "output path (default stdout)");

    // eigen
    auto* eigen_cmd = app.add_subcommand("eigen", "extremal eigenvalue by VQE");
    std::string eig_input, eig_matrix = "adjacency", eig_objective = "min", eig_format = "text",
                eig_out;
    VqeFlags eig_flags;
    eigen_cmd->add_option("--input", eig_input, "graph file")->required();
    eigen_cmd->add_option("--matrix", eig_matrix, "adjacency|laplacian|laplacian-in|laplacian-out");
    eigen_cmd->add_option("--objective", eig_objective, "min|max")
        ->check(CLI::IsMember({"min", "max"}));
    eig_flags.attach(eigen_cmd);
    eigen_cmd->add_option("--format", eig_format, "text|json");
    eigen_cmd->add_option("--out", eig_out, "output path (default stdout)");

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "full spectrum by iterated deflation");
    std::string spec_input, spec_matrix = "adjacency", spec_format = "text", spec_out;
    int spec_k = 0;
    VqeFlags spec_flags;
    spectrum_cmd->add_option("--input", spec_input, "graph file")->required();
    spectrum_cmd->add_option("--matrix", spec_matrix, "adjacency|laplacian");
    spectrum_cmd->add_option("--k", spec_k, "how many eigenvalues (default: all)");
    spec_flags.attach(spectrum_cmd);
    spectrum_cmd->add_option("--format", spec_format, "text|json");
    spectrum_cmd->add_option("--out", spec_out, "output path (default stdout)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "classical reference spectrum");
    std::string ora_input, ora_matrix = "adjacency", ora_format = "text", ora_out;
    oracle_cmd->add_option("--input", ora_input, "graph file")->required();
    oracle_cmd->add_option("--matrix", ora_matrix, "adjacency|laplacian|laplacian-in|laplacian-out");
    oracle_cmd->add_option("--format", ora_format, "text|json");
    oracle_cmd->add_option("--out", ora_out, "output path (default stdout)");

    // experiment
    auto* experiment_cmd = app.add_subcommand("experiment", "run a sweep and emit records");
    std::string exp_name, exp_format = "csv", exp_out;
    int exp_n = 0, exp_trials = 0, exp_layers = 0, exp_shots = 0, exp_restarts = 1,
        exp_graphs_per_size = 5;
    long long exp_seed = 1;
    double exp_density = 0.5;
    bool exp_secondary = false;
    std::vector<double> exp_densities;
    std::vector<int> exp_layer_counts, exp_sizes, exp_trials_list;
    experiment_cmd->add_option("name", exp_name, "density|layers|types|size|gates")
        ->required()
        ->check(CLI::IsMember({"density", "layers", "types", "size", "gates"}));
    experiment_cmd->add_option("--n", exp_n, "vertex count (density/layers/types)");
    experiment_cmd->add_option("--trials", exp_trials, "trials per swept value");
    experiment_cmd->add_option("--layers", exp_layers, "ansatz layers");
    experiment_cmd->add_option("--shots", exp_shots, "measurement shots (0 = exact)");
    experiment_cmd->add_option("--restarts", exp_restarts, "random restarts");
    experiment_cmd->add_option("--seed", exp_seed, "base seed; trial t uses seed + t");
    experiment_cmd->add_option("--density", exp_density, "edge probability (types/size/gates)");
    experiment_cmd->add_option("--densities", exp_densities, "density list (density sweep)")
        ->delimiter(',');
    experiment_cmd->add_flag("--secondary", exp_secondary,
                             "density sweep preset: 4 vertices, 20 trials, 5 layers, 7 densities");
    experiment_cmd->add_option("--layer-counts", exp_layer_counts, "layer list (layer sweep)")
        ->delimiter(',');
    experiment_cmd->add_option("--sizes", exp_sizes, "vertex counts (size/gates sweeps)")
        ->delimiter(',');
    experiment_cmd->add_option("--trials-list", exp_trials_list, "per-size trials (size sweep)")
        ->delimiter(',');
    experiment_cmd->add_option("--graphs-per-size", exp_graphs_per_size,
                               "samples per size (gates sweep)");
    experiment_cmd->add_option("--format", exp_format, "csv|json");
    experiment_cmd->add_option("--out", exp_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }

    if (random_cmd->parsed()) {
        const Graph g =
            generate_random_graph(rnd_n, rnd_density, rnd_directed, static_cast<std::uint64_t>(rnd_seed));
        std::ostringstream text;
        write_graph(g, text);
        emit(text.str(), rnd_out);
        if (!rnd_out.empty())
            std::cerr << "wrote " << rnd_out << " (" << g.n_vertices << " vertices, "
                      << g.edges.size() << " edges)\n";
        return 0;
    }

    if (decompose_cmd->parsed()) {
        const Graph g = load_graph(dec_input);
        const PauliSum h = pauli_decompose(build_matrix(g, resolve_kind(dec_matrix, g)));
        emit(dec_format == "json" ? to_json(h).dump(2) + "\n" : render_text(h), dec_out);
        return 0;
    }

    if (eigen_cmd->parsed()) {
        const Graph g = load_graph(eig_input);
        const SquareMatrix m = build_matrix(g, resolve_kind(eig_matrix, g));
        const PauliSum h = pauli_decompose(m);
        const VqeConfig cfg = eig_flags.to_config();
        VqeResult r = eig_objective == "max" ? vqe_max(h, cfg) : vqe_min(h, cfg);
        r.padded_weight = weight_from_index(r.state, static_cast<std::size_t>(g.n_vertices));
        if (eig_format == "json")
            emit(to_json(r).dump(2) + "\n", eig_out);
        else
            emit(format_value(r.eigenvalue) + "\n", eig_out);
        return 0;
    }

    if (spectrum_cmd->parsed()) {
        const Graph g = load_graph(spec_input);
        const SquareMatrix m = build_matrix(g, resolve_kind(spec_matrix, g));
        const std::size_t k = spec_k > 0 ? static_cast<std::size_t>(spec_k) : m.dim;
        const SpectrumResult s = full_spectrum(m, k, spec_flags.to_config());
        if (spec_format == "json") {
            emit(to_json(s).dump(2) + "\n", spec_out);
        } else {
            std::string line;
            for (double v : s.eigenvalues) line += (line.empty() ? "" : " ") + format_value(v);
            emit(line + "\n", spec_out);
        }
        return 0;
    }

    if (oracle_cmd->parsed()) {
        const Graph g = load_graph(ora_input);
        const MatrixKind kind = resolve_kind(ora_matrix, g);
        const SquareMatrix m = build_matrix(g, kind);
        std::string text;
        nlohmann::json j;
        if (!kind_is_directed(kind)) {
            const auto eig = classical_eig_symmetric(m);
            for (double v : eig.values) text += (text.empty() ? "" : " ") + format_value(v);
            text += '\n';
            j = {{"eigenvalues", eig.values}};
        } else {
            // Two labeled baselines for directed matrices: the spectrum of the
            // symmetric part and the real parts of the true spectrum.
            const auto sym = classical_eig_symmetric(symmetric_part(m));
            const auto real_parts = eigenvalue_real_parts(m);
            std::string sym_line, real_line;
            for (double v : sym.values) sym_line += (sym_line.empty() ? "" : " ") + format_value(v);
            for (double v : real_parts)
                real_line += (real_line.empty() ? "" : " ") + format_value(v);
            text = "symmetric_part: " + sym_line + "\nreal_parts: " + real_line + "\n";
            j = {{"symmetric_part", sym.values}, {"real_parts", real_parts}};
        }
        emit(ora_format == "json" ? j.dump(2) + "\n" : text, ora_out);
        return 0;
    }

    // experiment
    std::vector<ExperimentRecord> records;
    std::optional<FitReport> fit;
    if (exp_name == "density") {
        DensitySweepConfig cfg;
        if (exp_secondary) {
            cfg.n_vertices = 4;
            cfg.trials = 20;
            cfg.layers = 5;
            cfg.densities = DensitySweepConfig::secondary_densities();
        }
        if (exp_n > 0) cfg.n_vertices = exp_n;
        if (exp_trials > 0) cfg.trials = exp_trials;
        if (exp_layers > 0) cfg.layers = exp_layers;
        if (!exp_densities.empty()) cfg.densities = exp_densities;
        cfg.shots = exp_shots;
        cfg.restarts = exp_restarts;
        cfg.seed = static_cast<std::uint64_t>(exp_seed);
        records = run_density_sweep(cfg);
    } else if (exp_name == "layers") {
        LayerSweepConfig cfg;
        if (exp_n > 0) cfg.n_vertices = exp_n;
        if (exp_trials > 0) cfg.trials = exp_trials;
        if (!exp_layer_counts.empty()) cfg.layer_counts = exp_layer_counts;
        cfg.density = exp_density;
        cfg.shots = exp_shots;
        cfg.restarts = exp_restarts;
        cfg.seed = static_cast<std::uint64_t>(exp_seed);
        records = run_layer_sweep(cfg);
    } else if (exp_name == "types") {
        TypeSweepConfig cfg;
        if (exp_n > 0) cfg.n_vertices = exp_n;
        if (exp_trials > 0) cfg.trials = exp_trials;
        if (exp_layers > 0) cfg.layers = exp_layers;
        cfg.density = exp_density;
        cfg.shots = exp_shots;
        cfg.restarts = exp_restarts;
        cfg.seed = static_cast<std::uint64_t>(exp_seed);
        records = run_type_sweep(cfg);
    } else if (exp_name == "size") {
        SizeSweepConfig cfg;
        if (!exp_sizes.empty()) cfg.sizes = exp_sizes;
        if (!exp_trials_list.empty())
            cfg.trials = exp_trials_list;
        else if (exp_trials > 0)
            cfg.trials.assign(cfg.sizes.size(), exp_trials);
        if (cfg.sizes.size() != cfg.trials.size())
            throw DomainError("--trials-list must match --sizes in length");
        if (exp_layers > 0) cfg.layers = exp_layers;
        cfg.density = exp_density;
        cfg.shots = exp_shots;
        cfg.restarts = exp_restarts;
        cfg.seed = static_cast<std::uint64_t>(exp_seed);
        records = run_size_sweep(cfg);
    } else {
        GateSweepConfig cfg;
        if (!exp_sizes.empty()) cfg.sizes = exp_sizes;
        cfg.graphs_per_size = exp_graphs_per_size;
        cfg.density = exp_density;
        cfg.seed = static_cast<std::uint64_t>(exp_seed);
        GateSweepResult result = run_gate_sweep(cfg);
        records = std::move(result.records);
        fit = std::move(result.quadratic_fit);
    }

    if (exp_format == "json") {
        nlohmann::json j = {{"records", to_json(records)}};
        if (fit) j["fit"] = to_json(*fit);
        emit(j.dump(2) + "\n", exp_out);
    } else {
        std::ostringstream csv;
        write_csv(records, csv);
        emit(csv.str(), exp_out);
        if (fit)
            std::cerr << "quadratic fit: coefficients (" << fit->coefficients[0] << ", "
                      << fit->coefficients[1] << ", " << fit->coefficients[2]
                      << "), R^2 = " << fit->r_squared << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gvqe::OptimizerError& e) {
        std::cerr << "optimizer error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
