#include "bcp/bench.hpp"
#include "bcp/bounds.hpp"
#include "bcp/encode.hpp"
#include "bcp/instance.hpp"
#include "bcp/search.hpp"
#include "bcp/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

struct ConfigFlags {
    std::string method;
    std::string width;
    std::string incremental = "none";
    std::string symmetry = "off";

    bcp::EncodingConfig build() const {
        bcp::EncodingConfig cfg;
        cfg.method = bcp::parse_method(method);
        bool block = cfg.method == bcp::Method::BlockX || cfg.method == bcp::Method::BlockXa;
        if (!width.empty()) {
            cfg.width = bcp::parse_width(width);
        } else if (block) {
            cfg.width = bcp::BlockWidth{false, 8};
        }
        cfg.incremental = bcp::parse_incremental(incremental);
        cfg.symmetry = bcp::parse_symmetry(symmetry);
        cfg.validate();
        return cfg;
    }
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
    cmd->add_option("--method", flags.method, "encoding method: 1g|1l|2g|2l|x|xa")->required();
    cmd->add_option("--width", flags.width, "block width for x/xa: fixed[:w]|vary (default fixed:8)");
    cmd->add_option("--incremental", flags.incremental, "incremental mode: none|x|y (default none)");
    cmd->add_option("--symmetry", flags.symmetry, "symmetry breaking: on|off (default off)");
}

bcp::BackendFactory backend_factory(const std::string& kind) {
    if (kind == "builtin") return {};
    if (kind.rfind("external:", 0) == 0) {
        std::string cmd = kind.substr(9);
        return [cmd] { return bcp::make_external_solver(cmd); };
    }
    throw std::runtime_error("unknown backend '" + kind + "' (expected builtin|external:<cmd>)");
}

void emit_cnf(const std::string& path, const bcp::BcpInstance& inst, const bcp::EncodedProblem& enc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "c bcp encoding " << enc.config.to_string() << " k=" << enc.k << " instance="
        << (inst.name.empty() ? "?" : inst.name) << " n=" << inst.n << " m=" << inst.edges.size()
        << "\n";
    for (int id = 1; id <= enc.formula.var_count(); ++id)
        out << "c var " << id << " " << bcp::to_string(enc.registry.reverse(id)) << "\n";
    out << bcp::to_dimacs(enc.formula);
}

int cmd_solve(const std::string& file, const ConfigFlags& flags, double timeout,
              const std::string& backend, const std::string& emit_path, bool print_coloring,
              bool bmcp_input) {
    bcp::EncodingConfig cfg = flags.build();
    bcp::BcpInstance inst;
    if (bmcp_input) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        inst = bcp::bmcp_to_bcp(bcp::parse_bmcp(in, std::filesystem::path(file).stem().string()));
    } else {
        inst = bcp::load_col_file(file);
    }
    std::cout << "instance " << inst.name << " n=" << inst.n << " m=" << inst.edges.size() << "\n";
    std::cout << "config " << cfg.to_string() << "\n";

    if (!emit_path.empty()) {
        bcp::BoundResult bound = bcp::dsatur_bound(inst);
        bcp::EncodedProblem enc = bcp::build_encoding(inst, bound.H, cfg);
        emit_cnf(emit_path, inst, enc);
        std::cout << "H = " << bound.H << "\n";
        std::cout << "wrote " << emit_path << " (" << enc.formula.var_count() << " vars, "
                  << enc.formula.clause_count() << " clauses)\n";
        return 0;
    }

    bcp::OptimalResult res = bcp::solve_optimal(inst, cfg, timeout, backend_factory(backend));
    std::cout << "H = " << res.H << "\n";
    std::cout << "span = " << res.optimal_span << (res.proven ? " (proven optimal)" : " (not proven, timeout)")
              << "\n";
    std::cout << "time = " << res.total_time_s << " s, iterations = " << res.iterations.size()
              << ", vars = " << res.vars_reported << ", clauses = " << res.clauses_reported << "\n";
    for (const bcp::IterationRecord& it : res.iterations) {
        const char* st = it.status == bcp::SolveStatus::Sat     ? "SAT"
                         : it.status == bcp::SolveStatus::Unsat ? "UNSAT"
                                                                : "UNKNOWN";
        std::cout << "  k=" << it.k << " " << st << " time=" << it.time_s
                  << "s conflicts=" << it.conflicts << "\n";
    }
    if (print_coloring) {
        std::cout << "coloring:";
        for (int c : res.witness.color) std::cout << " " << c;
        std::cout << "\n";
    }
    return res.proven ? 0 : 2;
}

int cmd_matrix(const std::string& dir, double timeout, int jobs, const std::string& backend,
               const std::string& out_path) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".col")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::vector<bcp::BcpInstance> instances;
    for (const std::string& f : files) {
        try {
            instances.push_back(bcp::load_col_file(f));
        } catch (const std::exception& ex) {
            std::cerr << "skipping " << f << ": " << ex.what() << "\n";
        }
    }

    bcp::MatrixOptions opts;
    opts.timeout_s = timeout;
    opts.jobs = jobs;
    if (backend.rfind("external:", 0) == 0) opts.external_cmd = backend.substr(9);
    else if (backend != "builtin")
        throw std::runtime_error("unknown backend '" + backend + "'");

    std::vector<bcp::RunRecord> records = bcp::run_matrix(instances, opts);
    if (out_path.empty()) {
        bcp::write_csv(std::cout, records);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        bcp::write_csv(out, records);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact bandwidth coloring solver (SAT-based)"};
    app.require_subcommand(1);

    // solve
    std::string solve_file, emit_path, solve_backend = "builtin";
    ConfigFlags solve_flags;
    double solve_timeout = 0.0;
    bool print_coloring = false, bmcp_input = false;
    CLI::App* solve = app.add_subcommand("solve", "solve one instance to proven optimality");
    solve->add_option("file", solve_file, ".col instance path")->required();
    add_config_flags(solve, solve_flags);
    solve->add_option("--timeout", solve_timeout, "global time limit in seconds (0 = none)");
    solve->add_option("--backend", solve_backend, "builtin|external:<cmd> ({cnf} = CNF path)");
    solve->add_option("--emit-cnf", emit_path, "write the DIMACS encoding at H and exit");
    solve->add_flag("--print-coloring", print_coloring, "print the witness coloring");
    solve->add_flag("--bmcp", bmcp_input, "input is a BMCP file; apply the clique transformation");

    // matrix
    std::string matrix_dir, matrix_out, matrix_backend = "builtin";
    double matrix_timeout = 0.0;
    int jobs = 1;
    CLI::App* matrix = app.add_subcommand("matrix", "run all 36 configurations over a directory");
    matrix->add_option("dir", matrix_dir, "directory of .col files")->required();
    matrix->add_option("--timeout", matrix_timeout, "time limit per (instance, config) in seconds");
    matrix->add_option("--jobs", jobs, "parallel workers (default 1)");
    matrix->add_option("--backend", matrix_backend, "builtin|external:<cmd>");
    matrix->add_option("--out", matrix_out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return cmd_solve(solve_file, solve_flags, solve_timeout, solve_backend, emit_path,
                             print_coloring, bmcp_input);
        return cmd_matrix(matrix_dir, matrix_timeout, jobs, matrix_backend, matrix_out);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
