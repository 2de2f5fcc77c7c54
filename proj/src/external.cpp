#include "bcp/satcore.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>
#include <unistd.h>

namespace bcp {

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

class ExternalSolver final : public SatBackend {
  public:
    explicit ExternalSolver(std::string command_template)
        : template_(std::move(command_template)) {}

    void reserve_vars(int n) override {
        if (n > nvars_) nvars_ = n;
    }

    void add_clause(std::span<const int> lits) override {
        for (int l : lits) reserve_vars(std::abs(l));
        clauses_.emplace_back(lits.begin(), lits.end());
    }

    SolveOutcome solve(std::span<const int> assumptions, double budget_s) override {
        auto t0 = std::chrono::steady_clock::now();
        for (int l : assumptions) reserve_vars(std::abs(l));

        char path[] = "/tmp/bcp_cnf_XXXXXX";
        int fd = mkstemp(path);
        if (fd < 0) throw std::runtime_error("cannot create temp CNF file");
        {
            std::ofstream out(path);
            out << "p cnf " << nvars_ << " " << clauses_.size() + assumptions.size() << "\n";
            for (const auto& cl : clauses_) {
                for (int l : cl) out << l << " ";
                out << "0\n";
            }
            for (int l : assumptions) out << l << " 0\n";
        }
        close(fd);

        std::string cmd = template_;
        auto pos = cmd.find("{cnf}");
        if (pos != std::string::npos) {
            while (pos != std::string::npos) {
                cmd.replace(pos, 5, path);
                pos = cmd.find("{cnf}");
            }
        } else {
            cmd += std::string(" < ") + path;
        }
        if (budget_s > 0.0) {
            std::ostringstream full;
            full << "timeout " << budget_s << " sh -c " << shell_quote(cmd);
            cmd = full.str();
        }

        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            unlink(path);
            throw std::runtime_error("failed to launch solver: " + cmd);
        }
        std::string output;
        char buf[4096];
        size_t got;
        while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
        int rc = pclose(pipe);
        unlink(path);
        int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;

        SolveOutcome out;
        out.stats.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        std::string status_line;
        std::vector<int> model_lits;
        std::istringstream lines(output);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.rfind("s ", 0) == 0) status_line = line.substr(2);
            else if (line.rfind("v ", 0) == 0) {
                std::istringstream ls(line.substr(2));
                int lit;
                while (ls >> lit)
                    if (lit != 0) model_lits.push_back(lit);
            }
        }
        while (!status_line.empty() && (status_line.back() == '\r' || status_line.back() == ' '))
            status_line.pop_back();

        if (status_line == "SATISFIABLE") {
            out.status = SolveStatus::Sat;
        } else if (status_line == "UNSATISFIABLE") {
            out.status = SolveStatus::Unsat;
        } else if (!status_line.empty() && status_line != "UNKNOWN" && status_line != "INDETERMINATE") {
            throw std::runtime_error("unparsable solver status line: s " + status_line);
        } else if (status_line.empty() && exit_code == 10) {
            out.status = SolveStatus::Sat; // SAT Competition exit-code fallback
        } else if (status_line.empty() && exit_code == 20) {
            out.status = SolveStatus::Unsat;
        } else if (exit_code == 124 || !status_line.empty()) {
            out.status = SolveStatus::Unknown; // killed by timeout or declared unknown
        } else {
            throw std::runtime_error("solver produced no recognizable outcome (exit " +
                                     std::to_string(exit_code) + ")");
        }

        if (out.status == SolveStatus::Sat) {
            out.model.assign(nvars_ + 1, false);
            for (int lit : model_lits) {
                int v = std::abs(lit);
                if (v <= nvars_) out.model[v] = lit > 0;
            }
        }
        return out;
    }

    void reset() override {
        nvars_ = 0;
        clauses_.clear();
    }

  private:
    std::string template_;
    int nvars_ = 0;
    std::vector<std::vector<int>> clauses_;
};

} // namespace

std::unique_ptr<SatBackend> make_external_solver(std::string command_template) {
    return std::make_unique<ExternalSolver>(std::move(command_template));
}

} // namespace bcp
