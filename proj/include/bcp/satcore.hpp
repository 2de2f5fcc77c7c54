#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bcp {

enum class SolveStatus { Sat, Unsat, Unknown };

struct SolveStats {
    std::int64_t conflicts = 0;
    std::int64_t decisions = 0;
    std::int64_t propagations = 0;
    double wall_s = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unknown;
    // Present iff status == Sat; model[v] for v in [1, var_count].
    std::vector<bool> model;
    SolveStats stats;
};

// Assumption-capable SAT backend. Clauses persist across solve calls until
// reset(). solve(A) returns Unsat only if formula /\ A is unsatisfiable;
// with an unlimited budget the status is never Unknown.
class SatBackend {
  public:
    virtual ~SatBackend() = default;

    virtual void reserve_vars(int n) = 0;
    virtual void add_clause(std::span<const int> lits) = 0;
    void add_clause(std::initializer_list<int> lits) { add_clause(std::span<const int>(lits.begin(), lits.size())); }

    // budget_s <= 0 means unlimited.
    virtual SolveOutcome solve(std::span<const int> assumptions = {}, double budget_s = 0.0) = 0;
    virtual void reset() = 0;
};

// Complete CDCL engine: two-watched-literal propagation, first-UIP learning,
// activity-based branching with phase saving, geometric restarts. No
// randomness; identical input sequences give identical outcomes.
std::unique_ptr<SatBackend> make_builtin_solver();

// Adapter around a DIMACS-reading subprocess ("s SATISFIABLE"/"s
// UNSATISFIABLE" plus "v" model lines; SAT-Competition exit codes 10/20
// accepted as fallback). Non-incremental: every solve() writes the full
// formula, with assumptions appended as unit clauses. The command template
// may reference the CNF path as {cnf}; without it the CNF arrives on stdin.
std::unique_ptr<SatBackend> make_external_solver(std::string command_template);

} // namespace bcp
