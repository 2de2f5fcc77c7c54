#pragma once

#include "bcp/bounds.hpp"
#include "bcp/encode.hpp"
#include "bcp/instance.hpp"
#include "bcp/satcore.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace bcp {

struct IterationRecord {
    int k = 0;
    SolveStatus status = SolveStatus::Unknown;
    double time_s = 0.0;
    std::int64_t conflicts = 0;
};

struct OptimalResult {
    int optimal_span = 0;
    Coloring witness; // always feasible; span == optimal_span
    bool proven = false;
    int H = 0; // DSatur start bound
    std::vector<IterationRecord> iterations;
    double total_time_s = 0.0;

    // Encoding size of the initial build at H (incremental) or of the last
    // satisfiable build (non-incremental).
    int vars_reported = 0;
    std::int64_t clauses_reported = 0;
    bool counts_at_initial = false;
};

using BackendFactory = std::function<std::unique_ptr<SatBackend>()>;

// Downward linear search for the optimal span: start at the DSatur bound,
// decrement while satisfiable. Incremental modes encode once at H and
// restrict the span per iteration (assumptions for incremental-on-y,
// permanent units for incremental-on-x); non-incremental mode re-encodes
// at every k. budget_s <= 0 means unlimited; each SAT call receives the
// remaining global budget. On a timeout the best known witness is returned
// with proven = false.
OptimalResult solve_optimal(const BcpInstance& inst, const EncodingConfig& config,
                            double budget_s = 0.0, const BackendFactory& factory = {});

// Loads a finished formula into a backend.
void load_formula(SatBackend& backend, const CnfFormula& formula);

} // namespace bcp
