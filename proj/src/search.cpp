#include "bcp/search.hpp"

#include <chrono>
#include <stdexcept>

namespace bcp {

void load_formula(SatBackend& backend, const CnfFormula& formula) {
    backend.reserve_vars(formula.var_count());
    for (const auto& cl : formula.clauses()) backend.add_clause(cl);
}

OptimalResult solve_optimal(const BcpInstance& inst, const EncodingConfig& config,
                            double budget_s, const BackendFactory& factory) {
    config.validate();
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    // Returns the remaining budget, or a tiny positive value once exhausted
    // so the next call reports Unknown instead of running unbounded.
    auto remaining = [&]() -> double {
        if (budget_s <= 0.0) return 0.0;
        double r = budget_s - elapsed();
        return r > 0.0 ? r : 1e-9;
    };

    std::unique_ptr<SatBackend> backend = factory ? factory() : make_builtin_solver();
    const bool incremental = config.incremental != Incremental::None;

    OptimalResult res;
    BoundResult bound = dsatur_bound(inst);
    res.H = bound.H;
    Coloring best = bound.witness;

    int k = res.H;
    EncodedProblem enc = build_encoding(inst, k, config);
    res.vars_reported = enc.formula.var_count();
    res.clauses_reported = static_cast<std::int64_t>(enc.formula.clause_count());
    res.counts_at_initial = incremental;
    backend->reset();
    load_formula(*backend, enc.formula);

    SolveOutcome out = backend->solve({}, remaining());
    res.iterations.push_back({k, out.status, out.stats.wall_s, out.stats.conflicts});
    if (out.status == SolveStatus::Unsat)
        throw std::runtime_error("UNSAT at the DSatur bound; the bound's witness is feasible, so "
                                 "this signals an encoder or solver defect");
    bool saw_unsat = false;
    if (out.status == SolveStatus::Sat) {
        best = decode(enc, out.model);
        if (!validate(inst, best).empty())
            throw std::runtime_error("decoded witness fails validation at k=" + std::to_string(k));

        while (k > 1) {
            int next = k - 1;
            if (incremental) {
                std::vector<int> lits = assumptions_for_span(enc, next);
                if (config.incremental == Incremental::OnX) {
                    // Sound as permanent units: the search never widens the span.
                    for (int l : lits) backend->add_clause({l});
                    out = backend->solve({}, remaining());
                } else {
                    out = backend->solve(lits, remaining());
                }
            } else {
                enc = build_encoding(inst, next, config);
                backend->reset();
                load_formula(*backend, enc.formula);
                out = backend->solve({}, remaining());
            }
            res.iterations.push_back({next, out.status, out.stats.wall_s, out.stats.conflicts});
            if (out.status == SolveStatus::Sat) {
                best = decode(enc, out.model);
                if (!validate(inst, best).empty())
                    throw std::runtime_error("decoded witness fails validation at k=" + std::to_string(next));
                if (!incremental) {
                    res.vars_reported = enc.formula.var_count();
                    res.clauses_reported = static_cast<std::int64_t>(enc.formula.clause_count());
                }
                k = next;
                continue;
            }
            if (out.status == SolveStatus::Unsat) saw_unsat = true;
            break;
        }
    }

    res.optimal_span = best.span;
    res.witness = std::move(best);
    res.proven = saw_unsat || res.optimal_span == 1;
    res.total_time_s = elapsed();
    return res;
}

} // namespace bcp
