#include "bcp/satcore.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace bcp {

namespace {

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr int kRestartBase = 100;
constexpr double kRestartFactor = 1.5;
constexpr int kBudgetCheckInterval = 256;

inline int var_of(int lit) { return std::abs(lit); }
inline int widx(int lit) { return 2 * var_of(lit) + (lit < 0 ? 1 : 0); }

class CdclSolver final : public SatBackend {
  public:
    void reserve_vars(int n) override {
        if (n <= nvars_) return;
        nvars_ = n;
        assign_.resize(n + 1, 0);
        level_.resize(n + 1, 0);
        reason_.resize(n + 1, -1);
        activity_.resize(n + 1, 0.0);
        phase_.resize(n + 1, 0);
        seen_.resize(n + 1, 0);
        heap_pos_.resize(n + 1, -1);
        watches_.resize(2 * n + 2);
        for (int v = 1; v <= n; ++v)
            if (heap_pos_[v] < 0 && assign_[v] == 0) heap_insert(v);
    }

    void add_clause(std::span<const int> lits) override {
        backtrack(0);
        int maxv = 0;
        for (int l : lits) maxv = std::max(maxv, var_of(l));
        reserve_vars(maxv);

        tmp_.assign(lits.begin(), lits.end());
        std::sort(tmp_.begin(), tmp_.end(), [](int a, int b) {
            return var_of(a) != var_of(b) ? var_of(a) < var_of(b) : a < b;
        });
        std::vector<int> cl;
        for (size_t i = 0; i < tmp_.size(); ++i) {
            int l = tmp_[i];
            if (i + 1 < tmp_.size() && tmp_[i + 1] == -l) return; // tautology
            if (i > 0 && tmp_[i - 1] == l) continue;              // duplicate
            int v = value(l);
            if (v == 1) return;      // satisfied at root
            if (v == -1) continue;   // falsified at root
            cl.push_back(l);
        }
        if (cl.empty()) {
            unsat_ = true;
            return;
        }
        if (cl.size() == 1) {
            enqueue(cl[0], -1);
            if (propagate() >= 0) unsat_ = true;
            return;
        }
        attach(static_cast<int>(new_clause(std::move(cl), false)));
    }

    SolveOutcome solve(std::span<const int> assumptions, double budget_s) override {
        SolveOutcome out;
        auto t0 = std::chrono::steady_clock::now();
        auto finish = [&](SolveStatus st) {
            out.status = st;
            out.stats.conflicts = conflicts_ - stats_base_conflicts_;
            out.stats.decisions = decisions_ - stats_base_decisions_;
            out.stats.propagations = propagations_ - stats_base_propagations_;
            out.stats.wall_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            backtrack(0);
            return out;
        };
        stats_base_conflicts_ = conflicts_;
        stats_base_decisions_ = decisions_;
        stats_base_propagations_ = propagations_;

        for (int l : assumptions) reserve_vars(var_of(l));
        if (unsat_) return finish(SolveStatus::Unsat);
        backtrack(0);
        if (propagate() >= 0) {
            unsat_ = true;
            return finish(SolveStatus::Unsat);
        }
        auto out_of_budget = [&] {
            return budget_s > 0.0 &&
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget_s;
        };
        if (out_of_budget()) return finish(SolveStatus::Unknown);

        std::int64_t since_restart = 0;
        double restart_limit = kRestartBase;
        std::int64_t budget_check = kBudgetCheckInterval;

        for (;;) {
            int confl = propagate();
            if (confl >= 0) {
                ++conflicts_;
                ++since_restart;
                if (decision_level() == 0) {
                    unsat_ = true; // conflict independent of assumptions
                    return finish(SolveStatus::Unsat);
                }
                int bt_level;
                std::vector<int> learnt = analyze(confl, bt_level);
                backtrack(bt_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    int ci = static_cast<int>(new_clause(std::move(learnt), true));
                    attach(ci);
                    enqueue(clauses_[ci].lits[0], ci);
                }
                var_inc_ /= kVarDecay;
                cla_inc_ /= kClauseDecay;

                if (--budget_check <= 0) {
                    budget_check = kBudgetCheckInterval;
                    if (out_of_budget()) return finish(SolveStatus::Unknown);
                }
                if (since_restart >= static_cast<std::int64_t>(restart_limit)) {
                    since_restart = 0;
                    restart_limit *= kRestartFactor;
                    backtrack(0);
                }
                if (num_learnt_ > 4 * std::max<std::int64_t>(num_original_, 500)) reduce_db();
            } else if (decision_level() < static_cast<int>(assumptions.size())) {
                int p = assumptions[decision_level()];
                int v = value(p);
                if (v == -1) return finish(SolveStatus::Unsat); // assumption falsified
                new_decision_level();
                if (v == 0) enqueue(p, -1);
            } else {
                int v = pick_branch_var();
                if (v == 0) {
                    out.model.assign(nvars_ + 1, false);
                    for (int x = 1; x <= nvars_; ++x) out.model[x] = assign_[x] == 1;
                    return finish(SolveStatus::Sat);
                }
                ++decisions_;
                if (--budget_check <= 0) {
                    budget_check = kBudgetCheckInterval;
                    if (out_of_budget()) return finish(SolveStatus::Unknown);
                }
                new_decision_level();
                enqueue(phase_[v] == 1 ? v : -v, -1);
            }
        }
    }

    void reset() override {
        nvars_ = 0;
        unsat_ = false;
        clauses_.clear();
        free_slots_.clear();
        num_original_ = num_learnt_ = 0;
        watches_.clear();
        assign_.clear();
        level_.clear();
        reason_.clear();
        activity_.clear();
        phase_.clear();
        seen_.clear();
        trail_.clear();
        trail_lim_.clear();
        qhead_ = 0;
        heap_.clear();
        heap_pos_.clear();
        var_inc_ = 1.0;
        cla_inc_ = 1.0;
    }

  private:
    struct Clause {
        std::vector<int> lits;
        double activity = 0.0;
        bool learnt = false;
        bool deleted = false;
    };

    int nvars_ = 0;
    bool unsat_ = false;
    std::vector<Clause> clauses_;
    std::vector<int> free_slots_;
    std::int64_t num_original_ = 0, num_learnt_ = 0;
    std::vector<std::vector<int>> watches_;

    std::vector<std::int8_t> assign_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<double> activity_;
    std::vector<std::int8_t> phase_;
    std::vector<std::int8_t> seen_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;

    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;

    std::int64_t conflicts_ = 0, decisions_ = 0, propagations_ = 0;
    std::int64_t stats_base_conflicts_ = 0, stats_base_decisions_ = 0, stats_base_propagations_ = 0;
    std::vector<int> tmp_;
    std::vector<int> to_clear_;

    int value(int lit) const {
        int v = assign_[var_of(lit)];
        return lit > 0 ? v : -v;
    }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }

    size_t new_clause(std::vector<int> lits, bool learnt) {
        size_t ci;
        if (!free_slots_.empty()) {
            ci = free_slots_.back();
            free_slots_.pop_back();
            clauses_[ci] = Clause{std::move(lits), 0.0, learnt, false};
        } else {
            ci = clauses_.size();
            clauses_.push_back(Clause{std::move(lits), 0.0, learnt, false});
        }
        if (learnt) {
            ++num_learnt_;
            bump_clause(clauses_[ci]);
        } else {
            ++num_original_;
        }
        return ci;
    }

    void attach(int ci) {
        const Clause& c = clauses_[ci];
        watches_[widx(c.lits[0])].push_back(ci);
        watches_[widx(c.lits[1])].push_back(ci);
    }

    void enqueue(int lit, int reason_ci) {
        int v = var_of(lit);
        assign_[v] = lit > 0 ? 1 : -1;
        level_[v] = decision_level();
        reason_[v] = reason_ci;
        trail_.push_back(lit);
    }

    // Returns the index of a conflicting clause, or -1.
    int propagate() {
        while (qhead_ < trail_.size()) {
            int p = trail_[qhead_++];
            ++propagations_;
            auto& ws = watches_[widx(-p)];
            size_t i = 0, j = 0;
            while (i < ws.size()) {
                int ci = ws[i];
                Clause& c = clauses_[ci];
                if (c.lits[0] == -p) std::swap(c.lits[0], c.lits[1]);
                // c.lits[1] == -p is now false
                if (value(c.lits[0]) == 1) {
                    ws[j++] = ci;
                    ++i;
                    continue;
                }
                bool moved = false;
                for (size_t t = 2; t < c.lits.size(); ++t) {
                    if (value(c.lits[t]) != -1) {
                        std::swap(c.lits[1], c.lits[t]);
                        watches_[widx(c.lits[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) {
                    ++i;
                    continue;
                }
                ws[j++] = ci;
                ++i;
                if (value(c.lits[0]) == -1) {
                    while (i < ws.size()) ws[j++] = ws[i++];
                    ws.resize(j);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c.lits[0], ci);
            }
            ws.resize(j);
        }
        return -1;
    }

    // First-UIP learning. Returns the learnt clause with the asserting
    // literal first; bt_level receives the backjump level.
    std::vector<int> analyze(int confl, int& bt_level) {
        std::vector<int> learnt{0};
        to_clear_.clear();
        int path = 0;
        int p = 0;
        int index = static_cast<int>(trail_.size()) - 1;
        do {
            Clause& c = clauses_[confl];
            if (c.learnt) bump_clause(c);
            for (size_t t = (p == 0 ? 0 : 1); t < c.lits.size(); ++t) {
                int q = c.lits[t];
                int v = var_of(q);
                if (!seen_[v] && level_[v] > 0) {
                    seen_[v] = 1;
                    to_clear_.push_back(v);
                    bump_var(v);
                    if (level_[v] >= decision_level())
                        ++path;
                    else
                        learnt.push_back(q);
                }
            }
            while (!seen_[var_of(trail_[index])]) --index;
            p = trail_[index];
            confl = reason_[var_of(p)];
            seen_[var_of(p)] = 0;
            --index;
            --path;
            // The resolved pivot sits first in its reason clause; the loop
            // above skips position 0 on subsequent rounds.
        } while (path > 0);
        learnt[0] = -p;

        bt_level = 0;
        if (learnt.size() > 1) {
            size_t best = 1;
            for (size_t t = 2; t < learnt.size(); ++t)
                if (level_[var_of(learnt[t])] > level_[var_of(learnt[best])]) best = t;
            std::swap(learnt[1], learnt[best]);
            bt_level = level_[var_of(learnt[1])];
        }
        for (int v : to_clear_) seen_[v] = 0;
        return learnt;
    }

    void backtrack(int target_level) {
        if (decision_level() <= target_level) return;
        int limit = trail_lim_[target_level];
        for (int i = static_cast<int>(trail_.size()) - 1; i >= limit; --i) {
            int v = var_of(trail_[i]);
            phase_[v] = assign_[v] == 1 ? 1 : 0;
            assign_[v] = 0;
            reason_[v] = -1;
            if (heap_pos_[v] < 0) heap_insert(v);
        }
        trail_.resize(limit);
        trail_lim_.resize(target_level);
        qhead_ = trail_.size();
    }

    int pick_branch_var() {
        while (!heap_.empty()) {
            int v = heap_[0];
            heap_remove_top();
            if (assign_[v] == 0) return v;
        }
        return 0;
    }

    void bump_var(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (int x = 1; x <= nvars_; ++x) activity_[x] *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (heap_pos_[v] >= 0) heap_sift_up(heap_pos_[v]);
    }

    void bump_clause(Clause& c) {
        c.activity += cla_inc_;
        if (c.activity > 1e20) {
            for (Clause& cl : clauses_)
                if (cl.learnt && !cl.deleted) cl.activity *= 1e-20;
            cla_inc_ *= 1e-20;
        }
    }

    bool locked(int ci) const {
        const Clause& c = clauses_[ci];
        int v = var_of(c.lits[0]);
        return assign_[v] != 0 && reason_[v] == ci;
    }

    // Drops the low-activity half of the learnt clauses, keeping binary and
    // locked ones, then rebuilds the watch lists.
    void reduce_db() {
        std::vector<int> learnt_idx;
        for (size_t ci = 0; ci < clauses_.size(); ++ci)
            if (clauses_[ci].learnt && !clauses_[ci].deleted) learnt_idx.push_back(static_cast<int>(ci));
        std::sort(learnt_idx.begin(), learnt_idx.end(), [&](int a, int b) {
            return clauses_[a].activity < clauses_[b].activity;
        });
        size_t target = learnt_idx.size() / 2;
        for (size_t i = 0; i < target; ++i) {
            int ci = learnt_idx[i];
            Clause& c = clauses_[ci];
            if (c.lits.size() <= 2 || locked(ci)) continue;
            c.deleted = true;
            c.lits.clear();
            c.lits.shrink_to_fit();
            free_slots_.push_back(ci);
            --num_learnt_;
        }
        for (auto& w : watches_) w.clear();
        for (size_t ci = 0; ci < clauses_.size(); ++ci)
            if (!clauses_[ci].deleted && !clauses_[ci].lits.empty()) attach(static_cast<int>(ci));
    }

    // Indexed max-heap on activity; ties broken by smaller variable id.
    bool heap_less(int a, int b) const {
        return activity_[a] > activity_[b] || (activity_[a] == activity_[b] && a < b);
    }
    void heap_swap(size_t i, size_t j) {
        std::swap(heap_[i], heap_[j]);
        heap_pos_[heap_[i]] = static_cast<int>(i);
        heap_pos_[heap_[j]] = static_cast<int>(j);
    }
    void heap_sift_up(int pos) {
        while (pos > 0) {
            int parent = (pos - 1) / 2;
            if (heap_less(heap_[pos], heap_[parent])) {
                heap_swap(pos, parent);
                pos = parent;
            } else {
                break;
            }
        }
    }
    void heap_sift_down(size_t pos) {
        for (;;) {
            size_t l = 2 * pos + 1, r = l + 1, best = pos;
            if (l < heap_.size() && heap_less(heap_[l], heap_[best])) best = l;
            if (r < heap_.size() && heap_less(heap_[r], heap_[best])) best = r;
            if (best == pos) break;
            heap_swap(pos, best);
            pos = best;
        }
    }
    void heap_insert(int v) {
        heap_pos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        heap_sift_up(heap_pos_[v]);
    }
    void heap_remove_top() {
        int v = heap_[0];
        heap_pos_[v] = -1;
        heap_[0] = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_pos_[heap_[0]] = 0;
            heap_sift_down(0);
        }
    }
};

} // namespace

std::unique_ptr<SatBackend> make_builtin_solver() { return std::make_unique<CdclSolver>(); }

} // namespace bcp
