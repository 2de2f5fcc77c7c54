#pragma once

#include "bcp/cnf.hpp"
#include "bcp/instance.hpp"
#include "bcp/satcore.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bcp::test {

inline const std::string kFig1Text =
    "c four-vertex example\n"
    "p edge 4 5\n"
    "e 1 2 2\n"
    "e 2 3 3\n"
    "e 3 4 1\n"
    "e 4 1 2\n"
    "e 1 3 1\n";

inline BcpInstance fig1_instance() { return parse_col(kFig1Text, "fig1"); }

// Deterministic corpus matching the acceptance setup: n in [3,8], edge
// probability 0.5, weights in [1,4].
inline std::vector<BcpInstance> small_corpus(int count, unsigned seed0 = 12345) {
    std::vector<BcpInstance> out;
    std::mt19937 meta(seed0);
    std::uniform_int_distribution<int> size(3, 8);
    for (int i = 0; i < count; ++i)
        out.push_back(random_instance(size(meta), 0.5, 4, seed0 + 1000 + i));
    return out;
}

// Exhaustive truth-table check, independent of the CDCL implementation.
// Returns true iff some assignment satisfies every clause.
inline bool truth_table_sat(int nvars, const std::vector<std::vector<int>>& clauses) {
    for (std::uint64_t m = 0; m < (1ull << nvars); ++m) {
        bool ok = true;
        for (const auto& cl : clauses) {
            bool sat = false;
            for (int lit : cl) {
                int v = std::abs(lit);
                bool val = (m >> (v - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

inline bool truth_table_sat(const CnfFormula& f) {
    return truth_table_sat(f.var_count(), f.clauses());
}

struct RandomCnf {
    int nvars = 0;
    std::vector<std::vector<int>> clauses;
};

// Random 3-CNF near the phase transition so both outcomes occur.
inline RandomCnf random_3cnf(unsigned seed, int min_vars = 5, int max_vars = 14) {
    std::mt19937 rng(seed);
    RandomCnf f;
    f.nvars = std::uniform_int_distribution<int>(min_vars, max_vars)(rng);
    int m = static_cast<int>(std::lround(4.26 * f.nvars));
    std::uniform_int_distribution<int> var(1, f.nvars);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < m; ++i) {
        std::vector<int> cl;
        while (cl.size() < 3) {
            int v = var(rng);
            bool dup = false;
            for (int l : cl)
                if (std::abs(l) == v) dup = true;
            if (!dup) cl.push_back(sign(rng) ? v : -v);
        }
        f.clauses.push_back(cl);
    }
    return f;
}

// Pigeonhole principle: pigeons+0 birds into holes; UNSAT iff pigeons > holes.
inline std::vector<std::vector<int>> php_clauses(int pigeons, int holes) {
    auto var = [&](int p, int h) { return p * holes + h + 1; };
    std::vector<std::vector<int>> clauses;
    for (int p = 0; p < pigeons; ++p) {
        std::vector<int> alo;
        for (int h = 0; h < holes; ++h) alo.push_back(var(p, h));
        clauses.push_back(alo);
    }
    for (int h = 0; h < holes; ++h)
        for (int p1 = 0; p1 < pigeons; ++p1)
            for (int p2 = p1 + 1; p2 < pigeons; ++p2)
                clauses.push_back({-var(p1, h), -var(p2, h)});
    return clauses;
}

// Geometric random instance in the GEOM style: points on a grid, an edge
// when two points are closer than a radius, weight growing with proximity.
inline BcpInstance geometric_instance(int n, double radius_frac, int max_d, unsigned seed,
                                      std::string name = "") {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1000.0);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
    double r = 1000.0 * radius_frac;
    BcpInstance inst;
    inst.n = n;
    inst.name = name.empty() ? ("geom" + std::to_string(n)) : std::move(name);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double dx = pts[u].first - pts[v].first, dy = pts[u].second - pts[v].second;
            double dist = std::sqrt(dx * dx + dy * dy);
            if (dist >= r) continue;
            int d = std::max(1, static_cast<int>(std::lround((1.0 - dist / r) * max_d)));
            inst.edges.push_back({u, v, d});
        }
    return inst;
}

} // namespace bcp::test
