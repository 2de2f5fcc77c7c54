#include "bcp/verify.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bcp {

namespace {

// Vertices in descending degree (fail-first), ties by smallest id.
std::vector<int> search_order(const BcpInstance& inst) {
    auto deg = inst.degrees();
    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    return order;
}

struct Backtracker {
    const std::vector<std::vector<std::pair<int, int>>>& adj;
    const std::vector<int>& order;
    int k;
    std::vector<int> color;
    std::uint64_t nodes = 0;

    bool run(size_t depth) {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int c = 1; c <= k; ++c) {
            ++nodes;
            bool ok = true;
            for (auto [w, d] : adj[v]) {
                if (color[w] > 0 && std::abs(color[w] - c) < d) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (run(depth + 1)) return true;
            color[v] = 0;
        }
        return false;
    }
};

} // namespace

bool feasible_at(const BcpInstance& inst, int k, std::uint64_t* nodes) {
    const auto adj = inst.adjacency();
    const auto order = search_order(inst);
    Backtracker bt{adj, order, k, std::vector<int>(inst.n, 0)};
    bool ok = bt.run(0);
    if (nodes) *nodes += bt.nodes;
    return ok;
}

std::optional<OracleResult> brute_force_optimal(const BcpInstance& inst, int span_cap) {
    const auto adj = inst.adjacency();
    const auto order = search_order(inst);
    std::uint64_t nodes = 0;
    for (int span = 1; span <= span_cap; ++span) {
        Backtracker bt{adj, order, span, std::vector<int>(inst.n, 0)};
        if (bt.run(0)) {
            OracleResult res;
            res.optimal_span = span;
            res.witness = make_coloring(std::move(bt.color));
            res.nodes_explored = nodes + bt.nodes;
            return res;
        }
        nodes += bt.nodes;
    }
    return std::nullopt;
}

} // namespace bcp
