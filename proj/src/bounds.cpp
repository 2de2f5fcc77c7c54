#include "bcp/bounds.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace bcp {

namespace {

// Collects intervals [c(u)-d+1, c(u)+d-1] from colored neighbors, merged and
// sorted by start.
std::vector<std::pair<int, int>> forbidden_intervals(
    const std::vector<std::pair<int, int>>& neighbors, const std::vector<int>& color) {
    std::vector<std::pair<int, int>> iv;
    for (auto [w, d] : neighbors)
        if (color[w] > 0) iv.emplace_back(color[w] - d + 1, color[w] + d - 1);
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<int, int>> merged;
    for (auto [lo, hi] : iv) {
        if (!merged.empty() && lo <= merged.back().second + 1)
            merged.back().second = std::max(merged.back().second, hi);
        else
            merged.emplace_back(lo, hi);
    }
    return merged;
}

int interval_cover(const std::vector<std::pair<int, int>>& merged, int lo, int hi) {
    int total = 0;
    for (auto [a, b] : merged) {
        int x = std::max(a, lo), y = std::min(b, hi);
        if (x <= y) total += y - x + 1;
    }
    return total;
}

int smallest_free_color(const std::vector<std::pair<int, int>>& merged) {
    int cand = 1;
    for (auto [lo, hi] : merged) {
        if (cand < lo) break;
        if (cand <= hi) cand = hi + 1;
    }
    return cand;
}

} // namespace

BoundResult dsatur_bound(const BcpInstance& inst) {
    const auto adj = inst.adjacency();
    const auto deg = inst.degrees();
    std::vector<int> color(inst.n, 0);
    int max_color = 0;

    for (int step = 0; step < inst.n; ++step) {
        int best = -1, best_sat = -1;
        int range_hi = std::max(1, max_color);
        for (int v = 0; v < inst.n; ++v) {
            if (color[v] != 0) continue;
            int sat = interval_cover(forbidden_intervals(adj[v], color), 1, range_hi);
            if (best < 0 || sat > best_sat ||
                (sat == best_sat && (deg[v] > deg[best] || (deg[v] == deg[best] && v < best)))) {
                best = v;
                best_sat = sat;
            }
        }
        color[best] = smallest_free_color(forbidden_intervals(adj[best], color));
        max_color = std::max(max_color, color[best]);
    }

    BoundResult res;
    res.witness = make_coloring(std::move(color));
    res.H = res.witness.span;
    return res;
}

} // namespace bcp
