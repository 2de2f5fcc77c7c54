#include "bcp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bcp {

std::vector<std::vector<std::pair<int, int>>> BcpInstance::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].emplace_back(e.v, e.d);
        adj[e.v].emplace_back(e.u, e.d);
    }
    return adj;
}

std::vector<int> BcpInstance::degrees() const {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

int BcpInstance::max_edge_weight() const {
    int m = 0;
    for (const Edge& e : edges) m = std::max(m, e.d);
    return m;
}

Coloring make_coloring(std::vector<int> colors) {
    Coloring c;
    c.color = std::move(colors);
    for (size_t i = 0; i < c.color.size(); ++i) {
        if (c.color[i] < 1)
            throw std::runtime_error("color of vertex " + std::to_string(i) + " is < 1");
        c.span = std::max(c.span, c.color[i]);
    }
    return c;
}

namespace {

struct ColLine {
    char kind = 0; // 'p', 'e', 'n'
    std::vector<long> nums;
};

// Tokenizes one line; returns false for blank/comment lines.
bool split_line(const std::string& line, int lineno, ColLine& out) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) return false;
    if (tag == "c") return false;
    if (tag == "p") {
        std::string fmt;
        if (!(ls >> fmt) || fmt != "edge")
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed header (expected 'p edge <n> <m>')");
        out.kind = 'p';
    } else if (tag == "e") {
        out.kind = 'e';
    } else if (tag == "n") {
        out.kind = 'n';
    } else {
        throw std::runtime_error("line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
    }
    out.nums.clear();
    long x;
    while (ls >> x) out.nums.push_back(x);
    std::string trailing;
    if (ls.clear(), ls >> trailing)
        throw std::runtime_error("line " + std::to_string(lineno) + ": trailing junk '" + trailing + "'");
    return true;
}

// Shared skeleton for the BCP and BMCP readers. Edge handler receives
// 0-based endpoints; demand handler is null for plain .col input.
template <typename EdgeFn, typename DemandFn>
int read_col_lines(std::istream& in, EdgeFn on_edge, DemandFn on_demand, bool allow_self, bool allow_demand) {
    std::string line;
    int lineno = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        ColLine parsed;
        if (!split_line(line, lineno, parsed)) continue;
        if (parsed.kind == 'p') {
            if (n >= 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate header");
            if (parsed.nums.size() != 2 || parsed.nums[0] < 0 || parsed.nums[1] < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed header");
            n = static_cast<int>(parsed.nums[0]);
            continue;
        }
        if (n < 0)
            throw std::runtime_error("line " + std::to_string(lineno) + ": '" + std::string(1, parsed.kind) + "' line before header");
        if (parsed.kind == 'n') {
            if (!allow_demand)
                throw std::runtime_error("line " + std::to_string(lineno) + ": demand lines not allowed in .col input");
            if (parsed.nums.size() != 2)
                throw std::runtime_error("line " + std::to_string(lineno) + ": malformed demand line");
            long v = parsed.nums[0], w = parsed.nums[1];
            if (v < 1 || v > n)
                throw std::runtime_error("line " + std::to_string(lineno) + ": vertex id out of range [1," + std::to_string(n) + "]");
            if (w < 1)
                throw std::runtime_error("line " + std::to_string(lineno) + ": demand < 1");
            on_demand(static_cast<int>(v - 1), static_cast<int>(w));
            continue;
        }
        // edge line
        if (parsed.nums.size() != 2 && parsed.nums.size() != 3)
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed edge line");
        long u = parsed.nums[0], v = parsed.nums[1];
        long d = parsed.nums.size() == 3 ? parsed.nums[2] : 1;
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::runtime_error("line " + std::to_string(lineno) + ": vertex id out of range [1," + std::to_string(n) + "]");
        if (d < 1)
            throw std::runtime_error("line " + std::to_string(lineno) + ": edge weight < 1");
        if (u == v && !allow_self)
            throw std::runtime_error("line " + std::to_string(lineno) + ": self-loop e " + std::to_string(u) + " " + std::to_string(v));
        on_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), static_cast<int>(d), lineno);
    }
    if (n < 0) throw std::runtime_error("missing 'p edge' header");
    return n;
}

} // namespace

BcpInstance parse_col(std::istream& in, std::string name) {
    BcpInstance inst;
    inst.name = std::move(name);
    std::map<std::pair<int, int>, int> seen;
    int n = read_col_lines(
        in,
        [&](int u, int v, int d, int lineno) {
            if (u > v) std::swap(u, v);
            auto [it, fresh] = seen.emplace(std::make_pair(u, v), d);
            if (!fresh && it->second != d)
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate edge (" +
                                         std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                         ") with conflicting weight");
        },
        [](int, int) {}, /*allow_self=*/false, /*allow_demand=*/false);
    inst.n = n;
    inst.edges.reserve(seen.size());
    for (const auto& [uv, d] : seen) inst.edges.push_back({uv.first, uv.second, d});
    return inst;
}

BcpInstance parse_col(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_col(in, std::move(name));
}

BcpInstance load_col_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    auto slash = path.find_last_of('/');
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".col") stem.resize(stem.size() - 4);
    return parse_col(in, stem);
}

std::string write_col(const BcpInstance& inst) {
    std::ostringstream out;
    if (!inst.name.empty()) out << "c " << inst.name << "\n";
    out << "p edge " << inst.n << " " << inst.edges.size() << "\n";
    std::vector<Edge> sorted = inst.edges;
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : sorted)
        out << "e " << e.u + 1 << " " << e.v + 1 << " " << e.d << "\n";
    return out.str();
}

BmcpInstance parse_bmcp(std::istream& in, std::string name) {
    BmcpInstance b;
    b.name = std::move(name);
    std::map<std::pair<int, int>, int>& dist = b.dist;
    std::vector<std::pair<int, int>> demands;
    int n = read_col_lines(
        in,
        [&](int u, int v, int d, int lineno) {
            if (u > v) std::swap(u, v);
            auto [it, fresh] = dist.emplace(std::make_pair(u, v), d);
            if (!fresh && it->second != d)
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate distance (" +
                                         std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                         ") with conflicting weight");
        },
        [&](int v, int w) { demands.emplace_back(v, w); },
        /*allow_self=*/true, /*allow_demand=*/true);
    b.n = n;
    b.demand.assign(n, 1);
    for (auto [v, w] : demands) b.demand[v] = w;
    return b;
}

BmcpInstance parse_bmcp(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_bmcp(in, std::move(name));
}

BcpInstance bmcp_to_bcp(const BmcpInstance& b, std::vector<int>* origin_map) {
    BcpInstance out;
    out.name = b.name;
    std::vector<int> first_copy(b.n, 0);
    int total = 0;
    for (int v = 0; v < b.n; ++v) {
        if (b.demand[v] < 1) throw std::runtime_error("demand < 1 for vertex " + std::to_string(v + 1));
        first_copy[v] = total;
        total += b.demand[v];
    }
    out.n = total;
    if (origin_map) {
        origin_map->clear();
        origin_map->reserve(total);
        for (int v = 0; v < b.n; ++v)
            for (int i = 0; i < b.demand[v]; ++i) origin_map->push_back(v);
    }
    for (int v = 0; v < b.n; ++v) {
        if (b.demand[v] <= 1) continue;
        auto it = b.dist.find({v, v});
        if (it == b.dist.end())
            throw std::runtime_error("vertex " + std::to_string(v + 1) + " has demand " +
                                     std::to_string(b.demand[v]) + " but no self-distance");
        for (int i = 0; i < b.demand[v]; ++i)
            for (int j = i + 1; j < b.demand[v]; ++j)
                out.edges.push_back({first_copy[v] + i, first_copy[v] + j, it->second});
    }
    for (const auto& [uv, d] : b.dist) {
        auto [u, v] = uv;
        if (u == v) continue;
        for (int i = 0; i < b.demand[u]; ++i)
            for (int j = 0; j < b.demand[v]; ++j)
                out.edges.push_back({first_copy[u] + i, first_copy[v] + j, d});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<Edge> validate(const BcpInstance& inst, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != inst.n)
        throw std::runtime_error("coloring covers " + std::to_string(c.color.size()) +
                                 " vertices, instance has " + std::to_string(inst.n));
    std::vector<Edge> violated;
    for (const Edge& e : inst.edges) {
        int diff = c.color[e.u] - c.color[e.v];
        if (diff < 0) diff = -diff;
        if (diff < e.d) violated.push_back(e);
    }
    return violated;
}

Coloring reflect(const Coloring& c, int k) {
    std::vector<int> out(c.color.size());
    for (size_t i = 0; i < c.color.size(); ++i) {
        if (c.color[i] < 1 || c.color[i] > k)
            throw std::runtime_error("color " + std::to_string(c.color[i]) + " outside [1," + std::to_string(k) + "]");
        out[i] = k + 1 - c.color[i];
    }
    return make_coloring(std::move(out));
}

BcpInstance random_instance(int n, double edge_prob, int max_d, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, max_d);
    BcpInstance inst;
    inst.n = n;
    inst.name = "rand" + std::to_string(n) + "_" + std::to_string(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < edge_prob) inst.edges.push_back({u, v, weight(rng)});
    return inst;
}

} // namespace bcp
