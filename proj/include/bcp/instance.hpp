#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bcp {

// Weighted edge, stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    int d = 1;

    auto operator<=>(const Edge&) const = default;
};

// Bandwidth coloring instance: undirected graph with positive integer
// separation requirements on the edges. Vertices are 0-based internally;
// file formats use 1-based ids (DIMACS convention). Immutable after
// construction, safe to share across threads.
struct BcpInstance {
    int n = 0;
    std::vector<Edge> edges;
    std::string name;

    // (neighbor, d) lists per vertex.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
    std::vector<int> degrees() const;
    int max_edge_weight() const;  // 0 for edgeless instances
};

// Bandwidth multicoloring instance: per-vertex color demand w(v) plus a
// symmetric distance map that includes self-distances d(v,v).
struct BmcpInstance {
    int n = 0;
    std::vector<int> demand;                 // w(v) >= 1
    std::map<std::pair<int, int>, int> dist; // keys with u <= v
    std::string name;
};

struct Coloring {
    std::vector<int> color; // per-vertex, >= 1
    int span = 0;           // max color
};

// Builds a Coloring, computing the span. Throws if any color < 1.
Coloring make_coloring(std::vector<int> colors);

// DIMACS-style .col reader. Grammar: 'c' comment lines, one 'p edge <n> <m>'
// header, 'e <u> <v> [<d>]' edge lines with 1-based ids; a missing <d>
// defaults to 1 so plain GCP files load unchanged. Identical duplicate edges
// are deduplicated; duplicates with conflicting weights are an error.
BcpInstance parse_col(std::istream& in, std::string name = "");
BcpInstance parse_col(const std::string& text, std::string name = "");
BcpInstance load_col_file(const std::string& path);

// Writer: 'c' name comment (when present), 'p edge n m', sorted 'e u v d'
// lines with 1-based ids. parse_col(write_col(x)) == x on canonical input.
std::string write_col(const BcpInstance& inst);

// BMCP dialect reader: same .col skeleton plus 'n <v> <w>' demand lines;
// self-loops 'e v v d' carry the self-distance d(v,v).
BmcpInstance parse_bmcp(std::istream& in, std::string name = "");
BmcpInstance parse_bmcp(const std::string& text, std::string name = "");

// Clique transformation: vertex v becomes w(v) copies pairwise connected
// with weight d(v,v); copies of u and v inherit weight d(u,v). origin_map
// records copy -> original vertex. Throws if a vertex with w(v) > 1 lacks
// a self-distance.
BcpInstance bmcp_to_bcp(const BmcpInstance& b, std::vector<int>* origin_map = nullptr);

// Returns exactly the edges with |c(u) - c(v)| < d; empty iff feasible.
// Throws if the coloring does not cover all vertices.
std::vector<Edge> validate(const BcpInstance& inst, const Coloring& c);

// Reflection c'(v) = k + 1 - c(v). Throws if a color lies outside [1, k].
Coloring reflect(const Coloring& c, int k);

// Small random-instance helper for tests: each pair is an edge with
// probability edge_prob, weights uniform in [1, max_d]. Deterministic in seed.
BcpInstance random_instance(int n, double edge_prob, int max_d, unsigned seed);

} // namespace bcp
