#include "bcp/encode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcp {

namespace {

const char* method_name(Method m) {
    switch (m) {
        case Method::OneG: return "1g";
        case Method::OneL: return "1l";
        case Method::TwoG: return "2g";
        case Method::TwoL: return "2l";
        case Method::BlockX: return "x";
        case Method::BlockXa: return "xa";
    }
    return "?";
}

bool is_block(Method m) { return m == Method::BlockX || m == Method::BlockXa; }
bool greater_than(Method m) { return m == Method::OneG || m == Method::TwoG; }

} // namespace

bool EncodingConfig::is_legal() const {
    if (width.has_value() != is_block(method)) return false;
    if (incremental == Incremental::OnX && (method == Method::OneG || method == Method::OneL))
        return false;
    if (incremental == Incremental::OnY && is_block(method)) return false;
    if (width && !width->vary && width->fixed_w < 1) return false;
    return true;
}

void EncodingConfig::validate() const {
    if (!is_legal())
        throw std::runtime_error("illegal configuration " + to_string() + "\n" + legality_matrix());
}

std::string EncodingConfig::method_str() const { return method_name(method); }

std::string EncodingConfig::width_str() const {
    if (!width) return "-";
    if (width->vary) return "vary";
    return "fixed:" + std::to_string(width->fixed_w);
}

std::string EncodingConfig::incremental_str() const {
    switch (incremental) {
        case Incremental::None: return "none";
        case Incremental::OnX: return "x";
        case Incremental::OnY: return "y";
    }
    return "?";
}

std::string EncodingConfig::symmetry_str() const { return symmetry ? "on" : "off"; }

std::string EncodingConfig::to_string() const {
    return "(" + method_str() + "," + width_str() + "," + incremental_str() + "," + symmetry_str() + ")";
}

std::vector<EncodingConfig> all_configs() {
    std::vector<EncodingConfig> out;
    auto add = [&](Method m, std::optional<BlockWidth> w, Incremental inc, bool sym) {
        EncodingConfig c{m, w, inc, sym};
        c.validate();
        out.push_back(c);
    };
    for (Method m : {Method::OneG, Method::OneL})
        for (Incremental inc : {Incremental::OnY, Incremental::None})
            for (bool sym : {true, false}) add(m, std::nullopt, inc, sym);
    for (Method m : {Method::TwoG, Method::TwoL})
        for (Incremental inc : {Incremental::OnX, Incremental::OnY, Incremental::None})
            for (bool sym : {true, false}) add(m, std::nullopt, inc, sym);
    for (Method m : {Method::BlockX, Method::BlockXa})
        for (bool vary : {false, true})
            for (Incremental inc : {Incremental::OnX, Incremental::None})
                for (bool sym : {true, false}) add(m, BlockWidth{vary, 8}, inc, sym);
    return out;
}

Method parse_method(const std::string& s) {
    if (s == "1g") return Method::OneG;
    if (s == "1l") return Method::OneL;
    if (s == "2g") return Method::TwoG;
    if (s == "2l") return Method::TwoL;
    if (s == "x") return Method::BlockX;
    if (s == "xa") return Method::BlockXa;
    throw std::runtime_error("unknown method '" + s + "' (expected 1g|1l|2g|2l|x|xa)");
}

BlockWidth parse_width(const std::string& s) {
    if (s == "vary") return BlockWidth{true, 8};
    if (s == "fixed") return BlockWidth{false, 8};
    if (s.rfind("fixed:", 0) == 0) {
        int w = std::stoi(s.substr(6));
        if (w < 1) throw std::runtime_error("block width must be >= 1");
        return BlockWidth{false, w};
    }
    throw std::runtime_error("unknown width '" + s + "' (expected fixed[:w]|vary)");
}

Incremental parse_incremental(const std::string& s) {
    if (s == "none" || s == "-") return Incremental::None;
    if (s == "x") return Incremental::OnX;
    if (s == "y") return Incremental::OnY;
    throw std::runtime_error("unknown incremental mode '" + s + "' (expected none|x|y)");
}

bool parse_symmetry(const std::string& s) {
    if (s == "on" || s == "true" || s == "1") return true;
    if (s == "off" || s == "false" || s == "0") return false;
    throw std::runtime_error("unknown symmetry flag '" + s + "' (expected on|off)");
}

std::string legality_matrix() {
    return "  method  width        incremental  symmetry   configs\n"
           "  1g      -            y, none      on, off    4\n"
           "  1l      -            y, none      on, off    4\n"
           "  2g      -            x, y, none   on, off    6\n"
           "  2l      -            x, y, none   on, off    6\n"
           "  x       fixed, vary  x, none      on, off    8\n"
           "  xa      fixed, vary  x, none      on, off    8\n"
           "                                    total:     36\n";
}

namespace {

// Constant-folding for order-variable literals with out-of-range indices.
// Greater-than semantics: y_{u,j} <=> c(u) >= j, so indices < 1 are true and
// indices > k are false. Less-than semantics: y_{u,j} <=> c(u) <= j, so
// indices < 1 are false and indices > k are true. In-range literals are
// always emitted; the pinned base units take care of indices 1 and k.
enum class Fold { Keep, Omit, ClauseTrue };

Fold fold_gt(int idx, bool positive, int k) {
    if (idx < 1) return positive ? Fold::ClauseTrue : Fold::Omit;
    if (idx > k) return positive ? Fold::Omit : Fold::ClauseTrue;
    return Fold::Keep;
}

Fold fold_lt(int idx, bool positive, int k) {
    if (idx < 1) return positive ? Fold::Omit : Fold::ClauseTrue;
    if (idx > k) return positive ? Fold::ClauseTrue : Fold::Omit;
    return Fold::Keep;
}

struct OrderClause {
    std::vector<int> lits;
    bool satisfied = false;

    void add(Fold f, int lit) {
        if (f == Fold::ClauseTrue) satisfied = true;
        else if (f == Fold::Keep) lits.push_back(lit);
    }
};

struct Builder {
    EncodedProblem enc;

    int fresh(const VarKey& key) {
        int id = enc.registry.fresh(key);
        enc.formula.ensure_vars(id);
        return id;
    }
    void clause(std::vector<int> lits) { enc.formula.add_clause(std::move(lits)); }

    void alloc_y(const BcpInstance& inst, int k) {
        enc.y_base = enc.registry.size() + 1;
        for (int u = 0; u < inst.n; ++u)
            for (int j = 1; j <= k; ++j) fresh(YVar{u, j});
    }
    void alloc_x(const BcpInstance& inst, int k) {
        enc.x_base = enc.registry.size() + 1;
        for (int u = 0; u < inst.n; ++u)
            for (int j = 1; j <= k; ++j) fresh(XVar{u, j});
    }
};

void check_k(int k) {
    if (k < 1) throw std::runtime_error("span bound must be >= 1");
}

// Ordering clauses shared by the greater-than encodings: y_{u,j} -> y_{u,j-1}.
void ordering_gt(Builder& b, int n, int k) {
    for (int u = 0; u < n; ++u) {
        b.enc.formula.add_pinned_unit(b.enc.y_id(u, 1));
        ++b.enc.stats.base_units;
        for (int j = 2; j <= k; ++j) {
            b.clause({-b.enc.y_id(u, j), b.enc.y_id(u, j - 1)});
            ++b.enc.stats.ordering;
        }
    }
}

// And by the less-than encodings: y_{u,j} -> y_{u,j+1}.
void ordering_lt(Builder& b, int n, int k) {
    for (int u = 0; u < n; ++u) {
        b.enc.formula.add_pinned_unit(b.enc.y_id(u, k));
        ++b.enc.stats.base_units;
        for (int j = 1; j <= k - 1; ++j) {
            b.clause({-b.enc.y_id(u, j), b.enc.y_id(u, j + 1)});
            ++b.enc.stats.ordering;
        }
    }
}

} // namespace

EncodedProblem encode_1g(const BcpInstance& inst, int k) {
    check_k(k);
    Builder b;
    b.enc.n = inst.n;
    b.enc.k = k;
    b.enc.config.method = Method::OneG;
    b.alloc_y(inst, k);
    ordering_gt(b, inst.n, k);

    // c(a) = j  ->  c(b) <= j-d or c(b) >= j+d, for both orientations.
    for (const Edge& e : inst.edges) {
        for (auto [a, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (int j = 1; j <= k; ++j) {
                OrderClause cl;
                cl.add(Fold::Keep, -b.enc.y_id(a, j));
                cl.add(fold_gt(j + 1, true, k), j + 1 <= k ? b.enc.y_id(a, j + 1) : 0);
                cl.add(fold_gt(j - e.d + 1, false, k),
                       j - e.d + 1 >= 1 ? -b.enc.y_id(v, j - e.d + 1) : 0);
                cl.add(fold_gt(j + e.d, true, k), j + e.d <= k ? b.enc.y_id(v, j + e.d) : 0);
                if (!cl.satisfied) {
                    b.clause(std::move(cl.lits));
                    ++b.enc.stats.distance;
                }
            }
        }
    }
    return std::move(b.enc);
}

EncodedProblem encode_1l(const BcpInstance& inst, int k) {
    check_k(k);
    Builder b;
    b.enc.n = inst.n;
    b.enc.k = k;
    b.enc.config.method = Method::OneL;
    b.alloc_y(inst, k);
    ordering_lt(b, inst.n, k);

    // Guard y_{a,j} & ~y_{a,j-1} captures c(a) = j under the <= semantics.
    for (const Edge& e : inst.edges) {
        for (auto [a, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (int j = 1; j <= k; ++j) {
                OrderClause cl;
                cl.add(Fold::Keep, -b.enc.y_id(a, j));
                cl.add(fold_lt(j - 1, true, k), j - 1 >= 1 ? b.enc.y_id(a, j - 1) : 0);
                cl.add(fold_lt(j - e.d, true, k), j - e.d >= 1 ? b.enc.y_id(v, j - e.d) : 0);
                cl.add(fold_lt(j + e.d - 1, false, k),
                       j + e.d - 1 <= k ? -b.enc.y_id(v, j + e.d - 1) : 0);
                if (!cl.satisfied) {
                    b.clause(std::move(cl.lits));
                    ++b.enc.stats.distance;
                }
            }
        }
    }
    return std::move(b.enc);
}

namespace {

// x_{u,j} <-> (y_{u,j} & ~y_{u,next}) with next = j+1 (2G) or j-1 (2L).
void channeling(Builder& b, int n, int k, bool gt) {
    for (int u = 0; u < n; ++u) {
        for (int j = 1; j <= k; ++j) {
            int x = b.enc.x_id(u, j);
            int next = gt ? j + 1 : j - 1;
            auto fold = gt ? fold_gt : fold_lt;
            b.clause({-x, b.enc.y_id(u, j)});
            ++b.enc.stats.channeling;
            Fold f = fold(next, false, k);
            if (f == Fold::Keep) {
                b.clause({-x, -b.enc.y_id(u, next)});
                ++b.enc.stats.channeling;
            } else if (f == Fold::Omit) {
                b.clause({-x});
                ++b.enc.stats.channeling;
            } // ClauseTrue: y at next is false by semantics, drop the clause
            OrderClause back;
            back.add(Fold::Keep, -b.enc.y_id(u, j));
            back.add(fold(next, true, k), next >= 1 && next <= k ? b.enc.y_id(u, next) : 0);
            back.add(Fold::Keep, x);
            if (!back.satisfied) {
                b.clause(std::move(back.lits));
                ++b.enc.stats.channeling;
            }
        }
    }
}

} // namespace

EncodedProblem encode_2g(const BcpInstance& inst, int k) {
    check_k(k);
    Builder b;
    b.enc.n = inst.n;
    b.enc.k = k;
    b.enc.config.method = Method::TwoG;
    b.alloc_y(inst, k);
    b.alloc_x(inst, k);
    ordering_gt(b, inst.n, k);
    channeling(b, inst.n, k, /*gt=*/true);

    for (const Edge& e : inst.edges) {
        for (auto [a, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (int j = 1; j <= k; ++j) {
                OrderClause cl;
                cl.add(Fold::Keep, -b.enc.x_id(a, j));
                cl.add(fold_gt(j - e.d + 1, false, k),
                       j - e.d + 1 >= 1 ? -b.enc.y_id(v, j - e.d + 1) : 0);
                cl.add(fold_gt(j + e.d, true, k), j + e.d <= k ? b.enc.y_id(v, j + e.d) : 0);
                if (!cl.satisfied) {
                    b.clause(std::move(cl.lits));
                    ++b.enc.stats.distance;
                }
            }
        }
    }
    return std::move(b.enc);
}

EncodedProblem encode_2l(const BcpInstance& inst, int k) {
    check_k(k);
    Builder b;
    b.enc.n = inst.n;
    b.enc.k = k;
    b.enc.config.method = Method::TwoL;
    b.alloc_y(inst, k);
    b.alloc_x(inst, k);
    ordering_lt(b, inst.n, k);
    channeling(b, inst.n, k, /*gt=*/false);

    for (const Edge& e : inst.edges) {
        for (auto [a, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (int j = 1; j <= k; ++j) {
                OrderClause cl;
                cl.add(Fold::Keep, -b.enc.x_id(a, j));
                cl.add(fold_lt(j - e.d, true, k), j - e.d >= 1 ? b.enc.y_id(v, j - e.d) : 0);
                cl.add(fold_lt(j + e.d - 1, false, k),
                       j + e.d - 1 <= k ? -b.enc.y_id(v, j + e.d - 1) : 0);
                if (!cl.satisfied) {
                    b.clause(std::move(cl.lits));
                    ++b.enc.stats.distance;
                }
            }
        }
    }
    return std::move(b.enc);
}

std::vector<WindowTerm> decompose_window(std::span<const BlockInfo> blocks, int lo, int hi) {
    size_t bi = 0;
    while (bi < blocks.size() && blocks[bi].end < lo) ++bi;
    if (bi == blocks.size() || blocks[bi].start > lo)
        throw std::runtime_error("window start outside block layout");
    const BlockInfo& blk = blocks[bi];

    std::vector<WindowTerm> terms;
    if (hi <= blk.end) {
        if (lo == blk.start && hi == blk.end) {
            terms.push_back({blk.start, blk.end, false, 0, 0});
        } else if (lo == blk.start) { // prefix of the block
            if (blk.forward)
                terms.push_back({blk.start, hi, false, 0, 0});
            else
                terms.push_back({blk.start, blk.end, true, hi + 1, blk.end});
        } else if (hi == blk.end) { // suffix of the block
            if (blk.backward)
                terms.push_back({lo, blk.end, false, 0, 0});
            else
                terms.push_back({blk.start, blk.end, true, blk.start, lo - 1});
        } else { // strictly interior: forward difference when available
            if (blk.forward)
                terms.push_back({blk.start, hi, true, blk.start, lo - 1});
            else
                terms.push_back({lo, blk.end, true, hi + 1, blk.end});
        }
        return terms;
    }

    // Window spans several blocks: suffix piece, whole blocks, prefix piece.
    terms.push_back({lo, blk.end, false, 0, 0});
    size_t bj = bi + 1;
    while (bj < blocks.size() && blocks[bj].end <= hi) {
        terms.push_back({blocks[bj].start, blocks[bj].end, false, 0, 0});
        ++bj;
    }
    if (bj < blocks.size() && blocks[bj].start <= hi)
        terms.push_back({blocks[bj].start, hi, false, 0, 0});
    return terms;
}

EncodedProblem encode_block(const BcpInstance& inst, int k, BlockWidth width, bool aux) {
    check_k(k);
    Builder b;
    b.enc.n = inst.n;
    b.enc.k = k;
    b.enc.config.method = aux ? Method::BlockXa : Method::BlockX;
    b.enc.config.width = width;
    b.alloc_x(inst, k);

    // Per-vertex block layout; isolated vertices fall back to the fixed
    // default width under the vary strategy.
    std::vector<int> max_inc_d(inst.n, 0);
    for (const Edge& e : inst.edges) {
        max_inc_d[e.u] = std::max(max_inc_d[e.u], e.d);
        max_inc_d[e.v] = std::max(max_inc_d[e.v], e.d);
    }
    b.enc.blocks.resize(inst.n);
    for (int u = 0; u < inst.n; ++u) {
        int w = width.vary ? (max_inc_d[u] > 0 ? max_inc_d[u] : 8) : width.fixed_w;
        for (int start = 1; start <= k; start += w) {
            BlockInfo blk;
            blk.start = start;
            blk.end = std::min(start + w - 1, k);
            b.enc.blocks[u].push_back(blk);
        }
        auto& bl = b.enc.blocks[u];
        if (bl.size() == 1) {
            bl[0].backward = bl[0].forward = true;
        } else {
            for (size_t i = 0; i < bl.size(); ++i) {
                bl[i].backward = i + 1 < bl.size(); // all but the last
                bl[i].forward = i > 0;              // all but the first
            }
        }
    }

    // Staircase range variables. Chain links are full biconditionals so the
    // window constraints can use R in both polarities.
    enum DefKind { Base = 0, BackLink = 1, ForwardLink = 2 };
    std::set<std::pair<int, int>> defined; // (R id, DefKind)
    auto r_id = [&](int u, int a, int bb) {
        RVar key{u, a, bb};
        if (auto id = b.enc.registry.lookup(key)) return *id;
        return b.fresh(key);
    };
    auto define_base = [&](int u, int j) {
        int r = r_id(u, j, j);
        if (!defined.insert({r, Base}).second) return r;
        b.clause({-r, b.enc.x_id(u, j)});
        b.clause({-b.enc.x_id(u, j), r});
        b.enc.stats.chain_defs += 2;
        return r;
    };
    auto define_link = [&](int u, int a, int bb, bool backward) {
        // backward: R(a,b) <-> x_a | R(a+1,b); forward: R(a,b) <-> x_b | R(a,b-1)
        int r = r_id(u, a, bb);
        if (!defined.insert({r, backward ? BackLink : ForwardLink}).second) return r;
        int x = b.enc.x_id(u, backward ? a : bb);
        int rest = backward ? r_id(u, a + 1, bb) : r_id(u, a, bb - 1);
        b.clause({-r, x, rest});
        b.clause({-x, r});
        b.clause({-rest, r});
        b.enc.stats.chain_defs += 3;
        return r;
    };
    for (int u = 0; u < inst.n; ++u) {
        for (const BlockInfo& blk : b.enc.blocks[u]) {
            if (blk.backward) {
                define_base(u, blk.end);
                for (int a = blk.end - 1; a >= blk.start; --a) define_link(u, a, blk.end, true);
            }
            if (blk.forward) {
                define_base(u, blk.start);
                for (int bb = blk.start + 1; bb <= blk.end; ++bb) define_link(u, blk.start, bb, false);
            }
        }
    }

    // Exactly one block holds the assigned color.
    for (int u = 0; u < inst.n; ++u) {
        std::vector<int> whole;
        for (const BlockInfo& blk : b.enc.blocks[u]) whole.push_back(r_id(u, blk.start, blk.end));
        b.clause(std::vector<int>(whole));
        ++b.enc.stats.block_exactly_one;
        for (size_t i = 0; i < whole.size(); ++i)
            for (size_t j = i + 1; j < whole.size(); ++j) {
                b.clause({-whole[i], -whole[j]});
                ++b.enc.stats.block_exactly_one;
            }
    }

    // Window constraints. Every pair of colors closer than d is covered by
    // some width-d window; weights above k collapse to the single [1,k]
    // window, which the exactly-one constraints then refute.
    std::map<std::pair<int, int>, int> sub_cache; // (outer R, inner R) -> S id
    auto term_lits = [&](int u, const WindowTerm& t, std::vector<int>& out) {
        int outer = r_id(u, t.outer_a, t.outer_b);
        if (!t.has_inner) {
            out.push_back(-outer);
            return;
        }
        int inner = r_id(u, t.inner_a, t.inner_b);
        if (aux) {
            auto it = sub_cache.find({outer, inner});
            int s;
            if (it != sub_cache.end()) {
                s = it->second;
            } else {
                s = b.fresh(SVar{u, t.outer_a, t.outer_b, t.inner_a, t.inner_b});
                sub_cache.emplace(std::make_pair(outer, inner), s);
                b.clause({-s, outer});
                b.clause({-s, -inner});
                b.clause({-outer, inner, s});
                b.enc.stats.subtraction_defs += 3;
            }
            out.push_back(-s);
        } else {
            out.push_back(-outer);
            out.push_back(inner);
        }
    };
    for (const Edge& e : inst.edges) {
        int d = std::min(e.d, k);
        for (int c = 1; c + d - 1 <= k; ++c) {
            auto terms_u = decompose_window(b.enc.blocks[e.u], c, c + d - 1);
            auto terms_v = decompose_window(b.enc.blocks[e.v], c, c + d - 1);
            for (const WindowTerm& tu : terms_u) {
                for (const WindowTerm& tv : terms_v) {
                    std::vector<int> lits;
                    term_lits(e.u, tu, lits);
                    term_lits(e.v, tv, lits);
                    b.clause(std::move(lits));
                    ++b.enc.stats.window;
                }
            }
        }
    }
    return std::move(b.enc);
}

void add_symmetry(EncodedProblem& enc, const BcpInstance& inst) {
    enc.config.symmetry = true;
    if (enc.k == 1) return; // degenerate: no room below the midpoint
    auto deg = inst.degrees();
    int h = 0;
    for (int v = 1; v < inst.n; ++v)
        if (deg[v] > deg[h]) h = v;
    // ceil(k/2): with an odd span the midpoint color is a fixed point of the
    // reflection, so it must stay allowed or optima with h centered are lost.
    int half = (enc.k + 1) / 2;
    switch (enc.config.method) {
        case Method::OneG:
            enc.formula.add_clause({-enc.y_id(h, half + 1)});
            ++enc.stats.symmetry_units;
            break;
        case Method::OneL:
            enc.formula.add_clause({enc.y_id(h, half)});
            ++enc.stats.symmetry_units;
            break;
        default:
            for (int j = half + 1; j <= enc.k; ++j) {
                enc.formula.add_clause({-enc.x_id(h, j)});
                ++enc.stats.symmetry_units;
            }
    }
}

EncodedProblem build_encoding(const BcpInstance& inst, int k, const EncodingConfig& config) {
    config.validate();
    EncodedProblem enc;
    switch (config.method) {
        case Method::OneG: enc = encode_1g(inst, k); break;
        case Method::OneL: enc = encode_1l(inst, k); break;
        case Method::TwoG: enc = encode_2g(inst, k); break;
        case Method::TwoL: enc = encode_2l(inst, k); break;
        case Method::BlockX: enc = encode_block(inst, k, *config.width, false); break;
        case Method::BlockXa: enc = encode_block(inst, k, *config.width, true); break;
    }
    enc.config = config;
    if (config.symmetry) {
        enc.config.symmetry = false; // add_symmetry re-sets it
        add_symmetry(enc, inst);
    }
    return enc;
}

std::vector<int> assumptions_for_span(const EncodedProblem& enc, int new_k) {
    if (enc.config.incremental == Incremental::None)
        throw std::runtime_error("encoding was not built for incremental solving");
    if (new_k >= enc.k || new_k < 1)
        throw std::runtime_error("span restriction " + std::to_string(new_k) +
                                 " not below encoded bound " + std::to_string(enc.k));
    std::vector<int> lits;
    if (enc.config.incremental == Incremental::OnY) {
        for (int u = 0; u < enc.n; ++u)
            lits.push_back(greater_than(enc.config.method) ? -enc.y_id(u, new_k + 1)
                                                           : enc.y_id(u, new_k));
    } else {
        for (int u = 0; u < enc.n; ++u)
            for (int j = new_k + 1; j <= enc.k; ++j) lits.push_back(-enc.x_id(u, j));
    }
    return lits;
}

Coloring decode(const EncodedProblem& enc, const std::vector<bool>& model) {
    if (static_cast<int>(model.size()) < enc.formula.var_count() + 1)
        throw std::runtime_error("model does not cover all encoded variables");
    std::vector<int> colors(enc.n, 0);
    auto bad = [](int u, const char* what) -> std::runtime_error {
        return std::runtime_error("model violates " + std::string(what) + " invariant at vertex " +
                                  std::to_string(u));
    };
    switch (enc.config.method) {
        case Method::OneG:
            for (int u = 0; u < enc.n; ++u) {
                int c = 0;
                for (int j = 1; j <= enc.k; ++j)
                    if (model[enc.y_id(u, j)]) {
                        if (j != c + 1) throw bad(u, "ordering");
                        c = j;
                    }
                if (c == 0) throw bad(u, "base range");
                colors[u] = c;
            }
            break;
        case Method::OneL:
            for (int u = 0; u < enc.n; ++u) {
                int c = 0;
                for (int j = enc.k; j >= 1; --j)
                    if (model[enc.y_id(u, j)]) {
                        if (j != (c == 0 ? enc.k : c - 1)) throw bad(u, "ordering");
                        c = j;
                    }
                if (c == 0) throw bad(u, "base range");
                colors[u] = c;
            }
            break;
        case Method::TwoG:
        case Method::TwoL:
            for (int u = 0; u < enc.n; ++u) {
                int c = 0;
                for (int j = 1; j <= enc.k; ++j)
                    if (model[enc.x_id(u, j)]) {
                        if (c != 0) throw bad(u, "unique assignment");
                        c = j;
                    }
                if (c == 0) throw bad(u, "assignment");
                colors[u] = c;
            }
            break;
        case Method::BlockX:
        case Method::BlockXa:
            for (int u = 0; u < enc.n; ++u) {
                int lo = 0, hi = 0;
                for (int j = 1; j <= enc.k; ++j)
                    if (model[enc.x_id(u, j)]) {
                        if (lo == 0) lo = j;
                        hi = j;
                    }
                if (lo == 0) throw bad(u, "assignment");
                const BlockInfo* blk = nullptr;
                for (const BlockInfo& cand : enc.blocks[u])
                    if (lo >= cand.start && lo <= cand.end) blk = &cand;
                if (!blk || hi > blk->end) throw bad(u, "single true block");
                // Backward-only blocks subtract ranges above the window, so
                // only the largest color there is safe against every emitted
                // window clause; forward-chained blocks are safe at the
                // smallest.
                colors[u] = blk->forward ? lo : hi;
            }
            break;
    }
    Coloring result = make_coloring(std::move(colors));
    if (result.span > enc.k) throw std::runtime_error("decoded span exceeds bound");
    return result;
}

} // namespace bcp
