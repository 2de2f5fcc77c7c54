#pragma once

#include "bcp/cnf.hpp"
#include "bcp/instance.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bcp {

enum class Method { OneG, OneL, TwoG, TwoL, BlockX, BlockXa };
enum class Incremental { None, OnX, OnY };

struct BlockWidth {
    bool vary = false;
    int fixed_w = 8; // used when !vary
    auto operator<=>(const BlockWidth&) const = default;
};

// One of the 36 legal combinations of method x width x incremental x
// symmetry. width is meaningful only for the block encodings; incremental
// on x is unavailable for 1G/1L, incremental on y for X/Xa.
struct EncodingConfig {
    Method method = Method::OneG;
    std::optional<BlockWidth> width; // X/Xa only
    Incremental incremental = Incremental::None;
    bool symmetry = false;

    bool is_legal() const;
    void validate() const; // throws with the legality matrix on illegal combos

    std::string method_str() const;
    std::string width_str() const;       // "-", "vary", or "fixed:<w>"
    std::string incremental_str() const; // "none", "x", "y"
    std::string symmetry_str() const;    // "on", "off"
    std::string to_string() const;
};

// All 36 legal configurations, in configuration-matrix order.
std::vector<EncodingConfig> all_configs();

// Parsers for CLI flags and CSV fields; throw on unknown tokens.
Method parse_method(const std::string& s);
BlockWidth parse_width(const std::string& s);
Incremental parse_incremental(const std::string& s);
bool parse_symmetry(const std::string& s);

// Human-readable legality matrix used in usage errors.
std::string legality_matrix();

struct BlockInfo {
    int start = 0;
    int end = 0;
    bool backward = false; // suffix ranges [a, end]
    bool forward = false;  // prefix ranges [start, b]
};

struct EncodeStats {
    std::int64_t base_units = 0;
    std::int64_t ordering = 0;
    std::int64_t channeling = 0;
    std::int64_t distance = 0; // order-encoding distance clauses, both orientations
    std::int64_t chain_defs = 0;
    std::int64_t block_exactly_one = 0;
    std::int64_t window = 0; // block-encoding cross-pair clauses
    std::int64_t subtraction_defs = 0;
    std::int64_t symmetry_units = 0;
};

// A CNF together with everything needed to decode models and to shrink the
// span bound: satisfiable iff a feasible coloring with span <= k exists.
struct EncodedProblem {
    CnfFormula formula;
    VarRegistry registry;
    int n = 0;
    int k = 0;
    EncodingConfig config;
    EncodeStats stats;

    // Contiguous id blocks; 0 when the family is absent.
    int y_base = 0; // id of Y(0,1)
    int x_base = 0; // id of X(0,1)
    std::vector<std::vector<BlockInfo>> blocks; // block methods only

    int y_id(int u, int j) const { return y_base + u * k + (j - 1); }
    int x_id(int u, int j) const { return x_base + u * k + (j - 1); }
};

EncodedProblem encode_1g(const BcpInstance& inst, int k);
EncodedProblem encode_1l(const BcpInstance& inst, int k);
EncodedProblem encode_2g(const BcpInstance& inst, int k);
EncodedProblem encode_2l(const BcpInstance& inst, int k);
EncodedProblem encode_block(const BcpInstance& inst, int k, BlockWidth width, bool aux);

// Restricts the highest-degree vertex (ties by smallest id) to the lower
// half of [1, k] via unit clauses. No-op when k == 1.
void add_symmetry(EncodedProblem& enc, const BcpInstance& inst);

// Builds the encoding for the configured method and applies symmetry
// breaking when enabled.
EncodedProblem build_encoding(const BcpInstance& inst, int k, const EncodingConfig& config);

// Literals restricting the span to at most new_k < enc.k. For incremental
// on y these are per-call solver assumptions; for incremental on x they are
// sound as permanent unit clauses because the search only tightens the span.
std::vector<int> assumptions_for_span(const EncodedProblem& enc, int new_k);

// Extracts the coloring from a satisfying model (indexed by variable id).
// Throws if the model violates the encoding's structural invariants.
Coloring decode(const EncodedProblem& enc, const std::vector<bool>& model);

// Window-sum decomposition over a vertex's block layout, exposed for tests.
// A term is either a single range variable or a difference of two ranges
// from the same chain (outer minus inner).
struct WindowTerm {
    int outer_a = 0, outer_b = 0;
    bool has_inner = false;
    int inner_a = 0, inner_b = 0;
};
std::vector<WindowTerm> decompose_window(std::span<const BlockInfo> blocks, int lo, int hi);

} // namespace bcp
