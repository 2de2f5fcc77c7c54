#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bcp {

// Semantic variable keys. X(u,j): c(u) = j. Y(u,j): c(u) >= j (greater-than
// encodings) or c(u) <= j (less-than encodings). R(u,a,b): the color of u
// lies in [a,b]. S(u,a,b,a2,b2): subtraction auxiliary R(u,a,b) & ~R(u,a2,b2).
struct XVar {
    int u, j;
    auto operator<=>(const XVar&) const = default;
};
struct YVar {
    int u, j;
    auto operator<=>(const YVar&) const = default;
};
struct RVar {
    int u, a, b;
    auto operator<=>(const RVar&) const = default;
};
struct SVar {
    int u, a, b, a2, b2;
    auto operator<=>(const SVar&) const = default;
};
struct AuxVar {
    std::string label;
    auto operator<=>(const AuxVar&) const = default;
};

using VarKey = std::variant<XVar, YVar, RVar, SVar, AuxVar>;

std::string to_string(const VarKey& key);

// Injective both ways: each key maps to exactly one positive variable id,
// ids are allocated sequentially from 1.
class VarRegistry {
  public:
    int fresh(const VarKey& key); // throws on duplicate key
    std::optional<int> lookup(const VarKey& key) const;
    const VarKey& reverse(int id) const; // throws if id unallocated
    int size() const { return static_cast<int>(by_id_.size()); }

  private:
    std::map<VarKey, int> by_key_;
    std::vector<VarKey> by_id_;
};

// Clause store. Literals are nonzero ints referencing allocated variables.
// Unit clauses that pin encoder-level constants (e.g. the base-range units
// y_{u,1}) are tracked separately so size accounting can report free
// variables; symmetry or incremental units are ordinary clauses.
class CnfFormula {
  public:
    int var_count() const { return var_count_; }
    void ensure_vars(int n);

    void add_clause(std::vector<int> lits); // empty clause marks unsatisfiability
    void add_pinned_unit(int lit);

    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    std::size_t clause_count() const { return clauses_.size(); }
    bool has_empty_clause() const { return has_empty_; }

    int pinned_count() const { return pinned_; }
    int free_var_count() const { return var_count_ - pinned_; }
    bool is_pinned(int var) const;

  private:
    int var_count_ = 0;
    int pinned_ = 0;
    bool has_empty_ = false;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::int8_t> pin_value_; // 0 none, +1 true, -1 false
};

// 'p cnf <vars> <clauses>' then one 0-terminated clause per line.
std::string to_dimacs(const CnfFormula& f);

// Minimal reader for round-trip checks and the external-solver tests.
// Accepts comment lines and multi-line clauses.
CnfFormula parse_dimacs(const std::string& text);

} // namespace bcp
