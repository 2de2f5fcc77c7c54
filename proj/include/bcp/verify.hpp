#pragma once

#include "bcp/instance.hpp"

#include <cstdint>
#include <optional>

namespace bcp {

struct OracleResult {
    int optimal_span = 0;
    Coloring witness;
    std::uint64_t nodes_explored = 0;
};

// Exhaustive backtracking oracle, intended for n <= 10 and small caps.
// Tries spans 1, 2, ... up to span_cap; the first feasible span is optimal.
// Returns nullopt when the cap is exceeded, never a wrong answer.
std::optional<OracleResult> brute_force_optimal(const BcpInstance& inst, int span_cap);

// Fixed-span feasibility by the same backtracking search.
bool feasible_at(const BcpInstance& inst, int k, std::uint64_t* nodes = nullptr);

} // namespace bcp
