#pragma once

#include "bcp/instance.hpp"

namespace bcp {

struct BoundResult {
    int H = 0;         // upper bound on the span
    Coloring witness;  // feasible, span == H
};

// DSatur-style greedy upper bound with weighted forbidden intervals.
// Selection order: maximum saturation (forbidden colors within [1, current
// max color]), ties by total degree, then smallest vertex id. Each vertex
// gets the smallest positive color outside the union of intervals
// [c(u)-d+1, c(u)+d-1] over colored neighbors u. One deterministic pass.
BoundResult dsatur_bound(const BcpInstance& inst);

} // namespace bcp
