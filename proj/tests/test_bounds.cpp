#include "bcp/bounds.hpp"
#include "bcp/verify.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace bcp;

TEST_CASE("dsatur on a single weighted edge") {
    BcpInstance inst;
    inst.n = 2;
    inst.edges = {{0, 1, 3}};
    BoundResult r = dsatur_bound(inst);
    CHECK(r.H == 4);
    CHECK(r.witness.color == std::vector<int>{1, 4});
}

TEST_CASE("dsatur on an edgeless instance") {
    BcpInstance inst;
    inst.n = 5;
    BoundResult r = dsatur_bound(inst);
    CHECK(r.H == 1);
    CHECK(r.witness.color == std::vector<int>(5, 1));
}

TEST_CASE("dsatur on the four-vertex example") {
    // Hand execution under the fixed tie-breaks (saturation, degree, id):
    // A first (deg 3, id 0) -> 1; C next (deg 3) -> 2; B (saturation tie,
    // smaller id than D) -> 5; D -> 3.
    BcpInstance inst = test::fig1_instance();
    BoundResult r = dsatur_bound(inst);
    CHECK(r.H == 5);
    CHECK(r.witness.color == std::vector<int>{1, 5, 2, 3});
    CHECK(validate(inst, r.witness).empty());
    auto oracle = brute_force_optimal(inst, 10);
    REQUIRE(oracle.has_value());
    CHECK(r.H >= oracle->optimal_span);
}

TEST_CASE("dsatur properties on a random corpus") {
    for (const BcpInstance& inst : test::small_corpus(60)) {
        BoundResult r = dsatur_bound(inst);
        CHECK(validate(inst, r.witness).empty());
        CHECK(r.witness.span == r.H);
        int maxd = inst.max_edge_weight();
        CHECK(r.H <= 1 + (inst.n - 1) * std::max(1, maxd));
        auto oracle = brute_force_optimal(inst, r.H);
        REQUIRE(oracle.has_value()); // H is always feasible
        CHECK(r.H >= oracle->optimal_span);
    }
}
