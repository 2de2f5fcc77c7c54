#include "bcp/search.hpp"
#include "bcp/verify.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace bcp;

namespace {
EncodingConfig cfg_of(Method m, Incremental inc = Incremental::None, bool sym = false) {
    EncodingConfig c;
    c.method = m;
    if (m == Method::BlockX || m == Method::BlockXa) c.width = BlockWidth{false, 8};
    c.incremental = inc;
    c.symmetry = sym;
    return c;
}
} // namespace

TEST_CASE("closed forms through the optimal search") {
    BcpInstance two;
    two.n = 2;
    two.edges = {{0, 1, 3}};
    OptimalResult r = solve_optimal(two, cfg_of(Method::OneG));
    CHECK(r.optimal_span == 4);
    CHECK(r.proven);
    bool forward = r.witness.color == std::vector<int>{1, 4};
    bool backward = r.witness.color == std::vector<int>{4, 1};
    CHECK((forward || backward));

    BcpInstance k3;
    k3.n = 3;
    k3.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
    CHECK(solve_optimal(k3, cfg_of(Method::TwoL)).optimal_span == 3);

    BcpInstance edgeless;
    edgeless.n = 4;
    OptimalResult e = solve_optimal(edgeless, cfg_of(Method::BlockXa));
    CHECK(e.optimal_span == 1);
    CHECK(e.proven);
}

TEST_CASE("all 36 configurations agree on the four-vertex example") {
    BcpInstance inst = test::fig1_instance();
    auto oracle = brute_force_optimal(inst, 10);
    REQUIRE(oracle.has_value());
    CHECK(oracle->optimal_span == 4);
    for (const EncodingConfig& cfg : all_configs()) {
        OptimalResult r = solve_optimal(inst, cfg);
        CAPTURE(cfg.to_string());
        CHECK(r.optimal_span == 4);
        CHECK(r.proven);
        CHECK(validate(inst, r.witness).empty());
    }
}

TEST_CASE("iteration trace decreases by one from H") {
    BcpInstance inst = test::fig1_instance();
    OptimalResult r = solve_optimal(inst, cfg_of(Method::TwoG, Incremental::OnX));
    REQUIRE(!r.iterations.empty());
    CHECK(r.iterations.front().k == r.H);
    for (size_t i = 1; i < r.iterations.size(); ++i)
        CHECK(r.iterations[i].k == r.iterations[i - 1].k - 1);
    CHECK(r.optimal_span <= r.H);
    // Proven optimality requires a closing UNSAT (or span 1).
    CHECK(r.iterations.back().status == SolveStatus::Unsat);
    CHECK(r.iterations.back().k == r.optimal_span - 1);
}

TEST_CASE("incremental equals non-incremental on a corpus slice") {
    for (const BcpInstance& inst : test::small_corpus(8, 31)) {
        for (Method m : {Method::OneG, Method::TwoL, Method::BlockXa}) {
            OptimalResult base = solve_optimal(inst, cfg_of(m));
            Incremental inc = m == Method::OneG ? Incremental::OnY : Incremental::OnX;
            OptimalResult fast = solve_optimal(inst, cfg_of(m, inc));
            CHECK(base.optimal_span == fast.optimal_span);
            CHECK(base.proven == fast.proven);
        }
    }
}

TEST_CASE("near-zero budget yields the dsatur fallback unproven") {
    BcpInstance inst = test::geometric_instance(20, 0.45, 6, 2024);
    OptimalResult r = solve_optimal(inst, cfg_of(Method::OneG), 1e-6);
    CHECK(!r.proven);
    CHECK(r.optimal_span == r.H);
    CHECK(validate(inst, r.witness).empty());
    REQUIRE(!r.iterations.empty());
    CHECK(r.iterations.back().status == SolveStatus::Unknown);
}

TEST_CASE("external backend solves through the search") {
    // The builtin engine exposed behind the subprocess protocol would need a
    // real solver binary; reuse the builtin directly as the factory instead
    // and keep subprocess coverage in the adapter tests.
    BcpInstance inst = test::fig1_instance();
    OptimalResult r = solve_optimal(inst, cfg_of(Method::OneL), 0.0, make_builtin_solver);
    CHECK(r.optimal_span == 4);
}

TEST_CASE("counts_at column semantics") {
    BcpInstance inst = test::fig1_instance();
    OptimalResult inc = solve_optimal(inst, cfg_of(Method::TwoG, Incremental::OnY));
    CHECK(inc.counts_at_initial);
    OptimalResult non = solve_optimal(inst, cfg_of(Method::TwoG));
    CHECK(!non.counts_at_initial);
    // Non-incremental reports the final (optimal-span) encoding, which is
    // smaller than the initial one at H.
    CHECK(non.vars_reported <= inc.vars_reported);
}
