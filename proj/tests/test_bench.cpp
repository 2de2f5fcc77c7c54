#include "bcp/bench.hpp"
#include "bcp/verify.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace bcp;

TEST_CASE("csv rows round trip losslessly") {
    std::mt19937 rng(5);
    auto configs = all_configs();
    for (int i = 0; i < 100; ++i) {
        RunRecord r;
        r.instance = "inst" + std::to_string(i);
        r.config = configs[rng() % configs.size()];
        r.span = static_cast<int>(rng() % 50) + 1;
        r.proven = rng() % 2 == 0;
        r.time_s = (rng() % 100000) / 1000.0;
        r.vars = static_cast<int>(rng() % 10000);
        r.clauses = static_cast<int>(rng() % 100000);
        r.iterations = static_cast<int>(rng() % 20) + 1;
        r.counts_at_initial = rng() % 2 == 0;
        std::string row = to_csv_row(r);
        RunRecord back = parse_csv_row(row);
        CHECK(to_csv_row(back) == row);
        CHECK(back.instance == r.instance);
        CHECK(back.config.to_string() == r.config.to_string());
        CHECK(back.span == r.span);
        CHECK(back.proven == r.proven);
        CHECK(back.vars == r.vars);
        CHECK(back.clauses == r.clauses);
        CHECK(back.iterations == r.iterations);
        CHECK(back.counts_at_initial == r.counts_at_initial);
    }
}

TEST_CASE("matrix runs every configuration and agrees with the oracle") {
    std::vector<BcpInstance> instances;
    instances.push_back(test::fig1_instance());
    BcpInstance two;
    two.n = 2;
    two.edges = {{0, 1, 3}};
    two.name = "pair3";
    instances.push_back(two);

    MatrixOptions opts;
    auto records = run_matrix(instances, opts);
    CHECK(records.size() == 72); // 2 instances x 36 configs

    for (const RunRecord& r : records) {
        CHECK(r.proven);
        if (r.instance == "fig1") CHECK(r.span == 4);
        if (r.instance == "pair3") CHECK(r.span == 4);
        CHECK(r.vars > 0);
        CHECK(r.clauses > 0);
    }

    // Deterministic ordering: rows grouped by instance in input order.
    for (size_t i = 0; i < 36; ++i) CHECK(records[i].instance == "fig1");
    for (size_t i = 36; i < 72; ++i) CHECK(records[i].instance == "pair3");
}

TEST_CASE("parallel jobs give identical spans and proven flags") {
    std::vector<BcpInstance> instances = test::small_corpus(3, 909);
    for (size_t i = 0; i < instances.size(); ++i) instances[i].name = "c" + std::to_string(i);

    MatrixOptions serial;
    serial.jobs = 1;
    MatrixOptions parallel;
    parallel.jobs = 4;
    auto a = run_matrix(instances, serial);
    auto b = run_matrix(instances, parallel);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].config.to_string() == b[i].config.to_string());
        CHECK(a[i].span == b[i].span);
        CHECK(a[i].proven == b[i].proven);
    }
}

TEST_CASE("csv document with summary parses back to the same records") {
    std::vector<BcpInstance> instances{test::fig1_instance()};
    auto records = run_matrix(instances, MatrixOptions{});
    std::ostringstream out;
    write_csv(out, records);
    std::istringstream in(out.str());
    auto parsed = parse_csv(in);
    REQUIRE(parsed.size() == records.size());
    for (size_t i = 0; i < parsed.size(); ++i)
        CHECK(to_csv_row(parsed[i]) == to_csv_row(records[i]));
    // Summary lines are present and commented out.
    CHECK(out.str().find("# summary") != std::string::npos);
}

TEST_CASE("empty instance list gives header-only csv") {
    std::ostringstream out;
    write_csv(out, {});
    CHECK(out.str().rfind(csv_header(), 0) == 0);
    std::istringstream in(out.str());
    CHECK(parse_csv(in).empty());
}
