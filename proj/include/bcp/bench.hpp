#pragma once

#include "bcp/encode.hpp"
#include "bcp/instance.hpp"
#include "bcp/search.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bcp {

// One benchmark measurement: an (instance, configuration) pair with the
// search outcome and the encoding size of the initial (incremental) or
// final satisfiable (non-incremental) build.
struct RunRecord {
    std::string instance;
    EncodingConfig config;
    int span = 0;
    bool proven = false;
    double time_s = 0.0;
    int vars = 0;
    std::int64_t clauses = 0;
    int iterations = 0;
    bool counts_at_initial = false;
};

// CSV schema:
// instance,method,width,incremental,symmetry,span,proven,time_s,vars,clauses,iterations,counts_at
std::string csv_header();
std::string to_csv_row(const RunRecord& r);
RunRecord parse_csv_row(const std::string& line);

// Parses a whole CSV document, skipping the header and '#' comment lines.
std::vector<RunRecord> parse_csv(std::istream& in);

struct MatrixOptions {
    double timeout_s = 0.0;      // per (instance, config) pair
    int jobs = 1;                // parallel workers, each with its own backend
    std::string external_cmd;    // empty -> built-in engine
};

// Runs all 36 configurations on every instance. Results are ordered by
// (instance, configuration) regardless of the worker count.
std::vector<RunRecord> run_matrix(const std::vector<BcpInstance>& instances,
                                  const MatrixOptions& opts);

// Rows plus '#'-prefixed per-configuration solved-at-threshold summary
// lines (thresholds 500/1000/1500/2000/2500 seconds).
void write_csv(std::ostream& out, const std::vector<RunRecord>& records, bool with_summary = true);

RunRecord record_from_result(const std::string& instance_name, const EncodingConfig& config,
                             const OptimalResult& r);

} // namespace bcp
