#include "bcp/bench.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bcp {

std::string csv_header() {
    return "instance,method,width,incremental,symmetry,span,proven,time_s,vars,clauses,iterations,counts_at";
}

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream out;
    out << r.instance << ',' << r.config.method_str() << ',' << r.config.width_str() << ','
        << r.config.incremental_str() << ',' << r.config.symmetry_str() << ',' << r.span << ','
        << (r.proven ? 1 : 0) << ',' << std::fixed << std::setprecision(3) << r.time_s << ','
        << r.vars << ',' << r.clauses << ',' << r.iterations << ','
        << (r.counts_at_initial ? "initial" : "final");
    return out.str();
}

RunRecord parse_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (fields.size() != 12)
        throw std::runtime_error("expected 12 CSV fields, got " + std::to_string(fields.size()) +
                                 " in: " + line);
    RunRecord r;
    r.instance = fields[0];
    r.config.method = parse_method(fields[1]);
    if (fields[2] != "-") r.config.width = parse_width(fields[2]);
    r.config.incremental = parse_incremental(fields[3]);
    r.config.symmetry = parse_symmetry(fields[4]);
    r.config.validate();
    r.span = std::stoi(fields[5]);
    r.proven = fields[6] == "1";
    r.time_s = std::stod(fields[7]);
    r.vars = std::stoi(fields[8]);
    r.clauses = std::stoll(fields[9]);
    r.iterations = std::stoi(fields[10]);
    if (fields[11] != "initial" && fields[11] != "final")
        throw std::runtime_error("bad counts_at field: " + fields[11]);
    r.counts_at_initial = fields[11] == "initial";
    return r;
}

std::vector<RunRecord> parse_csv(std::istream& in) {
    std::vector<RunRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line == csv_header()) continue;
        out.push_back(parse_csv_row(line));
    }
    return out;
}

RunRecord record_from_result(const std::string& instance_name, const EncodingConfig& config,
                             const OptimalResult& r) {
    RunRecord rec;
    rec.instance = instance_name;
    rec.config = config;
    rec.span = r.optimal_span;
    rec.proven = r.proven;
    rec.time_s = r.total_time_s;
    rec.vars = r.vars_reported;
    rec.clauses = r.clauses_reported;
    rec.iterations = static_cast<int>(r.iterations.size());
    rec.counts_at_initial = r.counts_at_initial;
    return rec;
}

std::vector<RunRecord> run_matrix(const std::vector<BcpInstance>& instances,
                                  const MatrixOptions& opts) {
    const std::vector<EncodingConfig> configs = all_configs();
    struct Task {
        const BcpInstance* inst;
        const EncodingConfig* config;
    };
    std::vector<Task> tasks;
    for (const BcpInstance& inst : instances)
        for (const EncodingConfig& cfg : configs) tasks.push_back({&inst, &cfg});

    std::vector<RunRecord> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            BackendFactory factory;
            if (!opts.external_cmd.empty())
                factory = [&] { return make_external_solver(opts.external_cmd); };
            OptimalResult r = solve_optimal(*tasks[i].inst, *tasks[i].config, opts.timeout_s, factory);
            results[i] = record_from_result(tasks[i].inst->name, *tasks[i].config, r);
        }
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records, bool with_summary) {
    out << csv_header() << "\n";
    for (const RunRecord& r : records) out << to_csv_row(r) << "\n";
    if (!with_summary) return;

    static const int thresholds[] = {500, 1000, 1500, 2000, 2500};
    out << "# summary: instances solved to proven optimality within each time threshold (s)\n";
    out << "# config";
    for (int t : thresholds) out << "," << t;
    out << "\n";
    for (const EncodingConfig& cfg : all_configs()) {
        int counts[5] = {0, 0, 0, 0, 0};
        bool seen = false;
        for (const RunRecord& r : records) {
            if (r.config.method != cfg.method || r.config.width != cfg.width ||
                r.config.incremental != cfg.incremental || r.config.symmetry != cfg.symmetry)
                continue;
            seen = true;
            for (int i = 0; i < 5; ++i)
                if (r.proven && r.time_s <= thresholds[i]) ++counts[i];
        }
        if (!seen) continue;
        out << "# " << cfg.method_str() << "/" << cfg.width_str() << "/" << cfg.incremental_str()
            << "/" << cfg.symmetry_str();
        for (int c : counts) out << "," << c;
        out << "\n";
    }
}

} // namespace bcp
