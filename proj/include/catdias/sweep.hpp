#pragma once

#include "catdias/field.hpp"
#include "catdias/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace catdias {

inline constexpr const char* tool_version = "0.1.0";

enum class Suite { cooperad, anticyclic, k0, oracle };

std::string to_string(Suite suite);
// Accepts the four suite names and "all". Throws ParameterError otherwise.
std::vector<Suite> parse_suites(const std::string& name);

struct SweepConfig {
    std::vector<Suite> suites{Suite::cooperad, Suite::anticyclic, Suite::k0, Suite::oracle};
    int max_m = 4;
    int max_n = 4;
    int max_p = 4;
    // Oracle instances use arities up to this bound.
    int oracle_max = 3;
    std::vector<FieldConfig> fields{FieldConfig{}, FieldConfig{FieldConfig::Kind::rational}};
    int workers = 1;
    std::string output_dir = ".";
};

// Throws ParameterError on a non-positive bound, oracle_max above a sweep
// bound, a non-prime modulus or an empty field list.
void validate(const SweepConfig& config);

struct ReportFile {
    std::string version = tool_version;
    SweepConfig config;
    std::vector<Report> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
    double elapsed_ms = 0.0;
};

// One unit of work; its reports land in the file in task order.
struct SweepTask {
    std::string label;
    std::function<std::vector<Report>()> run;
};

std::vector<SweepTask> plan_sweep(const SweepConfig& config);

// Runs every task on `config.workers` threads. A task that throws yields a
// failed report carrying the error message.
ReportFile run_sweep(const SweepConfig& config);

// Line-delimited JSON: a header with the version and the config echo, one
// record per report, a summary trailer with the counts and, when
// `with_timing`, a final timing record. Worker count and output directory are
// not echoed, so the content depends only on the sweep itself.
std::string write_report_file(const ReportFile& file, bool with_timing = true);

} // namespace catdias
