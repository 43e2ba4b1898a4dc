#ifndef MAXKCUT_BENCH_HPP
#define MAXKCUT_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxkcut/graph.hpp"
#include "maxkcut/relaxations.hpp"

namespace maxkcut {

enum class BenchMethod { Exact, Bqo, VmiloRelax, EmiloRelax, RemiloRelax, MisdoExport };

std::string bench_method_name(BenchMethod m);
std::optional<BenchMethod> bench_method_from_name(const std::string& name);

struct GeneratorSpec {
    InstanceKind kind;
    InstanceParams params;
    std::uint64_t seed = 0; // 0: derived from the config seed and position
};

struct InstanceSpec {
    std::string name;
    std::string path;                 // file instance when non-empty
    std::optional<GeneratorSpec> gen; // generated instance otherwise
};

struct BenchConfig {
    std::vector<InstanceSpec> instances;
    std::vector<int> ks{2};
    std::vector<BenchMethod> methods{BenchMethod::Exact, BenchMethod::EmiloRelax,
                                     BenchMethod::VmiloRelax};
    double time_cap_seconds = 60.0;
    std::uint64_t seed = 1;
    std::string csv_out;
    std::string json_out;
    std::string export_dir = ".";
    int workers = 0; // 0: hardware concurrency
    bool lazy_emilo = false;
};

BenchConfig parse_bench_config(const std::string& json_text);

/// Scaled geometric means per batch of instances; batches share (n, density
/// bucket, k) and one extra "all" batch pools everything with the same k.
struct BenchSummaryRow {
    std::string batch;
    int k;
    std::string method;
    double geomean;
    int count;
};

struct BenchResult {
    std::vector<BoundReport> reports;
    std::vector<BenchSummaryRow> summary;
};

/// Runs every (instance, k, method) job under the worker cap, scales each
/// instance's bounds by the best one, and aggregates geometric means per
/// batch. Per-instance failures are recorded as error rows; the run
/// continues. Deterministic for a fixed config apart from the seconds
/// column.
BenchResult bench_run(const BenchConfig& cfg);

std::string bench_summary_to_json(const std::vector<BenchSummaryRow>& summary);

} // namespace maxkcut

#endif
