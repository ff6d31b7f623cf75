#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace freight {

// Benchmark plan parsed from a key=value config file. Keys: instance /
// instances (paths, repeatable), algorithms (labels: freight-con,
// freight-cut, hashing, minmax-n2p, fennel, fennel-naive), ks, epsilon,
// repetitions, seed. '#' starts a comment.
struct RunConfig {
    std::vector<std::string> instances;
    std::vector<std::string> algorithms{"freight-con", "freight-cut", "hashing", "minmax-n2p"};
    std::vector<uint32_t> ks{512, 1024, 1536, 2048, 2560};
    double epsilon = 0.03;
    uint32_t repetitions = 5;
    uint64_t seed = 1;
};

RunConfig parse_run_config(const std::filesystem::path& path);

struct ResultRow {
    std::string instance;
    std::string algorithm;
    uint32_t k = 0;
    uint32_t rep = 0;
    uint64_t seed = 0;
    uint64_t vertices = 0;
    uint64_t nets = 0;
    uint64_t pins = 0;
    int64_t cutnet = 0;
    int64_t connectivity = 0;
    double imbalance = 0.0;
    int64_t max_load = 0;
    int64_t capacity = 0;
    bool balanced = true;
    uint64_t assign_ns = 0;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    static const char* csv_header();
    void to_csv(std::ostream& out) const;
    void to_csv_file(const std::filesystem::path& path) const;
    static ResultTable from_csv_file(const std::filesystem::path& path);
};

struct SuiteOutcome {
    ResultTable table;
    std::vector<std::string> errors;  // per-instance failures; the suite continues
};

// Runs every (instance, algorithm, k, repetition) cell sequentially so
// timing cells never share the machine. Repetition r uses seed config.seed
// + r. Instances are parsed once and streamed from memory inside the timed
// loop.
SuiteOutcome run_suite(const RunConfig& config);

double arithmetic_mean(std::span<const double> xs);
double geometric_mean(std::span<const double> xs);
// Geometric mean with the zero guard: aggregates x+1 and subtracts 1 after,
// so all-positive data is barely affected and zeros stay finite.
double guarded_geometric_mean(std::span<const double> xs);

enum class Metric { time, cutnet, connectivity };
Metric parse_metric(const std::string& name);

struct ImprovementRow {
    std::string algorithm;
    uint32_t k = 0;
    double improvement_pct = 0.0;  // (baseline_agg / algorithm_agg - 1) * 100
};

// Cross-instance improvement of every algorithm over `baseline`, per k.
// Repetitions average arithmetically within an instance; instances
// aggregate with the guarded geometric mean; the percentage compares the
// two aggregates.
std::vector<ImprovementRow> improvement_over(const ResultTable& table,
                                             const std::string& baseline, Metric metric);

struct ProfilePoint {
    std::string algorithm;
    double tau = 1.0;
    double fraction = 0.0;  // share of cells within factor tau of the best
};

// Performance profile over per-(instance, k) cells. Each cell's value is
// the arithmetic mean over repetitions; ties for best count every tied
// algorithm as best. Objective ratios use the +1 guard so zero-cost cells
// stay finite; time ratios are raw.
std::vector<ProfilePoint> performance_profile(const ResultTable& table, Metric metric);

void write_improvements(std::ostream& out, std::span<const ImprovementRow> rows, Metric metric,
                        const std::string& baseline);
void write_profile(std::ostream& out, std::span<const ProfilePoint> points, Metric metric);

}  // namespace freight
