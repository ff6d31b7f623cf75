#include "freight/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "freight/metrics.hpp"
#include "freight/runner.hpp"

namespace freight {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(part);
    return parts;
}

const std::set<std::string> kStreamLabels = {"freight-con", "freight-cut", "hashing",
                                             "minmax-n2p"};
const std::set<std::string> kGraphLabels = {"fennel", "fennel-naive", "hashing"};

void validate_label(const std::string& label) {
    if (!kStreamLabels.count(label) && !kGraphLabels.count(label))
        throw std::runtime_error("unknown algorithm label: " + label);
}

double metric_value(const ResultRow& row, Metric metric) {
    switch (metric) {
        case Metric::time:
            return static_cast<double>(row.assign_ns);
        case Metric::cutnet:
            return static_cast<double>(row.cutnet);
        case Metric::connectivity:
            return static_cast<double>(row.connectivity);
    }
    return 0.0;
}

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::time:
            return "time";
        case Metric::cutnet:
            return "cutnet";
        case Metric::connectivity:
            return "connectivity";
    }
    return "?";
}

// (algorithm, k, instance) -> arithmetic mean of the metric over reps.
using MeanMap = std::map<std::string, std::map<uint32_t, std::map<std::string, double>>>;

MeanMap collect_means(const ResultTable& table, Metric metric) {
    std::map<std::string, std::map<uint32_t, std::map<std::string, std::vector<double>>>> raw;
    for (const ResultRow& row : table.rows)
        raw[row.algorithm][row.k][row.instance].push_back(metric_value(row, metric));
    MeanMap means;
    for (auto& [algo, by_k] : raw)
        for (auto& [k, by_instance] : by_k)
            for (auto& [instance, values] : by_instance)
                means[algo][k][instance] = arithmetic_mean(values);
    return means;
}

void run_hypergraph_instance(const RunConfig& config, const std::string& path,
                             ResultTable& table) {
    Hypergraph h;
    VertexStream stream;
    if (std::filesystem::path(path).extension() == ".vstream") {
        stream = read_vstream(path);
        h = to_hypergraph(stream);
    } else {
        h = read_hgr(path);
        stream = to_vertex_stream(h);
    }

    for (const std::string& label : config.algorithms) {
        if (!kStreamLabels.count(label)) continue;  // graph-only label
        StreamAlgorithm algo = StreamAlgorithm::freight;
        Objective objective = Objective::connectivity;
        if (label == "freight-cut") objective = Objective::cutnet;
        if (label == "hashing") algo = StreamAlgorithm::hashing;
        if (label == "minmax-n2p") algo = StreamAlgorithm::minmax_n2p;

        for (uint32_t k : config.ks) {
            ScoreParams params =
                ScoreParams::for_instance(stream.num_vertices(), stream.num_nets, k,
                                          config.epsilon, objective, stream.total_vertex_weight());
            for (uint32_t rep = 0; rep < config.repetitions; ++rep) {
                uint64_t seed = config.seed + rep;
                PartitionResult r = run_stream_algorithm(algo, stream, params, seed);
                EvalReport ev = evaluate_partition(h, r.assignment, k, config.epsilon);
                table.rows.push_back(ResultRow{path, label, k, rep, seed, r.num_vertices,
                                               r.num_nets, r.pins, ev.cutnet, ev.connectivity,
                                               ev.imbalance, ev.max_load, ev.capacity,
                                               ev.within_capacity,
                                               static_cast<uint64_t>(r.assign_time.count())});
            }
        }
    }
}

void run_graph_instance(const RunConfig& config, const std::string& path, ResultTable& table) {
    Graph g = read_metis_graph(path);

    for (const std::string& label : config.algorithms) {
        if (!kGraphLabels.count(label)) continue;  // hypergraph-only label
        GraphAlgorithm algo = GraphAlgorithm::fennel;
        if (label == "fennel-naive") algo = GraphAlgorithm::fennel_naive;
        if (label == "hashing") algo = GraphAlgorithm::hashing;

        for (uint32_t k : config.ks) {
            ScoreParams params = ScoreParams::for_instance(
                g.num_vertices(), g.num_edges(), k, config.epsilon, Objective::connectivity,
                g.num_vertices());
            for (uint32_t rep = 0; rep < config.repetitions; ++rep) {
                uint64_t seed = config.seed + rep;
                PartitionResult r = run_graph_algorithm(algo, g, params, seed);
                EvalReport ev = evaluate_graph_partition(g, r.assignment, k, config.epsilon);
                table.rows.push_back(ResultRow{path, label, k, rep, seed, r.num_vertices,
                                               r.num_nets, r.pins, ev.cutnet, ev.connectivity,
                                               ev.imbalance, ev.max_load, ev.capacity,
                                               ev.within_capacity,
                                               static_cast<uint64_t>(r.assign_time.count())});
            }
        }
    }
}

}  // namespace

RunConfig parse_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    RunConfig config;
    bool algorithms_set = false;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "instance") {
            config.instances.push_back(value);
        } else if (key == "instances") {
            for (const std::string& part : split(value, ','))
                if (!trim(part).empty()) config.instances.push_back(trim(part));
        } else if (key == "algorithms") {
            if (!algorithms_set) {
                config.algorithms.clear();
                algorithms_set = true;
            }
            for (const std::string& part : split(value, ',')) {
                std::string label = trim(part);
                if (label.empty()) continue;
                validate_label(label);
                config.algorithms.push_back(label);
            }
        } else if (key == "ks") {
            config.ks.clear();
            for (const std::string& part : split(value, ','))
                if (!trim(part).empty()) config.ks.push_back(std::stoul(trim(part)));
        } else if (key == "epsilon") {
            config.epsilon = std::stod(value);
        } else if (key == "repetitions") {
            config.repetitions = std::stoul(value);
        } else if (key == "seed") {
            config.seed = std::stoull(value);
        } else {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": unknown key " + key);
        }
    }
    if (config.instances.empty()) throw std::runtime_error(path.string() + ": no instances");
    if (config.repetitions == 0) throw std::runtime_error(path.string() + ": repetitions is 0");
    if (config.ks.empty()) throw std::runtime_error(path.string() + ": empty ks");
    return config;
}

const char* ResultTable::csv_header() {
    return "instance,algorithm,k,rep,seed,vertices,nets,pins,cutnet,connectivity,imbalance,"
           "max_load,capacity,balanced,assign_ns,ns_per_pin";
}

void ResultTable::to_csv(std::ostream& out) const {
    out << csv_header() << '\n';
    for (const ResultRow& r : rows) {
        double ns_per_pin = r.pins == 0 ? 0.0 : static_cast<double>(r.assign_ns) / r.pins;
        out << r.instance << ',' << r.algorithm << ',' << r.k << ',' << r.rep << ',' << r.seed
            << ',' << r.vertices << ',' << r.nets << ',' << r.pins << ',' << r.cutnet << ','
            << r.connectivity << ',' << std::setprecision(17) << r.imbalance << ',' << r.max_load
            << ',' << r.capacity << ',' << (r.balanced ? 1 : 0) << ',' << r.assign_ns << ','
            << std::setprecision(17) << ns_per_pin << '\n';
    }
}

void ResultTable::to_csv_file(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    to_csv(out);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ResultTable ResultTable::from_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    ResultTable table;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("instance,", 0) == 0) continue;  // header
        std::vector<std::string> f = split(line, ',');
        if (f.size() < 15)
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": expected 16 columns");
        ResultRow r;
        r.instance = f[0];
        r.algorithm = f[1];
        r.k = std::stoul(f[2]);
        r.rep = std::stoul(f[3]);
        r.seed = std::stoull(f[4]);
        r.vertices = std::stoull(f[5]);
        r.nets = std::stoull(f[6]);
        r.pins = std::stoull(f[7]);
        r.cutnet = std::stoll(f[8]);
        r.connectivity = std::stoll(f[9]);
        r.imbalance = std::stod(f[10]);
        r.max_load = std::stoll(f[11]);
        r.capacity = std::stoll(f[12]);
        r.balanced = f[13] == "1";
        r.assign_ns = std::stoull(f[14]);
        table.rows.push_back(std::move(r));
    }
    return table;
}

SuiteOutcome run_suite(const RunConfig& config) {
    SuiteOutcome outcome;
    for (const std::string& path : config.instances) {
        try {
            if (std::filesystem::path(path).extension() == ".graph")
                run_graph_instance(config, path, outcome.table);
            else
                run_hypergraph_instance(config, path, outcome.table);
        } catch (const std::exception& ex) {
            outcome.errors.push_back(path + ": " + ex.what());
        }
    }
    return outcome;
}

double arithmetic_mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double geometric_mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double log_sum = 0.0;
    for (double x : xs) log_sum += std::log(x);
    return std::exp(log_sum / static_cast<double>(xs.size()));
}

double guarded_geometric_mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double log_sum = 0.0;
    for (double x : xs) log_sum += std::log(x + 1.0);
    return std::exp(log_sum / static_cast<double>(xs.size())) - 1.0;
}

Metric parse_metric(const std::string& name) {
    if (name == "time") return Metric::time;
    if (name == "cutnet") return Metric::cutnet;
    if (name == "connectivity") return Metric::connectivity;
    throw std::runtime_error("unknown metric: " + name);
}

std::vector<ImprovementRow> improvement_over(const ResultTable& table,
                                             const std::string& baseline, Metric metric) {
    MeanMap means = collect_means(table, metric);
    auto base_it = means.find(baseline);
    if (base_it == means.end())
        throw std::runtime_error("baseline " + baseline + " absent from results");

    std::vector<ImprovementRow> out;
    for (const auto& [algo, by_k] : means) {
        if (algo == baseline) continue;
        for (const auto& [k, by_instance] : by_k) {
            auto base_k = base_it->second.find(k);
            if (base_k == base_it->second.end()) continue;
            std::vector<double> algo_means, base_means;
            for (const auto& [instance, mean] : by_instance) {
                auto bm = base_k->second.find(instance);
                if (bm == base_k->second.end()) continue;
                algo_means.push_back(mean);
                base_means.push_back(bm->second);
            }
            if (algo_means.empty()) continue;
            double agg_algo = guarded_geometric_mean(algo_means);
            double agg_base = guarded_geometric_mean(base_means);
            // plain ratio once aggregated; re-apply the +1 guard only to avoid 0/0
            double pct = agg_algo > 0.0
                             ? (agg_base / agg_algo - 1.0) * 100.0
                             : ((agg_base + 1.0) / (agg_algo + 1.0) - 1.0) * 100.0;
            out.push_back(ImprovementRow{algo, k, pct});
        }
    }
    return out;
}

std::vector<ProfilePoint> performance_profile(const ResultTable& table, Metric metric) {
    MeanMap means = collect_means(table, metric);

    // cell = (instance, k); value per algorithm, then best per cell
    std::map<std::pair<std::string, uint32_t>, std::map<std::string, double>> cells;
    for (const auto& [algo, by_k] : means)
        for (const auto& [k, by_instance] : by_k)
            for (const auto& [instance, mean] : by_instance)
                cells[{instance, k}][algo] = mean;

    std::map<std::string, std::vector<double>> ratios;
    for (const auto& [cell, by_algo] : cells) {
        double best = by_algo.begin()->second;
        for (const auto& [algo, v] : by_algo) best = std::min(best, v);
        for (const auto& [algo, v] : by_algo) {
            double ratio;
            if (metric == Metric::time && best > 0.0)
                ratio = v / best;
            else
                ratio = (v + 1.0) / (best + 1.0);  // +1 guard keeps zero cells finite
            ratios[algo].push_back(ratio);
        }
    }

    std::vector<ProfilePoint> points;
    for (auto& [algo, rs] : ratios) {
        std::sort(rs.begin(), rs.end());
        double n = static_cast<double>(rs.size());
        size_t at_one = std::upper_bound(rs.begin(), rs.end(), 1.0) - rs.begin();
        points.push_back(ProfilePoint{algo, 1.0, static_cast<double>(at_one) / n});
        for (size_t i = 0; i < rs.size(); ++i) {
            if (rs[i] <= 1.0) continue;
            if (i + 1 < rs.size() && rs[i + 1] == rs[i]) continue;  // last of equal run
            points.push_back(ProfilePoint{algo, rs[i], static_cast<double>(i + 1) / n});
        }
    }
    return points;
}

void write_improvements(std::ostream& out, std::span<const ImprovementRow> rows, Metric metric,
                        const std::string& baseline) {
    out << "# improvement of each algorithm over " << baseline << " on " << metric_name(metric)
        << ": (baseline/algorithm - 1) * 100\n";
    out << "# aggregation: arithmetic mean over repetitions, then geometric mean across\n";
    out << "# instances computed on value+1 with the offset removed afterwards (zero guard)\n";
    out << "algorithm,k,improvement_pct\n";
    for (const ImprovementRow& r : rows)
        out << r.algorithm << ',' << r.k << ',' << std::setprecision(17) << r.improvement_pct
            << '\n';
}

void write_profile(std::ostream& out, std::span<const ProfilePoint> points, Metric metric) {
    out << "# performance profile on " << metric_name(metric)
        << ": fraction of (instance,k) cells within factor tau of the best algorithm\n";
    out << "# ties count every tied algorithm as best; objective ratios use the +1 zero guard\n";
    out << "algorithm,tau,fraction\n";
    for (const ProfilePoint& p : points)
        out << p.algorithm << ',' << std::setprecision(17) << p.tau << ',' << p.fraction << '\n';
}

}  // namespace freight
