#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>

#include "freight/bench.hpp"
#include "freight/generators.hpp"
#include "freight/hypergraph_io.hpp"
#include "freight/metrics.hpp"
#include "freight/runner.hpp"

namespace {

using namespace freight;

bool is_graph_file(const std::filesystem::path& path) { return path.extension() == ".graph"; }

Hypergraph load_hypergraph(const std::filesystem::path& path) {
    if (path.extension() == ".vstream") return to_hypergraph(read_vstream(path));
    return read_hgr(path);
}

void do_convert(const std::string& from, const std::string& to, const std::string& in,
                const std::string& out) {
    if (from == "hgr" && to == "hgr") {
        write_hgr(out, read_hgr(in));
    } else if (from == "hgr" && to == "vstream") {
        write_vstream(out, to_vertex_stream(read_hgr(in)));
    } else if (from == "vstream" && to == "hgr") {
        write_hgr(out, to_hypergraph(read_vstream(in)));
    } else if (from == "vstream" && to == "vstream") {
        write_vstream(out, read_vstream(in));
    } else if (from == "graph" && to == "graph") {
        write_metis_graph(out, read_metis_graph(in));
    } else {
        throw std::runtime_error("unsupported conversion " + from + " -> " + to);
    }
}

void do_partition(const std::string& input, const std::string& algorithm, uint32_t k,
                  double epsilon, const std::string& objective_name, uint64_t seed,
                  const std::string& output, const std::string& metadata) {
    Objective objective =
        objective_name == "cutnet" ? Objective::cutnet : Objective::connectivity;

    PartitionResult result;
    EvalReport report;
    if (is_graph_file(input)) {
        GraphAlgorithm algo;
        if (algorithm == "fennel")
            algo = GraphAlgorithm::fennel;
        else if (algorithm == "fennel-naive")
            algo = GraphAlgorithm::fennel_naive;
        else if (algorithm == "hashing")
            algo = GraphAlgorithm::hashing;
        else
            throw std::runtime_error("algorithm " + algorithm +
                                     " does not apply to .graph inputs "
                                     "(use fennel, fennel-naive or hashing)");
        Graph g = read_metis_graph(input);
        ScoreParams params = ScoreParams::for_instance(g.num_vertices(), g.num_edges(), k,
                                                       epsilon, objective, g.num_vertices());
        result = run_graph_algorithm(algo, g, params, seed);
        report = evaluate_graph_partition(g, result.assignment, k, epsilon);
    } else {
        StreamAlgorithm algo;
        if (algorithm == "freight")
            algo = StreamAlgorithm::freight;
        else if (algorithm == "hashing")
            algo = StreamAlgorithm::hashing;
        else if (algorithm == "minmax-n2p")
            algo = StreamAlgorithm::minmax_n2p;
        else
            throw std::runtime_error("algorithm " + algorithm +
                                     " does not apply to hypergraph inputs "
                                     "(use freight, hashing or minmax-n2p)");
        Hypergraph h = load_hypergraph(input);
        VertexStream stream = to_vertex_stream(h);
        ScoreParams params =
            ScoreParams::for_instance(stream.num_vertices(), stream.num_nets, k, epsilon,
                                      objective, stream.total_vertex_weight());
        result = run_stream_algorithm(algo, stream, params, seed);
        report = evaluate_partition(h, result.assignment, k, epsilon);
    }

    write_assignment(output, result.assignment);
    if (!metadata.empty()) write_run_metadata(metadata, result);

    std::cout << result.algorithm << " k=" << k << " cutnet=" << report.cutnet
              << " connectivity=" << report.connectivity << " imbalance=" << std::setprecision(6)
              << report.imbalance << " balanced=" << (report.within_capacity ? 1 : 0)
              << " assign_ns=" << result.assign_time.count() << " ns_per_pin="
              << result.ns_per_pin() << '\n';
}

// Column order: instance,partition,k,epsilon,cutnet,connectivity,max_load,capacity,
// balanced,imbalance
void do_evaluate(const std::string& input, const std::string& partition, uint32_t k,
                 double epsilon, bool header) {
    EvalReport report;
    uint64_t n = 0;
    if (is_graph_file(input)) {
        Graph g = read_metis_graph(input);
        n = g.num_vertices();
        std::vector<uint32_t> assignment = read_assignment(partition, n, k);
        report = evaluate_graph_partition(g, assignment, k, epsilon);
    } else {
        Hypergraph h = load_hypergraph(input);
        n = h.num_vertices;
        std::vector<uint32_t> assignment = read_assignment(partition, n, k);
        report = evaluate_partition(h, assignment, k, epsilon);
    }
    if (header)
        std::cout << "instance,partition,k,epsilon,cutnet,connectivity,max_load,capacity,"
                     "balanced,imbalance\n";
    std::cout << input << ',' << partition << ',' << k << ',' << epsilon << ',' << report.cutnet
              << ',' << report.connectivity << ',' << report.max_load << ',' << report.capacity
              << ',' << (report.within_capacity ? 1 : 0) << ',' << std::setprecision(17)
              << report.imbalance << '\n';
}

void do_generate(const std::string& kind, const std::string& output, uint64_t num_vertices,
                 uint64_t num_nets, double exponent, uint64_t min_size, uint64_t max_size,
                 uint64_t community, uint64_t avg_pins, uint64_t rows, uint64_t cols,
                 uint64_t seed) {
    if (kind == "powerlaw-hgr") {
        PowerlawHgrParams p;
        p.num_vertices = num_vertices;
        p.num_nets = num_nets;
        p.exponent = exponent;
        p.min_size = min_size;
        p.max_size = max_size;
        p.community = community;
        write_hgr(output, generate_powerlaw_hgr(p, seed));
    } else if (kind == "random-hgr") {
        RandomHgrParams p;
        p.num_vertices = num_vertices;
        p.num_nets = num_nets;
        p.avg_pins = avg_pins;
        write_hgr(output, generate_random_hgr(p, seed));
    } else if (kind == "grid-graph") {
        write_metis_graph(output, generate_grid_graph(rows, cols));
    } else {
        throw std::runtime_error("unknown instance kind: " + kind);
    }
    std::cout << "wrote " << output << '\n';
}

void do_bench(const std::string& config_path, const std::string& out_path) {
    RunConfig config = parse_run_config(config_path);
    SuiteOutcome outcome = run_suite(config);
    outcome.table.to_csv_file(out_path);
    for (const std::string& err : outcome.errors) std::cerr << "error: " << err << '\n';
    std::cout << "wrote " << outcome.table.rows.size() << " rows to " << out_path << '\n';
    if (!outcome.errors.empty() && outcome.table.rows.empty())
        throw std::runtime_error("every instance failed");
}

void write_csv_or_stdout(const std::string& out_path, const std::function<void(std::ostream&)>& fn) {
    if (out_path.empty() || out_path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    fn(out);
}

void do_profile(const std::string& results_path, const std::string& metric_name,
                const std::string& out_path) {
    ResultTable table = ResultTable::from_csv_file(results_path);
    Metric metric = parse_metric(metric_name);
    std::vector<ProfilePoint> points = performance_profile(table, metric);
    write_csv_or_stdout(out_path, [&](std::ostream& out) { write_profile(out, points, metric); });
}

void do_improvement(const std::string& results_path, const std::string& baseline,
                    const std::string& metric_name, const std::string& out_path) {
    ResultTable table = ResultTable::from_csv_file(results_path);
    Metric metric = parse_metric(metric_name);
    std::vector<ImprovementRow> rows = improvement_over(table, baseline, metric);
    write_csv_or_stdout(out_path,
                        [&](std::ostream& out) { write_improvements(out, rows, metric, baseline); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"freight: one-pass streaming (hyper)graph partitioning toolkit"};
    app.require_subcommand(1);

    auto* convert = app.add_subcommand("convert", "convert between instance file formats");
    std::string cv_from, cv_to, cv_in, cv_out;
    convert->add_option("--from", cv_from, "input format")
        ->required()
        ->check(CLI::IsMember({"hgr", "vstream", "graph"}));
    convert->add_option("--to", cv_to, "output format")
        ->required()
        ->check(CLI::IsMember({"hgr", "vstream", "graph"}));
    convert->add_option("input", cv_in, "input file")->required();
    convert->add_option("output", cv_out, "output file")->required();

    auto* partition = app.add_subcommand("partition", "partition one instance");
    std::string pt_in, pt_algo = "freight", pt_obj = "connectivity", pt_out, pt_meta;
    uint32_t pt_k = 2;
    double pt_eps = 0.03;
    uint64_t pt_seed = 1;
    partition->add_option("input", pt_in, ".hgr, .vstream or .graph instance")->required();
    partition->add_option("--algorithm", pt_algo,
                          "freight, hashing, minmax-n2p; fennel, fennel-naive on .graph");
    partition->add_option("--k", pt_k, "number of blocks")->required()->check(CLI::PositiveNumber);
    partition->add_option("--epsilon", pt_eps, "imbalance tolerance (default 0.03)");
    partition->add_option("--objective", pt_obj, "cutnet or connectivity")
        ->check(CLI::IsMember({"cutnet", "connectivity"}));
    partition->add_option("--seed", pt_seed, "seed for seeded algorithms");
    partition->add_option("--output", pt_out, "assignment file (one 1-indexed block per line)")
        ->required();
    partition->add_option("--metadata", pt_meta, "optional JSON run record");

    auto* evaluate = app.add_subcommand("evaluate", "score an existing assignment");
    std::string ev_in, ev_part;
    uint32_t ev_k = 2;
    double ev_eps = 0.03;
    bool ev_header = false;
    evaluate->add_option("input", ev_in, "instance file")->required();
    evaluate->add_option("assignment", ev_part, "assignment file")->required();
    evaluate->add_option("--k", ev_k, "number of blocks")->required()->check(CLI::PositiveNumber);
    evaluate->add_option("--epsilon", ev_eps, "imbalance tolerance (default 0.03)");
    evaluate->add_flag("--header", ev_header, "print the CSV header line first");

    auto* generate = app.add_subcommand("generate", "write a synthetic instance");
    std::string gn_kind, gn_out;
    uint64_t gn_n = 10000, gn_m = 20000, gn_min = 2, gn_max = 64, gn_community = 32, gn_avg = 4;
    uint64_t gn_rows = 3, gn_cols = 3, gn_seed = 1;
    double gn_exp = 2.0;
    generate->add_option("--kind", gn_kind, "powerlaw-hgr, random-hgr or grid-graph")
        ->required()
        ->check(CLI::IsMember({"powerlaw-hgr", "random-hgr", "grid-graph"}));
    generate->add_option("--output", gn_out, "output file")->required();
    generate->add_option("--vertices", gn_n, "vertex count (hgr kinds)");
    generate->add_option("--nets", gn_m, "net count (hgr kinds)");
    generate->add_option("--exponent", gn_exp, "powerlaw size exponent");
    generate->add_option("--min-size", gn_min, "powerlaw minimum net size");
    generate->add_option("--max-size", gn_max, "powerlaw maximum net size");
    generate->add_option("--community", gn_community, "powerlaw community size");
    generate->add_option("--avg-pins", gn_avg, "random-hgr average pins per net");
    generate->add_option("--rows", gn_rows, "grid rows");
    generate->add_option("--cols", gn_cols, "grid columns");
    generate->add_option("--seed", gn_seed, "generator seed");

    auto* bench = app.add_subcommand("bench", "run a benchmark suite from a key=value config");
    std::string bn_config, bn_out = "results.csv";
    bench->add_option("--config", bn_config, "key=value config file")->required();
    bench->add_option("--out", bn_out, "CSV output path (default results.csv)");

    auto* profile = app.add_subcommand("profile", "performance profile from a results CSV");
    std::string pf_results, pf_metric = "connectivity", pf_out;
    profile->add_option("results", pf_results, "results CSV from bench")->required();
    profile->add_option("--metric", pf_metric, "time, cutnet or connectivity")
        ->check(CLI::IsMember({"time", "cutnet", "connectivity"}));
    profile->add_option("--out", pf_out, "output CSV (default stdout)");

    auto* improvement =
        app.add_subcommand("improvement", "per-k improvement over a baseline algorithm");
    std::string im_results, im_baseline = "hashing", im_metric = "connectivity", im_out;
    improvement->add_option("results", im_results, "results CSV from bench")->required();
    improvement->add_option("--baseline", im_baseline, "baseline algorithm label");
    improvement->add_option("--metric", im_metric, "time, cutnet or connectivity")
        ->check(CLI::IsMember({"time", "cutnet", "connectivity"}));
    improvement->add_option("--out", im_out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (convert->parsed()) do_convert(cv_from, cv_to, cv_in, cv_out);
        if (partition->parsed())
            do_partition(pt_in, pt_algo, pt_k, pt_eps, pt_obj, pt_seed, pt_out, pt_meta);
        if (evaluate->parsed()) do_evaluate(ev_in, ev_part, ev_k, ev_eps, ev_header);
        if (generate->parsed())
            do_generate(gn_kind, gn_out, gn_n, gn_m, gn_exp, gn_min, gn_max, gn_community, gn_avg,
                        gn_rows, gn_cols, gn_seed);
        if (bench->parsed()) do_bench(bn_config, bn_out);
        if (profile->parsed()) do_profile(pf_results, pf_metric, pf_out);
        if (improvement->parsed()) do_improvement(im_results, im_baseline, im_metric, im_out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
