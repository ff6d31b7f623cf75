#include "freight/runner.hpp"

#include <stdexcept>

#include "freight/baselines.hpp"
#include "freight/partitioner.hpp"

namespace freight {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Body>
std::chrono::nanoseconds timed(Body&& body) {
    auto start = Clock::now();
    body();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

PartitionResult make_result(std::string name, const ScoreParams& params, uint64_t seed,
                            uint64_t n, uint64_t m, uint64_t pins) {
    PartitionResult r;
    r.algorithm = std::move(name);
    r.params = params;
    r.seed = seed;
    r.num_vertices = n;
    r.num_nets = m;
    r.pins = pins;
    r.assignment.resize(n);
    return r;
}

}  // namespace

std::string stream_algorithm_name(StreamAlgorithm a, Objective objective) {
    switch (a) {
        case StreamAlgorithm::freight:
            return objective == Objective::cutnet ? "freight-cut" : "freight-con";
        case StreamAlgorithm::hashing:
            return "hashing";
        case StreamAlgorithm::minmax_n2p:
            return "minmax-n2p";
    }
    return "?";
}

std::string graph_algorithm_name(GraphAlgorithm a) {
    switch (a) {
        case GraphAlgorithm::fennel:
            return "fennel";
        case GraphAlgorithm::fennel_naive:
            return "fennel-naive";
        case GraphAlgorithm::hashing:
            return "hashing";
    }
    return "?";
}

PartitionResult run_stream_algorithm(StreamAlgorithm a, const VertexStream& stream,
                                     const ScoreParams& params, uint64_t seed) {
    uint32_t n = stream.num_vertices();
    PartitionResult r = make_result(stream_algorithm_name(a, params.objective), params, seed, n,
                                    stream.num_nets, stream.pin_count());
    bool weighted = stream.has_vertex_weights();

    switch (a) {
        case StreamAlgorithm::freight: {
            FreightPartitioner p(params, stream.num_nets, stream.net_weights, weighted);
            r.assign_time = timed([&] {
                for (uint32_t v = 0; v < n; ++v)
                    r.assignment[v] = p.assign(stream.vertex_weight(v), stream.nets_of(v));
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities = p.cardinalities();
            r.balance_violated = p.balance_violated();
            break;
        }
        case StreamAlgorithm::hashing: {
            HashingPartitioner p(params, seed);
            r.assign_time = timed([&] {
                for (uint32_t v = 0; v < n; ++v)
                    r.assignment[v] = p.assign(v, stream.vertex_weight(v));
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.cardinalities().begin(), p.cardinalities().end());
            r.balance_violated = p.balance_violated();
            break;
        }
        case StreamAlgorithm::minmax_n2p: {
            MinMaxPartitioner p(params, stream.num_nets);
            r.assign_time = timed([&] {
                for (uint32_t v = 0; v < n; ++v)
                    r.assignment[v] = p.assign(stream.vertex_weight(v), stream.nets_of(v));
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.cardinalities().begin(), p.cardinalities().end());
            r.balance_violated = p.balance_violated();
            break;
        }
    }
    return r;
}

PartitionResult run_stream_algorithm(StreamAlgorithm a, VertexStreamReader& reader,
                                     const ScoreParams& params, uint64_t seed) {
    uint32_t n = reader.num_vertices();
    PartitionResult r = make_result(stream_algorithm_name(a, params.objective), params, seed, n,
                                    reader.num_nets(), 0);
    VertexRecord rec;

    switch (a) {
        case StreamAlgorithm::freight: {
            FreightPartitioner p(params, reader.num_nets(), {}, reader.has_vertex_weights());
            r.assign_time = timed([&] {
                while (reader.next(rec)) {
                    r.pins += rec.nets.size();
                    r.assignment[rec.vertex] = p.assign(rec.weight, rec.nets);
                }
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities = p.cardinalities();
            r.balance_violated = p.balance_violated();
            break;
        }
        case StreamAlgorithm::hashing: {
            HashingPartitioner p(params, seed);
            r.assign_time = timed([&] {
                while (reader.next(rec)) {
                    r.pins += rec.nets.size();
                    r.assignment[rec.vertex] = p.assign(rec.vertex, rec.weight);
                }
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.cardinalities().begin(), p.cardinalities().end());
            r.balance_violated = p.balance_violated();
            break;
        }
        case StreamAlgorithm::minmax_n2p: {
            MinMaxPartitioner p(params, reader.num_nets());
            r.assign_time = timed([&] {
                while (reader.next(rec)) {
                    r.pins += rec.nets.size();
                    r.assignment[rec.vertex] = p.assign(rec.weight, rec.nets);
                }
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.cardinalities().begin(), p.cardinalities().end());
            r.balance_violated = p.balance_violated();
            break;
        }
    }
    if (reader.records_read() != n)
        throw std::runtime_error("stream ended after " + std::to_string(reader.records_read()) +
                                 " of " + std::to_string(n) + " records");
    return r;
}

PartitionResult run_graph_algorithm(GraphAlgorithm a, const Graph& g, const ScoreParams& params,
                                    uint64_t seed) {
    uint32_t n = g.num_vertices();
    PartitionResult r =
        make_result(graph_algorithm_name(a), params, seed, n, g.num_edges(), g.adjacency.size());

    switch (a) {
        case GraphAlgorithm::fennel: {
            FennelPartitioner p(params, n);
            r.assign_time = timed([&] {
                for (uint32_t v = 0; v < n; ++v) r.assignment[v] = p.assign(v, g.neighbors(v));
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.loads().begin(), p.loads().end());
            r.balance_violated = p.balance_violated();
            break;
        }
        case GraphAlgorithm::fennel_naive: {
            NaiveFennelPartitioner p(params, n);
            r.assign_time = timed([&] {
                for (uint32_t v = 0; v < n; ++v) r.assignment[v] = p.assign(v, g.neighbors(v));
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.loads().begin(), p.loads().end());
            r.balance_violated = p.balance_violated();
            break;
        }
        case GraphAlgorithm::hashing: {
            HashingPartitioner p(params, seed);
            r.assign_time = timed([&] {
                for (uint32_t v = 0; v < n; ++v) r.assignment[v] = p.assign(v, 1);
            });
            r.loads.assign(p.loads().begin(), p.loads().end());
            r.cardinalities.assign(p.cardinalities().begin(), p.cardinalities().end());
            r.balance_violated = p.balance_violated();
            break;
        }
    }
    return r;
}

}  // namespace freight
