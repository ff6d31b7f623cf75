#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "freight/hypergraph_io.hpp"
#include "freight/score.hpp"

namespace freight {

struct PartitionResult {
    std::string algorithm;
    std::vector<uint32_t> assignment;   // 0-indexed blocks
    std::vector<int64_t> loads;
    std::vector<int64_t> cardinalities;
    ScoreParams params;
    uint64_t seed = 0;
    uint64_t num_vertices = 0;
    uint64_t num_nets = 0;
    uint64_t pins = 0;
    bool balance_violated = false;
    std::chrono::nanoseconds assign_time{0};  // the streaming loop only
    std::chrono::nanoseconds read_time{0};    // parse/transpose, when applicable

    double ns_per_pin() const {
        return pins == 0 ? 0.0 : static_cast<double>(assign_time.count()) / pins;
    }
};

enum class StreamAlgorithm { freight, hashing, minmax_n2p };
enum class GraphAlgorithm { fennel, fennel_naive, hashing };

std::string stream_algorithm_name(StreamAlgorithm a, Objective objective);
std::string graph_algorithm_name(GraphAlgorithm a);

// Runs one algorithm over an in-memory stream. Only the per-vertex
// assignment loop is timed, on the monotonic clock.
PartitionResult run_stream_algorithm(StreamAlgorithm a, const VertexStream& stream,
                                     const ScoreParams& params, uint64_t seed);

// Same, but consuming a .vstream file record by record.
PartitionResult run_stream_algorithm(StreamAlgorithm a, VertexStreamReader& reader,
                                     const ScoreParams& params, uint64_t seed);

PartitionResult run_graph_algorithm(GraphAlgorithm a, const Graph& g, const ScoreParams& params,
                                    uint64_t seed);

// Assignment files carry one 1-indexed block id per line, in vertex order.
void write_assignment(const std::filesystem::path& path, std::span<const uint32_t> assignment);
std::vector<uint32_t> read_assignment(const std::filesystem::path& path, uint64_t num_vertices,
                                      uint32_t num_blocks);

// JSON record of the run's parameters, sizes, balance outcome and timings.
void write_run_metadata(const std::filesystem::path& path, const PartitionResult& result);

}  // namespace freight
