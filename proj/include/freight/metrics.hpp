#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "freight/hypergraph_io.hpp"

namespace freight {

struct EvalReport {
    int64_t cutnet = 0;        // total weight of nets spanning >= 2 blocks
    int64_t connectivity = 0;  // sum of (blocks spanned - 1) * weight
    int64_t max_load = 0;
    int64_t capacity = 0;      // balance budget used for within_capacity
    bool within_capacity = true;
    double imbalance = 0.0;    // max_load * k / total_weight - 1
    std::vector<uint64_t> spanned_histogram;  // index s -> nets spanning s blocks
};

// Exact quality of an assignment (0-indexed block per vertex). Throws if the
// assignment size differs from the vertex count or a block id is out of
// range.
EvalReport evaluate_partition(const Hypergraph& h, std::span<const uint32_t> assignment,
                              uint32_t num_blocks, double epsilon);

// Edge cut of a graph partition; fills cutnet and connectivity with the same
// value since every edge is a two-pin net.
EvalReport evaluate_graph_partition(const Graph& g, std::span<const uint32_t> assignment,
                                    uint32_t num_blocks, double epsilon);

}  // namespace freight
