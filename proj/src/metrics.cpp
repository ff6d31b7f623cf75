#include "freight/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "freight/score.hpp"

namespace freight {

namespace {

void check_assignment(std::span<const uint32_t> assignment, uint64_t num_vertices,
                      uint32_t num_blocks) {
    if (assignment.size() != num_vertices)
        throw std::runtime_error("assignment covers " + std::to_string(assignment.size()) +
                                 " vertices, instance has " + std::to_string(num_vertices));
    for (uint64_t v = 0; v < assignment.size(); ++v)
        if (assignment[v] >= num_blocks)
            throw std::runtime_error("vertex " + std::to_string(v + 1) +
                                     " assigned to block " + std::to_string(assignment[v] + 1) +
                                     " of " + std::to_string(num_blocks));
}

void finish_balance(EvalReport& rep, std::span<const int64_t> loads, int64_t total,
                    uint32_t num_blocks, double epsilon) {
    rep.max_load = *std::max_element(loads.begin(), loads.end());
    rep.capacity = balanced_capacity(total, num_blocks, epsilon);
    rep.within_capacity = rep.max_load <= rep.capacity;
    rep.imbalance = total == 0 ? 0.0
                               : static_cast<double>(rep.max_load) * num_blocks / total - 1.0;
}

}  // namespace

EvalReport evaluate_partition(const Hypergraph& h, std::span<const uint32_t> assignment,
                              uint32_t num_blocks, double epsilon) {
    check_assignment(assignment, h.num_vertices, num_blocks);

    EvalReport rep;
    std::vector<uint32_t> stamp(num_blocks, 0xffffffffu);
    for (uint32_t e = 0; e < h.num_nets(); ++e) {
        uint32_t spanned = 0;
        for (uint32_t v : h.net(e)) {
            uint32_t b = assignment[v];
            if (stamp[b] != e) {
                stamp[b] = e;
                ++spanned;
            }
        }
        if (spanned >= rep.spanned_histogram.size()) rep.spanned_histogram.resize(spanned + 1, 0);
        ++rep.spanned_histogram[spanned];
        if (spanned >= 2) {
            rep.cutnet += h.net_weight(e);
            rep.connectivity += (spanned - 1) * h.net_weight(e);
        }
    }

    std::vector<int64_t> loads(num_blocks, 0);
    for (uint32_t v = 0; v < h.num_vertices; ++v) loads[assignment[v]] += h.vertex_weight(v);
    finish_balance(rep, loads, h.total_vertex_weight(), num_blocks, epsilon);
    return rep;
}

EvalReport evaluate_graph_partition(const Graph& g, std::span<const uint32_t> assignment,
                                    uint32_t num_blocks, double epsilon) {
    check_assignment(assignment, g.num_vertices(), num_blocks);

    EvalReport rep;
    int64_t cut = 0;
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
        for (uint32_t u : g.neighbors(v))
            if (u > v && assignment[u] != assignment[v]) ++cut;
    rep.cutnet = cut;
    rep.connectivity = cut;
    rep.spanned_histogram.assign(3, 0);
    rep.spanned_histogram[1] = g.num_edges() - cut;
    rep.spanned_histogram[2] = cut;

    std::vector<int64_t> loads(num_blocks, 0);
    for (uint32_t v = 0; v < g.num_vertices(); ++v) ++loads[assignment[v]];
    finish_balance(rep, loads, g.num_vertices(), num_blocks, epsilon);
    return rep;
}

}  // namespace freight
