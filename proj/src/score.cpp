#include "freight/score.hpp"

namespace freight {

int64_t balanced_capacity(int64_t total_vertex_weight, uint32_t num_blocks, double epsilon) {
    assert(num_blocks > 0 && epsilon >= 0.0);
    return static_cast<int64_t>(
        std::ceil((1.0 + epsilon) * static_cast<double>(total_vertex_weight) / num_blocks));
}

double fennel_alpha(uint64_t num_vertices, uint64_t num_nets, uint32_t num_blocks) {
    if (num_nets == 0) return 0.0;
    assert(num_vertices > 0);
    double n = static_cast<double>(num_vertices);
    return std::sqrt(static_cast<double>(num_blocks)) * static_cast<double>(num_nets) /
           (n * std::sqrt(n));
}

ScoreParams ScoreParams::for_instance(uint64_t num_vertices, uint64_t num_nets,
                                      uint32_t num_blocks, double epsilon, Objective objective,
                                      int64_t total_vertex_weight) {
    ScoreParams p;
    p.num_blocks = num_blocks;
    p.epsilon = epsilon;
    p.gamma = 1.5;
    p.alpha = fennel_alpha(num_vertices, num_nets, num_blocks);
    p.capacity = balanced_capacity(total_vertex_weight, num_blocks, epsilon);
    p.objective = objective;
    return p;
}

}  // namespace freight
