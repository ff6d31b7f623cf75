#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace freight {

enum class Objective { cutnet, connectivity };

// Parameters of the streaming score: a block's attractiveness for vertex v
// is gain(v, block) - c(v) * alpha * gamma * load(block)^(gamma - 1), and a
// block is feasible while load + c(v) stays within `capacity`.
struct ScoreParams {
    uint32_t num_blocks = 2;
    double epsilon = 0.03;
    double gamma = 1.5;
    double alpha = 0.0;
    int64_t capacity = 0;
    Objective objective = Objective::connectivity;

    static ScoreParams for_instance(uint64_t num_vertices, uint64_t num_nets, uint32_t num_blocks,
                                    double epsilon, Objective objective,
                                    int64_t total_vertex_weight);
};

// Per-block weight budget ceil((1 + epsilon) * total / k).
int64_t balanced_capacity(int64_t total_vertex_weight, uint32_t num_blocks, double epsilon);

// Default penalty coefficient sqrt(k) * m / n^(3/2); zero when m is zero.
double fennel_alpha(uint64_t num_vertices, uint64_t num_nets, uint32_t num_blocks);

// -c(v) * alpha * gamma * load^(gamma - 1). Written with the same pow()
// expression the partitioners evaluate, so reference scorers that call this
// reproduce their arithmetic bit for bit.
inline double load_penalty(int64_t vertex_weight, int64_t block_load, double alpha, double gamma) {
    return -static_cast<double>(vertex_weight) * alpha * gamma *
           std::pow(static_cast<double>(block_load), gamma - 1.0);
}

// Precomputed unit-weight penalties for every cardinality a feasible block
// can reach. Both the one-pass partitioners and the full-scan reference
// scorers read scores out of this table, which keeps their floating point
// results identical per candidate.
class PenaltyTable {
  public:
    PenaltyTable() = default;
    PenaltyTable(int64_t capacity, double alpha, double gamma) : table_(capacity + 1) {
        for (int64_t c = 0; c <= capacity; ++c) table_[c] = load_penalty(1, c, alpha, gamma);
    }
    double operator[](int64_t cardinality) const {
        assert(cardinality >= 0 && cardinality < static_cast<int64_t>(table_.size()));
        return table_[cardinality];
    }

  private:
    std::vector<double> table_;
};

// Candidate ranking: higher score first, then smaller size (cardinality for
// unit streams, load for weighted ones), then smaller rank. The rank is the
// block's current registry position in unit mode and the block id in
// weighted mode; either way ranks are distinct, so the order is total.
struct Candidate {
    double score = 0.0;
    int64_t size = 0;
    uint32_t rank = 0;
    uint32_t block = 0;
};

inline bool better(const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.size != b.size) return a.size < b.size;
    return a.rank < b.rank;
}

}  // namespace freight
