#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "freight/block_registry.hpp"
#include "freight/net_tracker.hpp"
#include "freight/score.hpp"

namespace freight {

inline constexpr uint32_t kNoBlock = 0xffffffffu;

struct GainEntry {
    uint32_t block;
    int64_t gain;
};

// One-pass streaming hypergraph partitioner. Per vertex it scores only the
// blocks its tracked nets point at (the explicit candidates) and lets the
// registry supply the minimum-size block as the representative of all other
// blocks: a zero-gain block can never beat that representative, so the
// argmax over the explicit candidates plus the representative equals the
// argmax over all k blocks. Memory stays O(num_nets + num_blocks) and the
// per-vertex work is proportional to the vertex's degree.
class FreightPartitioner {
  public:
    // `net_weights` may be empty (unit weights); when present it must stay
    // alive for the partitioner's lifetime. Pass weighted_vertices = true
    // when vertex weights other than 1 will be streamed; block ranking then
    // runs on loads instead of registry cardinalities.
    FreightPartitioner(const ScoreParams& params, uint32_t num_nets,
                       std::span<const int64_t> net_weights = {}, bool weighted_vertices = false);

    uint32_t assign(int64_t vertex_weight, std::span<const uint32_t> nets) {
        std::span<const GainEntry> cands = gather_gains(nets, vertex_weight);
        uint32_t block = select_block(cands, vertex_weight);
        commit(block, vertex_weight, nets);
        return block;
    }

    // Feasible blocks with positive gain among the vertex's tracked nets.
    // Under the cut-net objective, nets already cut contribute nothing;
    // under connectivity every assigned net credits its latest block.
    std::span<const GainEntry> gather_gains(std::span<const uint32_t> nets, int64_t vertex_weight);

    // Argmax of score over all feasible blocks, evaluated as the better of
    // the explicit candidates and the minimum-size representative. Ranking
    // follows better(): score, then size, then registry position (block id
    // in weighted mode).
    uint32_t select_block(std::span<const GainEntry> candidates, int64_t vertex_weight) const;

    void commit(uint32_t block, int64_t vertex_weight, std::span<const uint32_t> nets);

    const ScoreParams& params() const { return params_; }
    const BlockRegistry& registry() const { return registry_; }
    const NetTracker& tracker() const { return tracker_; }
    const PenaltyTable& penalties() const { return penalties_; }
    std::span<const int64_t> loads() const { return loads_; }
    std::vector<int64_t> cardinalities() const;
    bool balance_violated() const { return balance_violated_; }
    uint64_t candidates_scored() const { return candidates_scored_; }
    size_t memory_bytes() const;

  private:
    int64_t net_weight(uint32_t e) const { return net_weights_.empty() ? 1 : net_weights_[e]; }

    ScoreParams params_;
    std::span<const int64_t> net_weights_;
    bool weighted_vertices_;
    PenaltyTable penalties_;
    BlockRegistry registry_;
    NetTracker tracker_;
    std::vector<int64_t> loads_;
    std::set<std::pair<int64_t, uint32_t>> by_load_;  // weighted mode only
    std::vector<int64_t> gain_of_;                    // dense scratch, reset via touched_
    std::vector<uint32_t> touched_;
    std::vector<GainEntry> candidates_;
    bool balance_violated_ = false;
    uint64_t candidates_scored_ = 0;
};

// One-pass Fennel for graph streams (unit weights). Same selection rule as
// the hypergraph partitioner; gains come from already-assigned neighbors,
// which costs O(n + k) memory and O(degree) time per vertex.
class FennelPartitioner {
  public:
    FennelPartitioner(const ScoreParams& params, uint32_t num_vertices);

    uint32_t assign(uint32_t vertex, std::span<const uint32_t> neighbors);

    const BlockRegistry& registry() const { return registry_; }
    std::span<const uint32_t> assignment() const { return assignment_; }
    std::span<const int64_t> loads() const { return loads_; }
    bool balance_violated() const { return balance_violated_; }

  private:
    ScoreParams params_;
    PenaltyTable penalties_;
    BlockRegistry registry_;
    std::vector<int64_t> loads_;
    std::vector<uint32_t> assignment_;
    std::vector<int64_t> gain_of_;
    std::vector<uint32_t> touched_;
    std::vector<GainEntry> candidates_;
    bool balance_violated_ = false;
};

// Reference Fennel that scores every block for every vertex, O(m + n*k)
// total. Shares the penalty table and ranking with FennelPartitioner, so
// both produce identical assignments; only the selection cost differs.
class NaiveFennelPartitioner {
  public:
    NaiveFennelPartitioner(const ScoreParams& params, uint32_t num_vertices);

    uint32_t assign(uint32_t vertex, std::span<const uint32_t> neighbors);

    std::span<const uint32_t> assignment() const { return assignment_; }
    std::span<const int64_t> loads() const { return loads_; }
    bool balance_violated() const { return balance_violated_; }

  private:
    ScoreParams params_;
    PenaltyTable penalties_;
    BlockRegistry registry_;
    std::vector<int64_t> loads_;
    std::vector<uint32_t> assignment_;
    std::vector<int64_t> gain_of_;
    std::vector<uint32_t> touched_;
    bool balance_violated_ = false;
};

}  // namespace freight
