#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "freight/score.hpp"

namespace freight {

// Stateless block map: a splitmix64-style finalizer over (id, seed) reduced
// mod k. The mix constants are the usual splitmix64 ones; changing them
// changes every partition this produces, so they are frozen here and in the
// reference vectors of the test suite.
inline uint32_t hashing_block(uint64_t vertex_id, uint32_t num_blocks, uint64_t seed) {
    uint64_t x = vertex_id + 0x9e3779b97f4a7c15ull * (seed + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<uint32_t>(x % num_blocks);
}

// Streaming wrapper around hashing_block that keeps partitions within the
// balance budget: if the hashed block is full the vertex probes the
// following blocks in id order and takes the first feasible one.
class HashingPartitioner {
  public:
    HashingPartitioner(const ScoreParams& params, uint64_t seed)
        : params_(params), seed_(seed), loads_(params.num_blocks, 0),
          cards_(params.num_blocks, 0) {}

    uint32_t assign(uint64_t vertex_id, int64_t vertex_weight) {
        uint32_t b = hashing_block(vertex_id, params_.num_blocks, seed_);
        for (uint32_t tries = 0; tries < params_.num_blocks; ++tries) {
            uint32_t probe = b + tries < params_.num_blocks ? b + tries
                                                            : b + tries - params_.num_blocks;
            if (loads_[probe] + vertex_weight <= params_.capacity) {
                b = probe;
                break;
            }
            if (tries + 1 == params_.num_blocks) balance_violated_ = true;  // keep hashed block
        }
        loads_[b] += vertex_weight;
        ++cards_[b];
        return b;
    }

    std::span<const int64_t> loads() const { return loads_; }
    std::span<const int64_t> cardinalities() const { return cards_; }
    bool balance_violated() const { return balance_violated_; }

  private:
    ScoreParams params_;
    uint64_t seed_;
    std::vector<int64_t> loads_;
    std::vector<int64_t> cards_;
    bool balance_violated_ = false;
};

// Streaming net-intersection partitioner: each net remembers the set of
// blocks its streamed pins landed in, and a vertex goes to the feasible
// block appearing in the most of its nets' sets. Ties break toward the
// lighter block, then the smaller id. Memory grows with the total size of
// the per-net block sets.
class MinMaxPartitioner {
  public:
    MinMaxPartitioner(const ScoreParams& params, uint32_t num_nets);

    uint32_t assign(int64_t vertex_weight, std::span<const uint32_t> nets);

    std::span<const int64_t> loads() const { return loads_; }
    std::span<const int64_t> cardinalities() const { return cards_; }
    bool balance_violated() const { return balance_violated_; }
    const std::vector<uint32_t>& blocks_of_net(uint32_t e) const { return net_blocks_[e]; }

  private:
    ScoreParams params_;
    std::vector<std::vector<uint32_t>> net_blocks_;
    std::vector<int64_t> loads_;
    std::vector<int64_t> cards_;
    std::set<std::pair<int64_t, uint32_t>> by_load_;
    std::vector<int64_t> count_of_;     // scratch, valid where stamp matches
    std::vector<uint64_t> stamp_of_;
    std::vector<uint32_t> touched_;
    uint64_t stamp_ = 0;
    bool balance_violated_ = false;
};

}  // namespace freight
