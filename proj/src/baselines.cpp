#include "freight/baselines.hpp"

#include <cassert>

namespace freight {

MinMaxPartitioner::MinMaxPartitioner(const ScoreParams& params, uint32_t num_nets)
    : params_(params),
      net_blocks_(num_nets),
      loads_(params.num_blocks, 0),
      cards_(params.num_blocks, 0),
      count_of_(params.num_blocks, 0),
      stamp_of_(params.num_blocks, 0) {
    assert(params.capacity > 0);
    for (uint32_t b = 0; b < params.num_blocks; ++b) by_load_.emplace(0, b);
}

uint32_t MinMaxPartitioner::assign(int64_t vertex_weight, std::span<const uint32_t> nets) {
    ++stamp_;
    touched_.clear();
    for (uint32_t e : nets)
        for (uint32_t b : net_blocks_[e]) {
            if (stamp_of_[b] != stamp_) {
                stamp_of_[b] = stamp_;
                count_of_[b] = 0;
                touched_.push_back(b);
            }
            ++count_of_[b];
        }

    bool have = false;
    uint32_t best = 0;
    int64_t best_count = 0, best_load = 0;
    for (uint32_t b : touched_) {
        if (loads_[b] + vertex_weight > params_.capacity) continue;
        int64_t count = count_of_[b], load = loads_[b];
        if (!have || count > best_count ||
            (count == best_count && (load < best_load || (load == best_load && b < best)))) {
            have = true;
            best = b;
            best_count = count;
            best_load = load;
        }
    }
    if (!have) {
        // No counted block fits; the lightest block (smallest id among
        // equals) wins with count zero. If even that one is over budget,
        // every block is, and the partition goes out of balance.
        auto [load, b] = *by_load_.begin();
        if (load + vertex_weight > params_.capacity) balance_violated_ = true;
        best = b;
    }

    by_load_.erase({loads_[best], best});
    by_load_.emplace(loads_[best] + vertex_weight, best);
    loads_[best] += vertex_weight;
    ++cards_[best];
    for (uint32_t e : nets) {
        std::vector<uint32_t>& bs = net_blocks_[e];
        bool present = false;
        for (uint32_t b : bs)
            if (b == best) {
                present = true;
                break;
            }
        if (!present) bs.push_back(best);
    }
    return best;
}

}  // namespace freight
