#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace freight {

// One-word-per-net record of where each net was last routed. A net starts
// unassigned; the first streamed pin routes it to that vertex's block; any
// later pin landing elsewhere marks it cut. The cut mark is permanent but
// the last block keeps following the most recent pin, which is what the
// connectivity gain needs.
class NetTracker {
  public:
    explicit NetTracker(uint32_t num_nets) : state_(num_nets, kUnassigned) {}

    uint32_t num_nets() const { return static_cast<uint32_t>(state_.size()); }

    bool is_assigned(uint32_t net) const { return state_[net] != kUnassigned; }
    bool is_cut(uint32_t net) const {
        return state_[net] != kUnassigned && (state_[net] & kCutBit) != 0;
    }
    uint32_t last_block(uint32_t net) const {
        assert(is_assigned(net));
        return state_[net] & kBlockMask;
    }

    void observe(uint32_t net, uint32_t block) {
        assert(net < state_.size() && block < kBlockMask);
        uint32_t s = state_[net];
        if (s == kUnassigned) {
            state_[net] = block;
            return;
        }
        uint32_t cut = (s & kCutBit) | (((s & kBlockMask) != block) ? kCutBit : 0u);
        state_[net] = cut | block;
    }

    size_t memory_bytes() const { return state_.capacity() * sizeof(uint32_t); }

  private:
    static constexpr uint32_t kUnassigned = 0xffffffffu;
    static constexpr uint32_t kCutBit = 0x80000000u;
    static constexpr uint32_t kBlockMask = 0x7fffffffu;

    std::vector<uint32_t> state_;
};

}  // namespace freight
