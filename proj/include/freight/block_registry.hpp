#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <vector>

namespace freight {

// Keeps the k blocks sorted by vertex cardinality under increment-by-one
// updates, in constant time per update and O(k) memory.
//
// Layout: `block_at_` lists the block ids in non-decreasing cardinality
// order, `position_of_` is its inverse permutation, and each maximal run of
// equal-cardinality positions is covered by one bucket holding the shared
// cardinality and the run's [first, last] position range. Incrementing a
// block swaps it with the last entry of its bucket's run, shrinks that run
// by one, and attaches the block to the following run (extending it if its
// cardinality already matches, otherwise starting a fresh single-position
// run). Emptied buckets go back to a free list.
//
// Ordering of equal-cardinality blocks is whatever the swap history
// produces; the initial order is block id order. Callers that need a
// deterministic preference among minimum-cardinality blocks can rank
// candidates by position_of().
class BlockRegistry {
  public:
    explicit BlockRegistry(uint32_t num_blocks)
        : block_at_(num_blocks), bucket_at_(num_blocks, 0), position_of_(num_blocks) {
        assert(num_blocks > 0);
        for (uint32_t i = 0; i < num_blocks; ++i) {
            block_at_[i] = i;
            position_of_[i] = i;
        }
        buckets_.reserve(std::min<size_t>(num_blocks, 1u << 20) + 2);
        free_buckets_.reserve(buckets_.capacity());
        buckets_.push_back(Bucket{0, 0, num_blocks - 1});
        live_buckets_ = 1;
    }

    uint32_t num_blocks() const { return static_cast<uint32_t>(block_at_.size()); }

    // Block with the smallest cardinality (leftmost position).
    uint32_t min_cardinality_block() const { return block_at_[0]; }
    int64_t min_cardinality() const { return buckets_[bucket_at_[0]].cardinality; }

    int64_t cardinality_of(uint32_t block) const {
        assert(block < num_blocks());
        return buckets_[bucket_at_[position_of_[block]]].cardinality;
    }
    uint32_t position_of(uint32_t block) const {
        assert(block < num_blocks());
        return position_of_[block];
    }
    uint32_t block_at(uint32_t position) const { return block_at_[position]; }

    void increment(uint32_t block);

    uint64_t increments() const { return increments_; }
    // Elementary steps executed by the most recent increment; bounded by a
    // constant independent of k and history (the operation is loop-free).
    uint32_t last_op_steps() const { return last_op_steps_; }
    size_t live_bucket_count() const { return live_buckets_; }
    size_t memory_bytes() const {
        return block_at_.capacity() * sizeof(uint32_t) + bucket_at_.capacity() * sizeof(uint32_t) +
               position_of_.capacity() * sizeof(uint32_t) + buckets_.capacity() * sizeof(Bucket) +
               free_buckets_.capacity() * sizeof(uint32_t);
    }

    // Visits the live buckets in ascending position order as
    // fn(cardinality, first_position, last_position).
    template <typename Fn>
    void for_each_bucket(Fn&& fn) const {
        uint32_t pos = 0;
        while (pos < num_blocks()) {
            const Bucket& b = buckets_[bucket_at_[pos]];
            fn(b.cardinality, b.first, b.last);
            pos = b.last + 1;
        }
    }

    // One "position:block:cardinality" line per position, 0-indexed.
    void dump(std::ostream& out) const;

  private:
    struct Bucket {
        int64_t cardinality;
        uint32_t first;
        uint32_t last;
    };

    uint32_t alloc_bucket() {
        ++live_buckets_;
        if (!free_buckets_.empty()) {
            uint32_t idx = free_buckets_.back();
            free_buckets_.pop_back();
            return idx;
        }
        buckets_.emplace_back();
        return static_cast<uint32_t>(buckets_.size() - 1);
    }
    void free_bucket(uint32_t idx) {
        --live_buckets_;
        free_buckets_.push_back(idx);
    }

    std::vector<uint32_t> block_at_;
    std::vector<uint32_t> bucket_at_;
    std::vector<uint32_t> position_of_;
    std::vector<Bucket> buckets_;
    std::vector<uint32_t> free_buckets_;
    size_t live_buckets_ = 0;
    uint64_t increments_ = 0;
    uint32_t last_op_steps_ = 0;
};

}  // namespace freight
