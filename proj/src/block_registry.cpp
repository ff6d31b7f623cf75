#include "freight/block_registry.hpp"

namespace freight {

void BlockRegistry::increment(uint32_t block) {
    assert(block < num_blocks());
    uint32_t steps = 0;

    uint32_t p = position_of_[block];
    uint32_t cur = bucket_at_[p];
    uint32_t q = buckets_[cur].last;
    ++steps;

    // Move `block` to the right end of its equal-cardinality run. Both
    // positions live in the same bucket, so only ids and the inverse
    // permutation swap.
    uint32_t displaced = block_at_[q];
    block_at_[q] = block;
    block_at_[p] = displaced;
    position_of_[block] = q;
    position_of_[displaced] = p;
    ++steps;

    bool run_empties = buckets_[cur].first == buckets_[cur].last;
    int64_t new_cardinality = buckets_[cur].cardinality + 1;
    ++steps;

    // Attach the block to the successor run. Positions end at k-1, so a
    // block at the last position never has a successor to merge with.
    uint32_t succ_pos = q + 1;
    if (succ_pos < num_blocks() &&
        buckets_[bucket_at_[succ_pos]].cardinality == new_cardinality) {
        uint32_t succ = bucket_at_[succ_pos];
        bucket_at_[q] = succ;
        buckets_[succ].first = q;
        steps += 2;
    } else {
        uint32_t fresh = alloc_bucket();
        buckets_[fresh] = Bucket{new_cardinality, q, q};
        bucket_at_[q] = fresh;
        steps += 3;
    }

    // The old run shrinks by one; drop its bucket once the range is empty.
    if (run_empties) {
        free_bucket(cur);
        ++steps;
    } else {
        buckets_[cur].last = q - 1;
        ++steps;
    }

    ++increments_;
    last_op_steps_ = steps;
}

void BlockRegistry::dump(std::ostream& out) const {
    for (uint32_t pos = 0; pos < num_blocks(); ++pos)
        out << pos << ':' << block_at_[pos] << ':' << buckets_[bucket_at_[pos]].cardinality
            << '\n';
}

}  // namespace freight
