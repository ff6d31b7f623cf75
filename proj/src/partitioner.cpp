#include "freight/partitioner.hpp"

#include <cassert>

namespace freight {

FreightPartitioner::FreightPartitioner(const ScoreParams& params, uint32_t num_nets,
                                       std::span<const int64_t> net_weights,
                                       bool weighted_vertices)
    : params_(params),
      net_weights_(net_weights),
      weighted_vertices_(weighted_vertices),
      penalties_(weighted_vertices ? PenaltyTable()
                                   : PenaltyTable(params.capacity, params.alpha, params.gamma)),
      registry_(params.num_blocks),
      tracker_(num_nets),
      loads_(params.num_blocks, 0),
      gain_of_(params.num_blocks, 0) {
    assert(params.capacity > 0);
    if (weighted_vertices_)
        for (uint32_t b = 0; b < params.num_blocks; ++b) by_load_.emplace(0, b);
}

std::span<const GainEntry> FreightPartitioner::gather_gains(std::span<const uint32_t> nets,
                                                            int64_t vertex_weight) {
    bool cut_only = params_.objective == Objective::cutnet;
    for (uint32_t e : nets) {
        if (!tracker_.is_assigned(e)) continue;
        if (cut_only && tracker_.is_cut(e)) continue;
        uint32_t b = tracker_.last_block(e);
        if (gain_of_[b] == 0) touched_.push_back(b);
        gain_of_[b] += net_weight(e);
    }
    candidates_.clear();
    for (uint32_t b : touched_) {
        if (loads_[b] + vertex_weight <= params_.capacity)
            candidates_.push_back(GainEntry{b, gain_of_[b]});
        gain_of_[b] = 0;
    }
    touched_.clear();
    return candidates_;
}

uint32_t FreightPartitioner::select_block(std::span<const GainEntry> candidates,
                                          int64_t vertex_weight) const {
    Candidate best;
    if (!weighted_vertices_) {
        int64_t min_card = registry_.min_cardinality();
        best = Candidate{penalties_[min_card], min_card, 0, registry_.min_cardinality_block()};
        for (const GainEntry& c : candidates) {
            int64_t card = loads_[c.block];  // unit weights: load == cardinality
            Candidate cand{static_cast<double>(c.gain) + penalties_[card], card,
                           registry_.position_of(c.block), c.block};
            if (better(cand, best)) best = cand;
        }
    } else {
        auto [min_load, min_block] = *by_load_.begin();
        best = Candidate{load_penalty(vertex_weight, min_load, params_.alpha, params_.gamma),
                         min_load, min_block, min_block};
        for (const GainEntry& c : candidates) {
            int64_t load = loads_[c.block];
            Candidate cand{static_cast<double>(c.gain) +
                               load_penalty(vertex_weight, load, params_.alpha, params_.gamma),
                           load, c.block, c.block};
            if (better(cand, best)) best = cand;
        }
    }
    return best.block;
}

void FreightPartitioner::commit(uint32_t block, int64_t vertex_weight,
                                std::span<const uint32_t> nets) {
    candidates_scored_ += candidates_.size() + 1;
    if (weighted_vertices_) {
        by_load_.erase({loads_[block], block});
        by_load_.emplace(loads_[block] + vertex_weight, block);
    }
    loads_[block] += vertex_weight;
    if (loads_[block] > params_.capacity) balance_violated_ = true;
    registry_.increment(block);
    for (uint32_t e : nets) tracker_.observe(e, block);
}

std::vector<int64_t> FreightPartitioner::cardinalities() const {
    std::vector<int64_t> cards(params_.num_blocks);
    for (uint32_t b = 0; b < params_.num_blocks; ++b) cards[b] = registry_.cardinality_of(b);
    return cards;
}

size_t FreightPartitioner::memory_bytes() const {
    return registry_.memory_bytes() + tracker_.memory_bytes() +
           loads_.capacity() * sizeof(int64_t) + gain_of_.capacity() * sizeof(int64_t) +
           touched_.capacity() * sizeof(uint32_t) + candidates_.capacity() * sizeof(GainEntry) +
           by_load_.size() * sizeof(std::pair<int64_t, uint32_t>);
}

FennelPartitioner::FennelPartitioner(const ScoreParams& params, uint32_t num_vertices)
    : params_(params),
      penalties_(params.capacity, params.alpha, params.gamma),
      registry_(params.num_blocks),
      loads_(params.num_blocks, 0),
      assignment_(num_vertices, kNoBlock),
      gain_of_(params.num_blocks, 0) {
    assert(params.capacity > 0);
}

uint32_t FennelPartitioner::assign(uint32_t vertex, std::span<const uint32_t> neighbors) {
    for (uint32_t u : neighbors) {
        uint32_t b = assignment_[u];
        if (b == kNoBlock) continue;
        if (gain_of_[b] == 0) touched_.push_back(b);
        ++gain_of_[b];
    }
    candidates_.clear();
    for (uint32_t b : touched_) {
        if (loads_[b] + 1 <= params_.capacity) candidates_.push_back(GainEntry{b, gain_of_[b]});
        gain_of_[b] = 0;
    }
    touched_.clear();

    int64_t min_card = registry_.min_cardinality();
    Candidate best{penalties_[min_card], min_card, 0, registry_.min_cardinality_block()};
    for (const GainEntry& c : candidates_) {
        int64_t card = loads_[c.block];
        Candidate cand{static_cast<double>(c.gain) + penalties_[card], card,
                       registry_.position_of(c.block), c.block};
        if (better(cand, best)) best = cand;
    }

    uint32_t block = best.block;
    ++loads_[block];
    if (loads_[block] > params_.capacity) balance_violated_ = true;
    registry_.increment(block);
    assignment_[vertex] = block;
    return block;
}

NaiveFennelPartitioner::NaiveFennelPartitioner(const ScoreParams& params, uint32_t num_vertices)
    : params_(params),
      penalties_(params.capacity, params.alpha, params.gamma),
      registry_(params.num_blocks),
      loads_(params.num_blocks, 0),
      assignment_(num_vertices, kNoBlock),
      gain_of_(params.num_blocks, 0) {
    assert(params.capacity > 0);
}

uint32_t NaiveFennelPartitioner::assign(uint32_t vertex, std::span<const uint32_t> neighbors) {
    for (uint32_t u : neighbors) {
        uint32_t b = assignment_[u];
        if (b == kNoBlock) continue;
        if (gain_of_[b] == 0) touched_.push_back(b);
        ++gain_of_[b];
    }

    // Full scan over every block, walking the registry's runs so each
    // block's cardinality is at hand. Visiting positions in ascending order
    // with a strict comparison reproduces the fast path's ranking.
    Candidate best;
    bool have_best = false;
    registry_.for_each_bucket([&](int64_t card, uint32_t first, uint32_t last) {
        if (card + 1 > params_.capacity) return;
        for (uint32_t pos = first; pos <= last; ++pos) {
            uint32_t b = registry_.block_at(pos);
            Candidate cand{static_cast<double>(gain_of_[b]) + penalties_[card], card, pos, b};
            if (!have_best || better(cand, best)) {
                best = cand;
                have_best = true;
            }
        }
    });
    if (!have_best) {  // every block at capacity: fall back to the smallest
        int64_t min_card = registry_.min_cardinality();
        best = Candidate{penalties_[min_card], min_card, 0, registry_.min_cardinality_block()};
    }

    for (uint32_t b : touched_) gain_of_[b] = 0;
    touched_.clear();

    uint32_t block = best.block;
    ++loads_[block];
    if (loads_[block] > params_.capacity) balance_violated_ = true;
    registry_.increment(block);
    assignment_[vertex] = block;
    return block;
}

}  // namespace freight
