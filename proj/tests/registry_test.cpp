#include <doctest.h>

#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "freight/block_registry.hpp"
#include "oracle_helpers.hpp"

using freight::BlockRegistry;
using freight::testing::validate_registry;

TEST_SUITE_BEGIN("registry");

TEST_CASE("fresh registry is the identity layout") {
    BlockRegistry reg(5);
    CHECK(reg.num_blocks() == 5);
    CHECK(reg.min_cardinality_block() == 0);
    CHECK(reg.min_cardinality() == 0);
    CHECK(reg.live_bucket_count() == 1);
    for (uint32_t b = 0; b < 5; ++b) {
        CHECK(reg.position_of(b) == b);
        CHECK(reg.block_at(b) == b);
        CHECK(reg.cardinality_of(b) == 0);
    }
    int buckets = 0;
    reg.for_each_bucket([&](int64_t card, uint32_t first, uint32_t last) {
        CHECK(card == 0);
        CHECK(first == 0);
        CHECK(last == 4);
        ++buckets;
    });
    CHECK(buckets == 1);
}

// Hand traces. Incrementing a block swaps it with the last entry of its
// equal-cardinality run, so the first increment of block b sends it to the
// rightmost position and pulls that block to b's old slot.

TEST_CASE("single increment, k = 2") {
    BlockRegistry reg(2);
    reg.increment(0);
    CHECK(reg.block_at(0) == 1);
    CHECK(reg.block_at(1) == 0);
    CHECK(reg.min_cardinality_block() == 1);
    CHECK(reg.cardinality_of(0) == 1);
    CHECK(reg.cardinality_of(1) == 0);
    CHECK(reg.live_bucket_count() == 2);
}

TEST_CASE("single increment, k = 3") {
    BlockRegistry reg(3);
    reg.increment(1);
    const uint32_t want[3] = {0, 2, 1};
    for (uint32_t pos = 0; pos < 3; ++pos) CHECK(reg.block_at(pos) == want[pos]);
    CHECK(reg.cardinality_of(1) == 1);
    CHECK(reg.min_cardinality() == 0);

    std::vector<std::pair<int64_t, std::pair<uint32_t, uint32_t>>> buckets;
    reg.for_each_bucket([&](int64_t card, uint32_t first, uint32_t last) {
        buckets.push_back({card, {first, last}});
    });
    REQUIRE(buckets.size() == 2);
    CHECK(buckets[0] == std::pair<int64_t, std::pair<uint32_t, uint32_t>>{0, {0, 1}});
    CHECK(buckets[1] == std::pair<int64_t, std::pair<uint32_t, uint32_t>>{1, {2, 2}});
}

TEST_CASE("single increment, k = 4") {
    BlockRegistry reg(4);
    reg.increment(0);
    const uint32_t want[4] = {3, 1, 2, 0};
    for (uint32_t pos = 0; pos < 4; ++pos) CHECK(reg.block_at(pos) == want[pos]);
    CHECK(reg.min_cardinality_block() == 3);
}

TEST_CASE("repeat increments of one block leave the order alone") {
    BlockRegistry reg(8);
    reg.increment(2);
    const uint32_t want[8] = {0, 1, 7, 3, 4, 5, 6, 2};
    for (uint32_t pos = 0; pos < 8; ++pos) CHECK(reg.block_at(pos) == want[pos]);

    // Block 2 now sits alone at the top; each further increment empties and
    // recreates its run in place.
    for (int i = 0; i < 4; ++i) reg.increment(2);
    for (uint32_t pos = 0; pos < 8; ++pos) CHECK(reg.block_at(pos) == want[pos]);
    CHECK(reg.cardinality_of(2) == 5);
    CHECK(reg.min_cardinality() == 0);
    CHECK(reg.live_bucket_count() == 2);
    CHECK(reg.increments() == 5);
}

TEST_CASE("increment merges into an existing equal-cardinality run") {
    BlockRegistry reg(4);
    reg.increment(0);  // -> [3,1,2,0], runs (0:[0,2]) (1:[3,3])
    reg.increment(1);  // block 1 joins the cardinality-1 run
    const uint32_t want[4] = {3, 2, 1, 0};
    for (uint32_t pos = 0; pos < 4; ++pos) CHECK(reg.block_at(pos) == want[pos]);
    CHECK(reg.live_bucket_count() == 2);

    std::vector<std::pair<int64_t, std::pair<uint32_t, uint32_t>>> buckets;
    reg.for_each_bucket([&](int64_t card, uint32_t first, uint32_t last) {
        buckets.push_back({card, {first, last}});
    });
    REQUIRE(buckets.size() == 2);
    CHECK(buckets[0] == std::pair<int64_t, std::pair<uint32_t, uint32_t>>{0, {0, 1}});
    CHECK(buckets[1] == std::pair<int64_t, std::pair<uint32_t, uint32_t>>{1, {2, 3}});
}

TEST_CASE("emptied run frees its bucket") {
    BlockRegistry reg(2);
    reg.increment(0);  // runs (0:[0,0]) (1:[1,1])
    reg.increment(1);  // the cardinality-0 run empties; block 1 joins block 0's run
    CHECK(reg.live_bucket_count() == 1);
    CHECK(reg.min_cardinality() == 1);
    CHECK(reg.cardinality_of(0) == 1);
    CHECK(reg.cardinality_of(1) == 1);
}

TEST_CASE("k = 1 degenerates to a counter") {
    BlockRegistry reg(1);
    for (int i = 1; i <= 10; ++i) {
        reg.increment(0);
        CHECK(reg.min_cardinality_block() == 0);
        CHECK(reg.min_cardinality() == i);
        CHECK(reg.live_bucket_count() == 1);
        CHECK(reg.last_op_steps() <= 8);
    }
}

TEST_CASE("dump lists position:block:cardinality") {
    BlockRegistry reg(3);
    reg.increment(1);
    std::ostringstream out;
    reg.dump(out);
    CHECK(out.str() == "0:0:0\n1:2:0\n2:1:1\n");
}

TEST_CASE("random increments agree with shadow counts") {
    for (uint32_t k : {1u, 2u, 3u, 7u, 64u}) {
        std::mt19937_64 rng(k * 977 + 5);
        BlockRegistry reg(k);
        std::vector<int64_t> counts(k, 0);
        for (int i = 0; i < 2000; ++i) {
            uint32_t b = static_cast<uint32_t>(rng() % k);
            reg.increment(b);
            ++counts[b];
            CHECK(reg.last_op_steps() <= 8);
            if (i < 200 || i % 97 == 0) {
                std::string err = validate_registry(reg, counts);
                CHECK_MESSAGE(err.empty(), "k=" << k << " step=" << i << ": " << err);
                if (!err.empty()) return;
            }
        }
        std::string err = validate_registry(reg, counts);
        CHECK_MESSAGE(err.empty(), err);

        // The minimum block really is an argmin, and the live buckets are
        // exactly the distinct cardinalities.
        int64_t min_count = *std::min_element(counts.begin(), counts.end());
        CHECK(reg.min_cardinality() == min_count);
        CHECK(reg.cardinality_of(reg.min_cardinality_block()) == min_count);
        std::set<int64_t> distinct(counts.begin(), counts.end());
        CHECK(reg.live_bucket_count() == distinct.size());
    }
}

TEST_CASE("skewed increment patterns hold up") {
    // Always hit the current minimum: runs sweep upward in lock step.
    BlockRegistry reg(6);
    std::vector<int64_t> counts(6, 0);
    for (int i = 0; i < 600; ++i) {
        uint32_t b = reg.min_cardinality_block();
        reg.increment(b);
        ++counts[b];
    }
    CHECK(validate_registry(reg, counts).empty());
    CHECK(reg.min_cardinality() == 100);
    CHECK(reg.live_bucket_count() == 1);

    // Always hit the same block: one runaway run.
    BlockRegistry solo(6);
    std::vector<int64_t> solo_counts(6, 0);
    for (int i = 0; i < 500; ++i) {
        solo.increment(3);
        ++solo_counts[3];
    }
    CHECK(validate_registry(solo, solo_counts).empty());
    CHECK(solo.live_bucket_count() == 2);
}

TEST_CASE("memory stays at its construction footprint") {
    BlockRegistry reg(4096);
    size_t at_start = reg.memory_bytes();
    CHECK(at_start <= 4096 * 64);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100000; ++i) reg.increment(static_cast<uint32_t>(rng() % 4096));
    CHECK(reg.memory_bytes() == at_start);
}

TEST_SUITE_END();
