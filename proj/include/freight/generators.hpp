#pragma once

#include <cstdint>

#include "freight/hypergraph_io.hpp"

namespace freight {

// Synthetic instance with power-law net sizes and interleaved community
// structure: vertices are split round-robin into communities of roughly
// `community` members (stream position v belongs to community v % count), each
// net draws its size from a truncated discrete power law and places its pins
// inside one community, widening into neighboring communities when the net is
// larger than one community or, for a tenth of the nets, to bridge two of
// them. A community's members recur throughout the stream, so nets stay
// clustered without being contiguous — the structure that rewards assignment
// by shared-net affinity rather than by stream position.
struct PowerlawHgrParams {
    uint32_t num_vertices = 10000;
    uint32_t num_nets = 20000;
    double exponent = 2.0;    // P(size = s) proportional to s^-exponent
    uint32_t min_size = 2;
    uint32_t max_size = 64;
    uint32_t community = 32;  // target community size in vertices
};

Hypergraph generate_powerlaw_hgr(const PowerlawHgrParams& params, uint64_t seed);

// Uniform random hypergraph: net sizes uniform in [2, 2*avg_pins - 2], pins
// uniform over all vertices ignoring locality.
struct RandomHgrParams {
    uint32_t num_vertices = 1000;
    uint32_t num_nets = 2000;
    uint32_t avg_pins = 4;
};

Hypergraph generate_random_hgr(const RandomHgrParams& params, uint64_t seed);

// rows x cols four-neighbor grid in row-major vertex order.
Graph generate_grid_graph(uint32_t rows, uint32_t cols);

}  // namespace freight
