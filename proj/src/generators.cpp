#include "freight/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <unordered_map>

namespace freight {

namespace {

// mt19937_64 output is fixed by the standard; the reductions below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined, so
// generated instances are byte-identical across toolchains.
uint64_t bounded(std::mt19937_64& rng, uint64_t bound) {
    assert(bound > 0);
    return rng() % bound;
}

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Inverse-CDF sampler for P(s) proportional to s^-exponent on
// [min_size, max_size].
class PowerlawSizes {
  public:
    PowerlawSizes(uint32_t min_size, uint32_t max_size, double exponent) : min_size_(min_size) {
        double total = 0.0;
        cdf_.reserve(max_size - min_size + 1);
        for (uint32_t s = min_size; s <= max_size; ++s) {
            total += std::pow(static_cast<double>(s), -exponent);
            cdf_.push_back(total);
        }
        for (double& c : cdf_) c /= total;
    }
    uint32_t sample(std::mt19937_64& rng) const {
        double u = unit_real(rng);
        size_t i = std::lower_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin();
        if (i == cdf_.size()) i = cdf_.size() - 1;
        return min_size_ + static_cast<uint32_t>(i);
    }

  private:
    uint32_t min_size_;
    std::vector<double> cdf_;
};

uint64_t hash_pins(const std::vector<uint32_t>& pins) {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t p : pins) {
        h ^= p;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return h;
}

// Collects the accepted nets, dropping duplicates of earlier nets so the
// emitted instance is already clean.
class NetCollector {
  public:
    explicit NetCollector(Hypergraph& h) : h_(h) {}

    bool add(std::vector<uint32_t>& net) {
        std::sort(net.begin(), net.end());
        net.erase(std::unique(net.begin(), net.end()), net.end());
        if (net.empty()) return false;
        uint64_t hv = hash_pins(net);
        auto [lo, hi] = seen_.equal_range(hv);
        for (auto it = lo; it != hi; ++it) {
            auto other = h_.net(it->second);
            if (std::equal(net.begin(), net.end(), other.begin(), other.end())) return false;
        }
        seen_.emplace(hv, h_.num_nets());
        h_.add_net(net);
        return true;
    }

  private:
    Hypergraph& h_;
    std::unordered_multimap<uint64_t, uint32_t> seen_;
};

}  // namespace

Hypergraph generate_powerlaw_hgr(const PowerlawHgrParams& params, uint64_t seed) {
    assert(params.num_vertices >= 2 && params.min_size >= 1 &&
           params.min_size <= params.max_size);
    assert(params.community >= 1);
    std::mt19937_64 rng(seed);
    uint32_t n = params.num_vertices;
    uint32_t max_size = std::min(params.max_size, n);
    PowerlawSizes sizes(params.min_size, max_size, params.exponent);
    // stream position v belongs to community v % num_groups, so each
    // community's members recur across the whole stream
    uint32_t num_groups = std::max<uint32_t>(1, n / params.community);

    Hypergraph h;
    h.num_vertices = n;
    NetCollector collector(h);
    std::vector<uint32_t> pool;
    std::vector<uint32_t> net;
    for (uint32_t e = 0; e < params.num_nets; ++e) {
        bool accepted = false;
        for (int attempt = 0; attempt < 16 && !accepted; ++attempt) {
            uint32_t s = sizes.sample(rng);
            uint32_t home = static_cast<uint32_t>(bounded(rng, num_groups));
            pool.clear();
            uint32_t groups = 0;
            do {
                for (uint32_t v = (home + groups) % num_groups; v < n; v += num_groups)
                    pool.push_back(v);
                ++groups;
            } while (pool.size() < s && groups < num_groups);
            // a tenth of the nets bridge into one further community
            if (groups < num_groups && bounded(rng, 10) == 0) {
                for (uint32_t v = (home + groups) % num_groups; v < n; v += num_groups)
                    pool.push_back(v);
            }
            assert(pool.size() >= s);
            net.clear();
            for (uint32_t i = 0; i < s; ++i) {
                uint32_t j = i + static_cast<uint32_t>(bounded(rng, pool.size() - i));
                std::swap(pool[i], pool[j]);
                net.push_back(pool[i]);
            }
            accepted = collector.add(net);
        }
        // A net that keeps colliding is skipped; the header reflects the
        // emitted count.
    }
    return h;
}

Hypergraph generate_random_hgr(const RandomHgrParams& params, uint64_t seed) {
    assert(params.num_vertices >= 2 && params.avg_pins >= 2);
    std::mt19937_64 rng(seed);
    uint32_t n = params.num_vertices;
    uint32_t lo_size = 2;
    uint32_t hi_size = std::min(2 * params.avg_pins - 2, n);

    Hypergraph h;
    h.num_vertices = n;
    NetCollector collector(h);
    std::vector<uint32_t> net;
    for (uint32_t e = 0; e < params.num_nets; ++e) {
        bool accepted = false;
        for (int attempt = 0; attempt < 16 && !accepted; ++attempt) {
            uint32_t s = lo_size + static_cast<uint32_t>(bounded(rng, hi_size - lo_size + 1));
            net.clear();
            for (uint32_t draws = 0; net.size() < s && draws < 16 * s; ++draws) {
                uint32_t v = static_cast<uint32_t>(bounded(rng, n));
                if (std::find(net.begin(), net.end(), v) == net.end()) net.push_back(v);
            }
            accepted = collector.add(net);
        }
    }
    return h;
}

Graph generate_grid_graph(uint32_t rows, uint32_t cols) {
    assert(rows >= 1 && cols >= 1);
    Graph g;
    g.offsets.reserve(static_cast<size_t>(rows) * cols + 1);
    g.adjacency.reserve(4ull * rows * cols);
    for (uint32_t r = 0; r < rows; ++r)
        for (uint32_t c = 0; c < cols; ++c) {
            if (r > 0) g.adjacency.push_back((r - 1) * cols + c);
            if (c > 0) g.adjacency.push_back(r * cols + c - 1);
            if (c + 1 < cols) g.adjacency.push_back(r * cols + c + 1);
            if (r + 1 < rows) g.adjacency.push_back((r + 1) * cols + c);
            g.offsets.push_back(g.adjacency.size());
        }
    return g;
}

}  // namespace freight
