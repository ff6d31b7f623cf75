#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace freight {

// In-memory hypergraph in net-major (hMetis-style) layout. Pins are stored
// 0-indexed, sorted ascending, with duplicates removed at parse time.
struct Hypergraph {
    uint32_t num_vertices = 0;
    std::vector<uint64_t> net_offsets{0};   // num_nets()+1 entries
    std::vector<uint32_t> pins;             // concatenated pin lists
    std::vector<int64_t> net_weights;       // empty -> every net has weight 1
    std::vector<int64_t> vertex_weights;    // empty -> every vertex has weight 1

    uint32_t num_nets() const { return static_cast<uint32_t>(net_offsets.size() - 1); }
    uint64_t pin_count() const { return pins.size(); }

    std::span<const uint32_t> net(uint32_t e) const {
        return {pins.data() + net_offsets[e], pins.data() + net_offsets[e + 1]};
    }
    int64_t net_weight(uint32_t e) const { return net_weights.empty() ? 1 : net_weights[e]; }
    int64_t vertex_weight(uint32_t v) const {
        return vertex_weights.empty() ? 1 : vertex_weights[v];
    }
    int64_t total_vertex_weight() const;
    bool has_net_weights() const { return !net_weights.empty(); }
    bool has_vertex_weights() const { return !vertex_weights.empty(); }

    void add_net(std::span<const uint32_t> net_pins) {
        pins.insert(pins.end(), net_pins.begin(), net_pins.end());
        net_offsets.push_back(pins.size());
    }
};

// Vertex-major view of a hypergraph: one record per vertex listing its
// incident nets in ascending id order. This is the one-pass input format.
// Net weights are carried through for in-memory runs; the .vstream file
// format itself cannot represent them.
struct VertexStream {
    uint32_t num_nets = 0;
    std::vector<uint64_t> offsets{0};       // num_vertices()+1 entries
    std::vector<uint32_t> incident_nets;
    std::vector<int64_t> vertex_weights;    // empty -> unit weights
    std::vector<int64_t> net_weights;       // in-memory only, empty -> unit

    uint32_t num_vertices() const { return static_cast<uint32_t>(offsets.size() - 1); }
    uint64_t pin_count() const { return incident_nets.size(); }

    std::span<const uint32_t> nets_of(uint32_t v) const {
        return {incident_nets.data() + offsets[v], incident_nets.data() + offsets[v + 1]};
    }
    int64_t vertex_weight(uint32_t v) const {
        return vertex_weights.empty() ? 1 : vertex_weights[v];
    }
    bool has_vertex_weights() const { return !vertex_weights.empty(); }
    int64_t total_vertex_weight() const;
};

// Undirected graph in METIS adjacency layout, 0-indexed internally.
struct Graph {
    std::vector<uint64_t> offsets{0};       // num_vertices()+1 entries
    std::vector<uint32_t> adjacency;

    uint32_t num_vertices() const { return static_cast<uint32_t>(offsets.size() - 1); }
    uint64_t num_edges() const { return adjacency.size() / 2; }

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {adjacency.data() + offsets[v], adjacency.data() + offsets[v + 1]};
    }
};

// Parsers validate ids and report errors as "<path>:<line>: <message>".
Hypergraph read_hgr(const std::filesystem::path& path);
void write_hgr(const std::filesystem::path& path, const Hypergraph& h);

VertexStream read_vstream(const std::filesystem::path& path);
void write_vstream(const std::filesystem::path& path, const VertexStream& s);

Graph read_metis_graph(const std::filesystem::path& path);
void write_metis_graph(const std::filesystem::path& path, const Graph& g);

// Transpose between net-major and vertex-major layouts. Both directions
// keep weights and produce sorted incidence lists, so the round trip is
// the identity on cleaned inputs.
VertexStream to_vertex_stream(const Hypergraph& h);
Hypergraph to_hypergraph(const VertexStream& s);

struct VertexRecord {
    uint32_t vertex = 0;
    int64_t weight = 1;
    std::vector<uint32_t> nets;
};

// Single-pass reader over a .vstream file. Holds one record worth of state;
// a second consumer needs its own reader.
class VertexStreamReader {
  public:
    explicit VertexStreamReader(const std::filesystem::path& path);

    uint32_t num_vertices() const { return num_vertices_; }
    uint32_t num_nets() const { return num_nets_; }
    bool has_vertex_weights() const { return has_vertex_weights_; }

    // Fills `rec` with the next record, reusing its buffers. Returns false
    // once all records have been read; throws on a truncated or bad file.
    bool next(VertexRecord& rec);

    uint64_t records_read() const { return records_read_; }
    size_t peak_buffer_bytes() const { return peak_buffer_bytes_; }

  private:
    std::ifstream in_;
    std::string path_;
    std::string line_;
    uint32_t num_vertices_ = 0;
    uint32_t num_nets_ = 0;
    bool has_vertex_weights_ = false;
    uint64_t records_read_ = 0;
    uint64_t line_no_ = 0;
    size_t peak_buffer_bytes_ = 0;
};

}  // namespace freight
