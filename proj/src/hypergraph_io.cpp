#include "freight/hypergraph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace freight {

namespace {

[[noreturn]] void fail(const std::string& path, uint64_t line, const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Whitespace-separated integer scanner over one line.
struct Tokens {
    const char* p;
    const char* end;

    explicit Tokens(const std::string& s) : p(s.data()), end(s.data() + s.size()) {}

    void skip_space() {
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
    }
    bool done() {
        skip_space();
        return p == end;
    }
    bool next_u64(uint64_t& out) {
        skip_space();
        if (p == end) return false;
        auto [ptr, ec] = std::from_chars(p, end, out);
        if (ec != std::errc() || (ptr != end && *ptr != ' ' && *ptr != '\t')) return false;
        p = ptr;
        return true;
    }
    bool next_i64(int64_t& out) {
        skip_space();
        if (p == end) return false;
        auto [ptr, ec] = std::from_chars(p, end, out);
        if (ec != std::errc() || (ptr != end && *ptr != ' ' && *ptr != '\t')) return false;
        p = ptr;
        return true;
    }
};

class LineSource {
  public:
    LineSource(std::istream& in, const std::string& path) : in_(in), path_(path) {}

    // Returns false at end of file. Comment lines starting with '%' are skipped.
    bool next_content_line(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            chomp(line);
            if (!line.empty() && line[0] == '%') continue;
            return true;
        }
        return false;
    }
    // Like next_content_line but blank lines are meaningful records.
    bool next_record_line(std::string& line) { return next_content_line(line); }

    uint64_t line_no() const { return line_no_; }
    const std::string& path() const { return path_; }

  private:
    std::istream& in_;
    std::string path_;
    uint64_t line_no_ = 0;
};

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

uint64_t hash_pins(std::span<const uint32_t> pins) {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t p : pins) {
        h ^= p;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return h;
}

void parse_weight_flags(uint64_t fmt, const std::string& path, uint64_t line, bool& weights_a,
                        bool& weights_b) {
    if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11)
        fail(path, line, "unsupported fmt code " + std::to_string(fmt));
    weights_a = fmt == 1 || fmt == 11;
    weights_b = fmt == 10 || fmt == 11;
}

}  // namespace

int64_t Hypergraph::total_vertex_weight() const {
    if (vertex_weights.empty()) return num_vertices;
    return std::accumulate(vertex_weights.begin(), vertex_weights.end(), int64_t{0});
}

int64_t VertexStream::total_vertex_weight() const {
    if (vertex_weights.empty()) return num_vertices();
    return std::accumulate(vertex_weights.begin(), vertex_weights.end(), int64_t{0});
}

Hypergraph read_hgr(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    LineSource src(in, path.string());
    std::string line;

    if (!src.next_content_line(line)) fail(src.path(), 1, "missing header");
    Tokens header(line);
    uint64_t m = 0, n = 0, fmt = 0;
    if (!header.next_u64(m) || !header.next_u64(n))
        fail(src.path(), src.line_no(), "header must be \"m n [fmt]\"");
    if (!header.done() && !header.next_u64(fmt))
        fail(src.path(), src.line_no(), "bad fmt field in header");
    if (!header.done()) fail(src.path(), src.line_no(), "trailing tokens in header");
    bool net_weighted = false, vertex_weighted = false;
    parse_weight_flags(fmt, src.path(), src.line_no(), net_weighted, vertex_weighted);

    Hypergraph h;
    h.num_vertices = static_cast<uint32_t>(n);
    h.net_offsets.reserve(m + 1);
    if (net_weighted) h.net_weights.reserve(m);

    std::unordered_multimap<uint64_t, uint32_t> seen;
    std::vector<uint32_t> net;
    for (uint64_t e = 0; e < m; ++e) {
        if (!src.next_record_line(line))
            fail(src.path(), src.line_no() + 1, "expected " + std::to_string(m) +
                                                    " net lines, file ends after " +
                                                    std::to_string(e));
        Tokens t(line);
        int64_t w = 1;
        if (net_weighted) {
            if (!t.next_i64(w)) fail(src.path(), src.line_no(), "expected net weight");
            if (w <= 0) fail(src.path(), src.line_no(), "net weight must be positive");
        }
        net.clear();
        uint64_t pin = 0;
        while (!t.done()) {
            if (!t.next_u64(pin)) fail(src.path(), src.line_no(), "bad pin token");
            if (pin < 1 || pin > n)
                fail(src.path(), src.line_no(),
                     "pin id " + std::to_string(pin) + " out of range [1," + std::to_string(n) +
                         "]");
            net.push_back(static_cast<uint32_t>(pin - 1));
        }
        std::sort(net.begin(), net.end());
        net.erase(std::unique(net.begin(), net.end()), net.end());
        if (net.empty()) continue;  // empty net, dropped

        uint64_t hv = hash_pins(net);
        bool parallel = false;
        auto [lo, hi] = seen.equal_range(hv);
        for (auto it = lo; it != hi && !parallel; ++it) {
            auto other = h.net(it->second);
            parallel = std::equal(net.begin(), net.end(), other.begin(), other.end());
        }
        if (parallel) continue;  // parallel net, dropped
        seen.emplace(hv, h.num_nets());
        h.add_net(net);
        if (net_weighted) h.net_weights.push_back(w);
    }

    if (vertex_weighted) {
        h.vertex_weights.reserve(n);
        for (uint64_t v = 0; v < n; ++v) {
            if (!src.next_record_line(line))
                fail(src.path(), src.line_no() + 1, "expected " + std::to_string(n) +
                                                        " vertex weight lines, file ends after " +
                                                        std::to_string(v));
            Tokens t(line);
            int64_t w = 0;
            if (!t.next_i64(w) || w < 0)
                fail(src.path(), src.line_no(), "expected non-negative vertex weight");
            if (!t.done()) fail(src.path(), src.line_no(), "trailing tokens after vertex weight");
            h.vertex_weights.push_back(w);
        }
    }
    while (src.next_content_line(line)) {
        Tokens t(line);
        if (!t.done()) fail(src.path(), src.line_no(), "unexpected trailing content");
    }
    return h;
}

void write_hgr(const std::filesystem::path& path, const Hypergraph& h) {
    std::ofstream out = open_output(path);
    int fmt = (h.has_net_weights() ? 1 : 0) + (h.has_vertex_weights() ? 10 : 0);
    out << h.num_nets() << ' ' << h.num_vertices;
    if (fmt != 0) out << ' ' << (fmt == 1 ? "1" : std::to_string(fmt));
    out << '\n';
    for (uint32_t e = 0; e < h.num_nets(); ++e) {
        bool first = true;
        if (h.has_net_weights()) {
            out << h.net_weights[e];
            first = false;
        }
        for (uint32_t v : h.net(e)) {
            if (!first) out << ' ';
            out << v + 1;
            first = false;
        }
        out << '\n';
    }
    if (h.has_vertex_weights())
        for (int64_t w : h.vertex_weights) out << w << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

VertexStream read_vstream(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    LineSource src(in, path.string());
    std::string line;

    if (!src.next_content_line(line)) fail(src.path(), 1, "missing header");
    Tokens header(line);
    uint64_t n = 0, m = 0, fmt = 0;
    if (!header.next_u64(n) || !header.next_u64(m))
        fail(src.path(), src.line_no(), "header must be \"n m [fmt]\"");
    if (!header.done() && !header.next_u64(fmt))
        fail(src.path(), src.line_no(), "bad fmt field in header");
    if (!header.done()) fail(src.path(), src.line_no(), "trailing tokens in header");
    if (fmt != 0 && fmt != 10)
        fail(src.path(), src.line_no(), "unsupported fmt code " + std::to_string(fmt));
    bool vertex_weighted = fmt == 10;

    VertexStream s;
    s.num_nets = static_cast<uint32_t>(m);
    s.offsets.reserve(n + 1);
    if (vertex_weighted) s.vertex_weights.reserve(n);

    std::vector<uint32_t> nets;
    for (uint64_t v = 0; v < n; ++v) {
        if (!src.next_record_line(line))
            fail(src.path(), src.line_no() + 1, "expected " + std::to_string(n) +
                                                    " vertex lines, file ends after " +
                                                    std::to_string(v));
        Tokens t(line);
        if (vertex_weighted) {
            int64_t w = 0;
            if (!t.next_i64(w) || w < 0)
                fail(src.path(), src.line_no(), "expected non-negative vertex weight");
            s.vertex_weights.push_back(w);
        }
        nets.clear();
        uint64_t id = 0;
        while (!t.done()) {
            if (!t.next_u64(id)) fail(src.path(), src.line_no(), "bad net id token");
            if (id < 1 || id > m)
                fail(src.path(), src.line_no(),
                     "net id " + std::to_string(id) + " out of range [1," + std::to_string(m) +
                         "]");
            nets.push_back(static_cast<uint32_t>(id - 1));
        }
        std::sort(nets.begin(), nets.end());
        nets.erase(std::unique(nets.begin(), nets.end()), nets.end());
        s.incident_nets.insert(s.incident_nets.end(), nets.begin(), nets.end());
        s.offsets.push_back(s.incident_nets.size());
    }
    while (src.next_content_line(line)) {
        Tokens t(line);
        if (!t.done()) fail(src.path(), src.line_no(), "unexpected trailing content");
    }
    return s;
}

void write_vstream(const std::filesystem::path& path, const VertexStream& s) {
    if (!s.net_weights.empty())
        throw std::runtime_error("vstream format cannot represent net weights");
    std::ofstream out = open_output(path);
    out << s.num_vertices() << ' ' << s.num_nets;
    if (s.has_vertex_weights()) out << " 10";
    out << '\n';
    for (uint32_t v = 0; v < s.num_vertices(); ++v) {
        bool first = true;
        if (s.has_vertex_weights()) {
            out << s.vertex_weights[v];
            first = false;
        }
        for (uint32_t e : s.nets_of(v)) {
            if (!first) out << ' ';
            out << e + 1;
            first = false;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

VertexStream to_vertex_stream(const Hypergraph& h) {
    VertexStream s;
    s.num_nets = h.num_nets();
    s.vertex_weights = h.vertex_weights;
    s.net_weights = h.net_weights;

    std::vector<uint64_t> degree(h.num_vertices, 0);
    for (uint32_t p : h.pins) ++degree[p];
    s.offsets.assign(h.num_vertices + 1, 0);
    for (uint32_t v = 0; v < h.num_vertices; ++v) s.offsets[v + 1] = s.offsets[v] + degree[v];
    s.incident_nets.resize(h.pin_count());

    std::vector<uint64_t> cursor(s.offsets.begin(), s.offsets.end() - 1);
    for (uint32_t e = 0; e < h.num_nets(); ++e)
        for (uint32_t v : h.net(e)) s.incident_nets[cursor[v]++] = e;
    return s;
}

Hypergraph to_hypergraph(const VertexStream& s) {
    Hypergraph h;
    h.num_vertices = s.num_vertices();
    h.vertex_weights = s.vertex_weights;
    h.net_weights = s.net_weights;

    std::vector<uint64_t> size(s.num_nets, 0);
    for (uint32_t e : s.incident_nets) ++size[e];
    h.net_offsets.assign(s.num_nets + 1, 0);
    for (uint32_t e = 0; e < s.num_nets; ++e) h.net_offsets[e + 1] = h.net_offsets[e] + size[e];
    h.pins.resize(s.pin_count());

    std::vector<uint64_t> cursor(h.net_offsets.begin(), h.net_offsets.end() - 1);
    for (uint32_t v = 0; v < s.num_vertices(); ++v)
        for (uint32_t e : s.nets_of(v)) h.pins[cursor[e]++] = v;
    return h;
}

Graph read_metis_graph(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    LineSource src(in, path.string());
    std::string line;

    if (!src.next_content_line(line)) fail(src.path(), 1, "missing header");
    Tokens header(line);
    uint64_t n = 0, m = 0;
    if (!header.next_u64(n) || !header.next_u64(m))
        fail(src.path(), src.line_no(), "header must be \"n m\"");
    if (!header.done()) {
        uint64_t fmt = 0;
        if (!header.next_u64(fmt) || fmt != 0 || !header.done())
            fail(src.path(), src.line_no(), "weighted graph formats are not supported");
    }

    Graph g;
    g.offsets.reserve(n + 1);
    g.adjacency.reserve(2 * m);

    std::vector<uint32_t> adj;
    for (uint64_t v = 0; v < n; ++v) {
        if (!src.next_record_line(line))
            fail(src.path(), src.line_no() + 1, "expected " + std::to_string(n) +
                                                    " adjacency lines, file ends after " +
                                                    std::to_string(v));
        Tokens t(line);
        adj.clear();
        uint64_t u = 0;
        while (!t.done()) {
            if (!t.next_u64(u)) fail(src.path(), src.line_no(), "bad neighbor token");
            if (u < 1 || u > n)
                fail(src.path(), src.line_no(), "neighbor id " + std::to_string(u) +
                                                    " out of range [1," + std::to_string(n) + "]");
            if (u - 1 == v)
                fail(src.path(), src.line_no(), "self loop at vertex " + std::to_string(v + 1));
            adj.push_back(static_cast<uint32_t>(u - 1));
        }
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            fail(src.path(), src.line_no(),
                 "duplicate neighbor in adjacency of vertex " + std::to_string(v + 1));
        g.adjacency.insert(g.adjacency.end(), adj.begin(), adj.end());
        g.offsets.push_back(g.adjacency.size());
    }
    while (src.next_content_line(line)) {
        Tokens t(line);
        if (!t.done()) fail(src.path(), src.line_no(), "unexpected trailing content");
    }

    if (g.adjacency.size() != 2 * m)
        throw std::runtime_error(path.string() + ": header promises " + std::to_string(m) +
                                 " edges but adjacency lists hold " +
                                 std::to_string(g.adjacency.size()) + " entries");
    for (uint32_t v = 0; v < g.num_vertices(); ++v)
        for (uint32_t u : g.neighbors(v)) {
            auto nb = g.neighbors(u);
            if (!std::binary_search(nb.begin(), nb.end(), v))
                throw std::runtime_error(path.string() + ": edge " + std::to_string(v + 1) + "-" +
                                         std::to_string(u + 1) +
                                         " not symmetric: missing reverse entry");
        }
    return g;
}

void write_metis_graph(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out = open_output(path);
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (uint32_t v = 0; v < g.num_vertices(); ++v) {
        bool first = true;
        for (uint32_t u : g.neighbors(v)) {
            if (!first) out << ' ';
            out << u + 1;
            first = false;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

VertexStreamReader::VertexStreamReader(const std::filesystem::path& path)
    : in_(path), path_(path.string()) {
    if (!in_) throw std::runtime_error("cannot open " + path_);
    while (std::getline(in_, line_)) {
        ++line_no_;
        chomp(line_);
        if (!line_.empty() && line_[0] == '%') continue;
        Tokens header(line_);
        uint64_t n = 0, m = 0, fmt = 0;
        if (!header.next_u64(n) || !header.next_u64(m))
            fail(path_, line_no_, "header must be \"n m [fmt]\"");
        if (!header.done() && !header.next_u64(fmt)) fail(path_, line_no_, "bad fmt field");
        if (!header.done()) fail(path_, line_no_, "trailing tokens in header");
        if (fmt != 0 && fmt != 10)
            fail(path_, line_no_, "unsupported fmt code " + std::to_string(fmt));
        num_vertices_ = static_cast<uint32_t>(n);
        num_nets_ = static_cast<uint32_t>(m);
        has_vertex_weights_ = fmt == 10;
        return;
    }
    fail(path_, 1, "missing header");
}

bool VertexStreamReader::next(VertexRecord& rec) {
    if (records_read_ == num_vertices_) return false;
    for (;;) {
        if (!std::getline(in_, line_))
            fail(path_, line_no_ + 1,
                 "truncated stream: expected " + std::to_string(num_vertices_) +
                     " records, file ends after " + std::to_string(records_read_));
        ++line_no_;
        chomp(line_);
        if (!line_.empty() && line_[0] == '%') continue;
        break;
    }
    Tokens t(line_);
    rec.vertex = static_cast<uint32_t>(records_read_);
    rec.weight = 1;
    rec.nets.clear();
    if (has_vertex_weights_) {
        if (!t.next_i64(rec.weight) || rec.weight < 0)
            fail(path_, line_no_, "expected non-negative vertex weight");
    }
    uint64_t id = 0;
    while (!t.done()) {
        if (!t.next_u64(id)) fail(path_, line_no_, "bad net id token");
        if (id < 1 || id > num_nets_)
            fail(path_, line_no_, "net id " + std::to_string(id) + " out of range [1," +
                                      std::to_string(num_nets_) + "]");
        rec.nets.push_back(static_cast<uint32_t>(id - 1));
    }
    std::sort(rec.nets.begin(), rec.nets.end());
    rec.nets.erase(std::unique(rec.nets.begin(), rec.nets.end()), rec.nets.end());
    ++records_read_;
    size_t live = line_.capacity() + rec.nets.capacity() * sizeof(uint32_t);
    peak_buffer_bytes_ = std::max(peak_buffer_bytes_, live);
    return true;
}

}  // namespace freight
