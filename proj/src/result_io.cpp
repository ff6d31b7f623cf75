#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "freight/runner.hpp"

namespace freight {

void write_assignment(const std::filesystem::path& path, std::span<const uint32_t> assignment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    for (uint32_t b : assignment) out << b + 1 << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<uint32_t> read_assignment(const std::filesystem::path& path, uint64_t num_vertices,
                                      uint32_t num_blocks) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<uint32_t> assignment;
    assignment.reserve(num_vertices);
    uint64_t line_no = 0;
    int64_t b = 0;
    while (in >> b) {
        ++line_no;
        if (b < 1 || b > static_cast<int64_t>(num_blocks))
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": block id " + std::to_string(b) + " out of range [1," +
                                     std::to_string(num_blocks) + "]");
        assignment.push_back(static_cast<uint32_t>(b - 1));
    }
    if (assignment.size() != num_vertices)
        throw std::runtime_error(path.string() + ": holds " + std::to_string(assignment.size()) +
                                 " assignments, instance has " + std::to_string(num_vertices) +
                                 " vertices");
    return assignment;
}

void write_run_metadata(const std::filesystem::path& path, const PartitionResult& r) {
    nlohmann::json j;
    j["algorithm"] = r.algorithm;
    j["objective"] = r.params.objective == Objective::cutnet ? "cutnet" : "connectivity";
    j["num_blocks"] = r.params.num_blocks;
    j["epsilon"] = r.params.epsilon;
    j["gamma"] = r.params.gamma;
    j["alpha"] = r.params.alpha;
    j["capacity"] = r.params.capacity;
    j["seed"] = r.seed;
    j["num_vertices"] = r.num_vertices;
    j["num_nets"] = r.num_nets;
    j["pins"] = r.pins;
    j["balance_violated"] = r.balance_violated;
    j["assign_ns"] = r.assign_time.count();
    j["read_ns"] = r.read_time.count();
    j["ns_per_pin"] = r.ns_per_pin();

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace freight
