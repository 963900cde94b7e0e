#pragma once

#include "su3/invariant.hpp"
#include "su3/linalg.hpp"
#include "su3/report.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace su3 {

struct GraphSpec {
    std::string name;
    int k = 0;
    std::vector<std::string> vertices;
    IMat adjacency;
    std::optional<std::size_t> unit_vertex;
    std::vector<IMat> self_fusion;  // empty when the graph carries no table

    std::size_t size() const { return vertices.size(); }
    // throws std::out_of_range
    std::size_t index_of(const std::string& vertex) const;
};

// Directory holding the packaged graphs, invariants and goldens. The
// SU3_DATA_DIR environment variable overrides the build-time location.
std::filesystem::path data_dir();

GraphSpec parse_graph(const nlohmann::json& j);
GraphSpec load_graph(const std::filesystem::path& file);
nlohmann::ordered_json graph_to_json(const GraphSpec& g);

GraphSpec build_series_graph(Series s, int k);

// Norm, exponents and vertex count against the invariant.
Report validate_graph(const GraphSpec& g, const ModularInvariant& inv, double tol = 1e-7);

double graph_norm_target(int k);

}  // namespace su3
