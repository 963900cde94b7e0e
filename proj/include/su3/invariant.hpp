#pragma once

#include "su3/alcove.hpp"
#include "su3/linalg.hpp"
#include "su3/modular.hpp"
#include "su3/report.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace su3 {

enum class Series { A, Astar, D, Dstar };

Series parse_series(const std::string& s);
std::string to_string(Series s);

// coeff * (sum of chi_left)(sum of conj chi_right)
struct Block {
    std::int64_t coeff = 1;
    std::vector<Weight> left;
    std::vector<Weight> right;
};

struct ModularInvariant {
    int k = 0;
    IMat M;
    std::vector<Block> blocks;  // empty for series invariants
    std::string series;         // empty for block invariants
};

// Throws std::invalid_argument for out-of-alcove weights, empty block lists and
// matrices failing verify_invariant.
ModularInvariant invariant_from_blocks(int k, const std::vector<Block>& blocks);
ModularInvariant series_invariant(Series s, int k);

Report verify_invariant(const ModularInvariant& inv, const ModularRep& rep, double tol = 1e-8);

ModularInvariant parse_invariant(const nlohmann::json& j);
ModularInvariant load_invariant(const std::filesystem::path& file);

struct OcneanuDimension {
    std::int64_t d_O = 0;
    std::map<std::int64_t, std::int64_t> block_dims;  // block size -> number of blocks
};
OcneanuDimension ocneanu_dimension(const IMat& M);

}  // namespace su3
