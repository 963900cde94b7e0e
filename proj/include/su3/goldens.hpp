#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

namespace su3 {

// Expected values shared by the CLI audits and the acceptance suite, read
// once from goldens.json in the data directory.
const nlohmann::json& goldens();

// Entry of goldens()["cases"] with the given id; throws std::out_of_range.
const nlohmann::json& golden_case(const std::string& id);

std::filesystem::path data_file(const std::string& name);

}  // namespace su3
