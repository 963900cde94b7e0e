#include "su3/goldens.hpp"

#include "su3/graph.hpp"

#include <fstream>
#include <stdexcept>

namespace su3 {

std::filesystem::path data_file(const std::string& name) { return data_dir() / name; }

const nlohmann::json& goldens() {
    static const nlohmann::json g = [] {
        std::ifstream in(data_file("goldens.json"));
        if (!in) throw std::runtime_error("cannot open " + data_file("goldens.json").string());
        return nlohmann::json::parse(in);
    }();
    return g;
}

const nlohmann::json& golden_case(const std::string& id) {
    for (const auto& c : goldens().at("cases"))
        if (c.at("id") == id) return c;
    throw std::out_of_range("no golden case '" + id + "'");
}

}  // namespace su3
