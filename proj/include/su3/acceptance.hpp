#pragma once

#include "su3/graph.hpp"
#include "su3/invariant.hpp"
#include "su3/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace su3 {

struct AcceptanceOptions {
    int max_level = 1000;  // items above this level are skipped
    double tol = 1e-9;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    Report report;
    double seconds = 0;
};

constexpr int criterion_count = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});

// Full audit of a graph against an invariant: spectra, nimrep dimensions,
// triality and conjugation, self-fusion, Ocneanu dimension and, where the
// splitting certifies a commutative toric set, the vertical sum rules.
// `golden` may be null; otherwise every number is compared with it.
Report audit(const GraphSpec& g, const ModularInvariant& inv, const nlohmann::json* golden, double tol = 1e-9);

// Golden case whose graph file has the same name as `file`, or null.
const nlohmann::json* golden_for_graph(const std::string& file);

}  // namespace su3
