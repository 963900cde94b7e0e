#include "su3/graph.hpp"

#include "su3/fusion.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>

namespace su3 {

std::size_t GraphSpec::index_of(const std::string& vertex) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == vertex) return i;
    throw std::out_of_range("graph " + name + " has no vertex '" + vertex + "'");
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("SU3_DATA_DIR"); env && *env) return env;
    return SU3_DATA_DIR;
}

namespace {

[[noreturn]] void schema(const std::string& what) { throw std::invalid_argument("graph schema error: " + what); }

IMat parse_square(const nlohmann::json& a, std::size_t r, const std::string& what) {
    if (!a.is_array() || a.size() != r) schema(what + " must have " + std::to_string(r) + " rows");
    IMat m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (!a[i].is_array() || a[i].size() != r) schema(what + " is not square");
        for (std::size_t j = 0; j < r; ++j) {
            if (!a[i][j].is_number_integer()) schema(what + " entries must be integers");
            m(i, j) = a[i][j].get<std::int64_t>();
            if (m(i, j) < 0) schema(what + " has a negative entry");
        }
    }
    return m;
}

}  // namespace

GraphSpec parse_graph(const nlohmann::json& j) {
    if (!j.is_object()) schema("document is not an object");
    for (const char* key : {"name", "level", "vertices", "adjacency"})
        if (!j.contains(key)) schema(std::string("missing '") + key + "'");
    GraphSpec g;
    g.name = j.at("name").get<std::string>();
    g.k = j.at("level").get<int>();
    if (g.k < 0) schema("negative level");
    for (auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
    const auto r = g.vertices.size();
    g.adjacency = parse_square(j.at("adjacency"), r, "adjacency");
    if (j.contains("unit_vertex")) {
        auto u = j.at("unit_vertex").get<std::int64_t>();
        if (u < 0 || static_cast<std::size_t>(u) >= r) schema("unit_vertex out of range");
        g.unit_vertex = static_cast<std::size_t>(u);
    }
    if (j.contains("self_fusion")) {
        const auto& sf = j.at("self_fusion");
        if (!sf.is_array() || sf.size() != r) schema("self_fusion must hold one matrix per vertex");
        for (auto& m : sf) g.self_fusion.push_back(parse_square(m, r, "self_fusion"));
    }
    return g;
}

GraphSpec load_graph(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        schema(file.string() + ": " + e.what());
    }
    return parse_graph(j);
}

nlohmann::ordered_json graph_to_json(const GraphSpec& g) {
    auto rows = [](const IMat& m) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            a.push_back(row);
        }
        return a;
    };
    nlohmann::ordered_json j;
    j["name"] = g.name;
    j["level"] = g.k;
    j["vertices"] = g.vertices;
    j["adjacency"] = rows(g.adjacency);
    if (g.unit_vertex) j["unit_vertex"] = *g.unit_vertex;
    if (!g.self_fusion.empty()) {
        j["self_fusion"] = nlohmann::ordered_json::array();
        for (auto& m : g.self_fusion) j["self_fusion"].push_back(rows(m));
    }
    return j;
}

double graph_norm_target(int k) { return 1.0 + 2.0 * std::cos(2.0 * std::numbers::pi / (k + 3)); }

namespace {

GraphSpec alcove_graph(int k) {
    const Alcove alc(k);
    GraphSpec g;
    g.name = "A" + std::to_string(k);
    g.k = k;
    for (auto& w : alc.weights()) g.vertices.push_back(to_string(w));
    g.adjacency = fundamental_adjacency(alc);
    g.unit_vertex = 0;
    return g;
}

GraphSpec astar_graph(int k) {
    auto file = data_dir() / ("astar" + std::to_string(k) + ".json");
    if (!std::filesystem::exists(file))
        throw std::invalid_argument("no packaged A* data at level " + std::to_string(k));
    return load_graph(file);
}

// Z_3 orbifold of A_k. Vertex n_t is the orbit whose first weight in alcove
// order has l1+l2 = n and triality t; repeated names get primes.
GraphSpec orbifold_graph(int k) {
    const Alcove alc(k);
    const IMat A = fundamental_adjacency(alc);
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<int> orbit_of(alc.size(), -1);
    for (std::size_t i = 0; i < alc.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<std::size_t> o{i};
        Weight w = z_rotate(alc[i], k);
        while (alc.index(w) != i) {
            o.push_back(alc.index(w));
            w = z_rotate(w, k);
        }
        for (auto j : o) orbit_of[j] = static_cast<int>(orbits.size());
        orbits.push_back(o);
    }

    std::vector<std::string> orbit_name(orbits.size());
    std::map<std::pair<int, int>, int> seen;
    auto base = [&](std::size_t o) {
        const Weight r = alc[orbits[o][0]];
        return std::pair{r.l1 + r.l2, triality(r)};
    };
    auto primed = [](std::string s, int primes) { return s + std::string(static_cast<std::size_t>(primes), '\''); };
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        auto [n, t] = base(o);
        if (t == 2) continue;
        orbit_name[o] = primed(std::to_string(n) + "_" + std::to_string(t), seen[{n, t}]++);
    }
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        auto [n, t] = base(o);
        if (t != 2) continue;
        const auto mirror = static_cast<std::size_t>(orbit_of[alc.index(conjugate(alc[orbits[o][0]]))]);
        if (base(mirror).second == 1 && base(mirror).first == n) {
            std::string s = orbit_name[mirror];
            s[s.find('_') + 1] = '2';
            orbit_name[o] = s;
        } else {
            orbit_name[o] = primed(std::to_string(n) + "_2", seen[{n, 2}]++);
        }
    }

    // fixed orbits are triplicated
    struct Vertex {
        std::size_t orbit;
        int copy;  // -1 for free orbits
    };
    std::vector<Vertex> verts;
    GraphSpec g;
    g.name = "D" + std::to_string(k);
    g.k = k;
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (orbits[o].size() == 3) {
            verts.push_back({o, -1});
            g.vertices.push_back(orbit_name[o]);
        } else {
            for (int c = 0; c < 3; ++c) {
                verts.push_back({o, c});
                g.vertices.push_back("alpha" + std::to_string(c + 1) + "_" + std::to_string(base(o).second));
            }
        }
    }
    const auto r = verts.size();
    g.adjacency = IMat::Zero(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& oi = orbits[verts[i].orbit];
        for (std::size_t j = 0; j < r; ++j) {
            const auto& oj = orbits[verts[j].orbit];
            const bool fi = verts[i].copy >= 0, fj = verts[j].copy >= 0;
            if (fi && fj) {
                if (A(oi[0], oj[0]) != 0) throw std::logic_error("orbifold: edge between fixed vertices");
                continue;
            }
            std::int64_t s = 0;
            for (auto b : oj) s += A(oi[0], b);
            if (fi) {
                // z permutes the neighbours of a fixed weight, one per copy
                if (s % 3 != 0) throw std::logic_error("orbifold: asymmetric fixed vertex");
                s /= 3;
            }
            g.adjacency(i, j) = s;
        }
    }
    g.unit_vertex = verts[0].copy < 0 && verts[0].orbit == static_cast<std::size_t>(orbit_of[0]) ? std::optional<std::size_t>(0)
                                                                                               : std::nullopt;
    return g;
}

GraphSpec conjugate_orbifold_graph(int k) {
    const GraphSpec a = astar_graph(k);
    const auto r = a.size();
    GraphSpec g;
    g.name = "D" + std::to_string(k) + "*";
    g.k = k;
    for (int c = 1; c <= 3; ++c)
        for (auto& v : a.vertices) g.vertices.push_back(v + "^" + std::to_string(c));
    g.adjacency = IMat::Zero(3 * r, 3 * r);
    // sigma_123 (x) Ad(A*)
    for (std::size_t c = 0; c < 3; ++c)
        g.adjacency.block(c * r, ((c + 1) % 3) * r, r, r) = a.adjacency;
    return g;
}

}  // namespace

GraphSpec build_series_graph(Series s, int k) {
    if (k < 1) throw std::invalid_argument("series graphs need k >= 1");
    switch (s) {
        case Series::A: return alcove_graph(k);
        case Series::Astar: return astar_graph(k);
        case Series::D: return orbifold_graph(k);
        case Series::Dstar: return conjugate_orbifold_graph(k);
    }
    throw std::invalid_argument("unknown series");
}

Report validate_graph(const GraphSpec& g, const ModularInvariant& inv, double tol) {
    Report r;
    r.subject = "validate " + g.name + " against level " + std::to_string(inv.k) + " invariant";
    if (g.k != inv.k) {
        r.expect_true("levels match", false, std::to_string(g.k) + " vs " + std::to_string(inv.k));
        return r;
    }
    const Alcove alc(g.k);
    const auto A = to_double(g.adjacency);
    const auto ev = eigenvalues(A);
    double norm = 0;
    for (auto& z : ev) norm = std::max(norm, std::abs(z));
    r.expect_close("norm", graph_norm_target(g.k), norm, tol, "1+2cos(2pi/kappa)");

    std::vector<std::complex<double>> target;
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < alc.size(); ++i) {
        const auto m = inv.M(i, i);
        trace += m;
        for (std::int64_t c = 0; c < m; ++c) target.push_back(graph_eigenvalue(alc[i].l1, alc[i].l2, alc.kappa()));
    }
    r.expect_eq<std::size_t>("vertices = tr M", static_cast<std::size_t>(trace), g.size());
    r.expect_true("eigenvalues = exponents", same_multiset(ev, target, tol));
    return r;
}

}  // namespace su3
