#include "su3/goldens.hpp"
#include "su3/module.hpp"

#include <doctest.h>

#include <set>

using namespace su3;

namespace {

std::string vname(const GraphSpec& g, std::size_t i) { return g.vertices[i]; }

}  // namespace

TEST_CASE("A_k is its own module") {
    for (int k = 1; k <= 6; ++k) {
        const auto ring = build_fusion_ring(k);
        const auto m = build_annular(build_series_graph(Series::A, k), ring);
        for (std::size_t l = 0; l < ring.N.size(); ++l) CHECK(m.F[l] == ring.N[l]);
        CHECK(verify_intertwiner(m, ring).passed());
        CHECK(m.unit == 0);
    }
    for (auto& [k, v] : goldens().at("series").at("d_H_A").items()) {
        CHECK(horizontal_dimension_A(std::stoi(k)).direct == v.get<std::int64_t>());
        if (k != "0") CHECK(build_annular(build_series_graph(Series::A, std::stoi(k))).d_H == v.get<std::int64_t>());
    }
}

TEST_CASE("E5 nimrep") {
    const auto& c = golden_case("e5");
    const auto g = load_graph(data_file("e5.json"));
    const auto m = build_annular(g);
    CHECK(vname(g, m.unit) == "1_0");
    CHECK(m.d_H == c.at("d_H").get<std::int64_t>());
    CHECK(m.dim_B == c.at("dim_B").get<std::int64_t>());
    CHECK(verify_intertwiner(m, build_fusion_ring(5)).passed());
    CHECK(verify_self_fusion(m).passed());

    const auto tc = assign_triality_conjugation(m);
    CHECK(conjugation_compatible(m, tc));
    CHECK(triality_graded(m, tc));
    for (auto& p : c.at("conjugate_pairs")) {
        const auto a = g.index_of(p[0]), b = g.index_of(p[1]);
        CHECK(tc.conjugate[a] == b);
        CHECK(tc.conjugate[b] == a);
    }
    // every vertex appears in the restriction of some weight, and induction inverts it
    for (std::size_t b = 0; b < g.size(); ++b) {
        const auto ind = induction(m, b);
        REQUIRE_FALSE(ind.empty());
        for (auto& [w, mult] : ind) {
            bool found = false;
            for (auto& [v, n] : restriction(m, w))
                if (v == b) found = n == mult;
            CHECK(found);
        }
    }
    // horizontal paths of type (1,0) are the edges of the graph
    std::int64_t total = 0;
    for (auto& [a, b, n] : horizontal_paths(m, {1, 0})) {
        CHECK(g.adjacency(a, b) == n);
        total += n;
    }
    CHECK(total == g.adjacency.sum());
}

TEST_CASE("E21 triality") {
    const auto g = load_graph(data_file("e21.json"));
    const auto m = build_annular(g);
    const auto& c = golden_case("e21");
    CHECK(m.d_H == c.at("d_H").get<std::int64_t>());
    CHECK(m.dim_B == c.at("dim_B").get<std::int64_t>());
    const auto tc = assign_triality_conjugation(m);
    for (std::size_t b = 0; b < g.size(); ++b) CHECK(tc.triality[b] == std::stoi(g.vertices[b]) % 3);
}

TEST_CASE("golden dimensions") {
    for (auto& c : goldens().at("cases")) {
        if (!c.contains("graph") || !c.contains("dim_B")) continue;
        const auto m = build_annular(load_graph(data_file(c.at("graph"))));
        CHECK_MESSAGE(m.dim_B == c.at("dim_B").get<std::int64_t>(), c.at("id").get<std::string>());
        if (c.contains("d_H")) CHECK(m.d_H == c.at("d_H").get<std::int64_t>());
        if (c.contains("mass_graph"))
            CHECK(quantum_dims_graph(m.graph).mass == doctest::Approx(c.at("mass_graph").at("value").get<double>()).epsilon(1e-10));
    }
}

TEST_CASE("orbifold dimensions") {
    for (int k : {4, 5, 7}) {
        const auto a = build_annular(build_series_graph(Series::A, k));
        const auto d = build_annular(build_series_graph(Series::D, k));
        for (std::size_t l = 0; l < a.d_lambda.size(); ++l) CHECK(3 * d.d_lambda[l] == a.d_lambda[l]);
    }
    for (int k : {4, 5}) {
        const auto a = build_annular(build_series_graph(Series::Astar, k));
        const auto d = build_annular(build_series_graph(Series::Dstar, k));
        for (std::size_t l = 0; l < a.d_lambda.size(); ++l) CHECK(d.d_lambda[l] == 3 * a.d_lambda[l]);
    }
}

TEST_CASE("corrupted graphs") {
    auto g = load_graph(data_file("e5.json"));
    g.adjacency(0, 1) += 1;
    bool rejected = false;
    try {
        const auto m = build_annular(g);
        rejected = !verify_intertwiner(m, build_fusion_ring(5)).passed();
    } catch (const StructuralError&) {
        rejected = true;
    }
    CHECK(rejected);

    auto t = load_graph(data_file("e5.json"));
    t.self_fusion.at(1)(0, 0) += 1;
    CHECK_FALSE(verify_self_fusion(build_annular(t)).passed());
}

TEST_CASE("annular matrices do not depend on evaluation order") {
    const auto g = load_graph(data_file("e9.json"));
    const auto ring = build_fusion_ring(9);
    const auto m = build_annular(g, ring);
    // F_lambda F_mu = sum_nu N_lambda,mu^nu F_nu, checked in both orders
    const auto& alc = ring.alcove;
    for (std::size_t l = 0; l < alc.size(); l += 5)
        for (std::size_t u = 0; u < alc.size(); u += 7) {
            IMat rhs = IMat::Zero(g.size(), g.size());
            for (std::size_t v = 0; v < alc.size(); ++v)
                if (ring.N[l](u, v)) rhs += ring.N[l](u, v) * m.F[v];
            CHECK(mul(m.F[l], m.F[u]) == rhs);
            CHECK(mul(m.F[u], m.F[l]) == rhs);
        }
}

TEST_CASE("quantum dimensions") {
    const auto q = quantum_dims_graph(build_series_graph(Series::A, 5));
    CHECK(q.mass == doctest::Approx(quantum_mass_alcove(5)).epsilon(1e-10));
    const auto e5 = load_graph(data_file("e5.json"));
    CHECK(default_unit(e5) == e5.index_of("1_0"));
}
