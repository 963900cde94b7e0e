#include "su3/goldens.hpp"
#include "su3/graph.hpp"
#include "su3/qsym.hpp"

#include <doctest.h>

using namespace su3;

TEST_CASE("series realizations") {
    for (int k = 1; k <= 7; ++k)
        for (auto s : {Series::A, Series::Astar, Series::D, Series::Dstar}) {
            if ((s == Series::D || s == Series::Dstar) && k % 3 == 0) {
                CHECK_THROWS_AS(SeriesRealization(s, k), std::invalid_argument);
                continue;
            }
            CHECK_MESSAGE(check_series_realization(s, k, 60).passed(), to_string(s), k);
        }
}

TEST_CASE("series dual annular") {
    for (int k = 1; k <= 5; ++k) {
        const auto m = build_annular(build_series_graph(Series::A, k));
        const auto d = dual_annular_series(m);
        CHECK(d.complete);
        CHECK(d.d_V == m.d_H);
        CHECK(d.sum_squares == m.dim_B);
    }
}

TEST_CASE("E5 quantum symmetries") {
    const auto ring = build_fusion_ring(5);
    const auto inv = load_invariant(data_file("z_e5.json"));
    const auto m = build_annular(load_graph(data_file("e5.json")), ring);
    const auto s = solve_modular_splitting(ring, inv.M);
    const auto t = solve_generalized_splitting(ring, s);
    const auto d = dual_annular_words(t, m);
    REQUIRE_MESSAGE(d.complete, d.why);
    CHECK(d.d_V == golden_case("e5").at("d_V").get<std::int64_t>());
    CHECK(d.sum_squares == m.dim_B);
    CHECK(d.S[0] == identity(m.graph.size()));

    const auto oc = quantum_mass_Oc(t);
    CHECK(oc.qdim[0] == doctest::Approx(1.0));
    CHECK(oc.norm_left == doctest::Approx(graph_norm_target(5)).epsilon(1e-10));
    CHECK(oc.mass == doctest::Approx(quantum_mass_alcove(5)).epsilon(1e-10));
    CHECK(oc.mass == doctest::Approx(48 * (3 + 2 * std::sqrt(2.0))).epsilon(1e-10));
}

TEST_CASE("word span on A_k agrees with the closed form") {
    for (int k = 1; k <= 3; ++k) {
        const auto ring = build_fusion_ring(k);
        const auto m = build_annular(build_series_graph(Series::A, k), ring);
        const auto s = solve_modular_splitting(ring, identity(ring.alcove.size()));
        const auto t = solve_generalized_splitting(ring, s);
        const auto w = dual_annular_words(t, m);
        REQUIRE_MESSAGE(w.complete, w.why);
        CHECK(w.d_V == m.d_H);
        CHECK(w.sum_squares == m.dim_B);
    }
}

TEST_CASE("modular subalgebras") {
    for (const char* id : {"e5", "e9", "e21"}) {
        const auto& c = golden_case(id);
        const auto m = build_annular(load_graph(data_file(c.at("graph"))));
        std::vector<std::string> J;
        for (auto b : modular_subalgebra(m)) J.push_back(m.graph.vertices[b]);
        CHECK_MESSAGE(J == c.at("J").get<std::vector<std::string>>(), id);
    }
    const auto d9 = build_annular(build_series_graph(Series::D, 9));
    std::vector<std::string> J;
    for (auto b : modular_subalgebra(d9)) J.push_back(d9.graph.vertices[b]);
    CHECK(J == goldens().at("series").at("D9_J").get<std::vector<std::string>>());
}

TEST_CASE("conformal embeddings") {
    for (auto& e : goldens().at("embeddings")) {
        const auto r = conformal_embedding_check(e.at("n"), e.at("k"), e.at("dim"), e.at("dual_coxeter"));
        CHECK_MESSAGE(r.equal, e.at("algebra").get<std::string>());
        CHECK(r.lhs.str() == e.at("c").get<std::string>());
    }
    CHECK_FALSE(conformal_embedding_check(3, 4, 35, 6).equal);
    CHECK_FALSE(conformal_embedding_check(3, 9, 35, 6).equal);
    CHECK_THROWS_AS(conformal_embedding_check(3, 0, 35, 6), std::invalid_argument);
}
