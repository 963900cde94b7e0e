#include "su3/goldens.hpp"
#include "su3/graph.hpp"
#include "su3/invariant.hpp"

#include <doctest.h>

#include <random>

using namespace su3;

TEST_CASE("block invariants") {
    const auto d3 = load_invariant(data_file("z_d3.json"));
    const Alcove a(3);
    for (auto& x : {Weight{0, 0}, Weight{3, 0}, Weight{0, 3}})
        for (auto& y : {Weight{0, 0}, Weight{3, 0}, Weight{0, 3}}) CHECK(d3.M(a.index(x), a.index(y)) == 1);
    CHECK(d3.M(a.index({1, 1}), a.index({1, 1})) == 3);
    CHECK(d3.M.sum() == 12);
    CHECK(d3.M == series_invariant(Series::D, 3).M);
    CHECK(ocneanu_dimension(d3.M).d_O == 18);

    const auto e5 = load_invariant(data_file("z_e5.json"));
    CHECK(e5.blocks.size() == 6);
    CHECK(e5.M.trace() == 12);
    CHECK_THROWS_AS(invariant_from_blocks(3, {}), std::invalid_argument);
    CHECK_THROWS(invariant_from_blocks(3, {{1, {{0, 0}}, {{4, 0}}}}));
    CHECK_THROWS_AS(invariant_from_blocks(3, {{1, {{0, 0}}, {{0, 0}}}}), std::invalid_argument);
}

TEST_CASE("series invariants") {
    for (int k = 1; k <= 12; ++k) {
        const auto n = Alcove(k).size();
        CHECK(series_invariant(Series::A, k).M == identity(n));
        for (auto s : {Series::A, Series::Astar, Series::D, Series::Dstar}) {
            const auto inv = series_invariant(s, k);
            CHECK(verify_invariant(inv, build_modular(k)).passed());
            if (k % 3 != 0 || s == Series::A || s == Series::Astar) {
                // permutation matrix
                for (Eigen::Index i = 0; i < inv.M.rows(); ++i) {
                    CHECK(inv.M.row(i).sum() == 1);
                    CHECK(inv.M.col(i).sum() == 1);
                }
            }
        }
    }
    const auto d4 = series_invariant(Series::D, 4);
    const Alcove a(4);
    for (auto& w : a.weights()) CHECK(d4.M(a.index(gannon_twist(w, 4)), a.index(w)) == 1);
}

TEST_CASE("packaged invariants") {
    for (auto& e : std::filesystem::directory_iterator(data_dir()))
        if (e.path().filename().string().starts_with("z_")) {
            const auto inv = load_invariant(e.path());
            CHECK_MESSAGE(verify_invariant(inv, build_modular(inv.k), 1e-8).passed(), e.path().filename().string());
        }
    const auto e9 = ocneanu_dimension(load_invariant(data_file("z_e9.json")).M);
    CHECK(e9.d_O == 72);
    CHECK(e9.block_dims.at(1) == 36);
    CHECK(e9.block_dims.at(2) == 9);
    CHECK(ocneanu_dimension(load_invariant(data_file("z_e21.json")).M).d_O == 288);
    CHECK(ocneanu_dimension(load_invariant(data_file("z_d9t.json")).M).d_O == 55);
    CHECK(ocneanu_dimension(load_invariant(data_file("z_d9ts.json")).M).d_O == 55);
}

TEST_CASE("negative controls") {
    const auto rep = build_modular(3);
    std::mt19937 rng(7);
    int rejected = 0;
    for (int trial = 0; trial < 20; ++trial) {
        ModularInvariant inv;
        inv.k = 3;
        inv.M = IMat::Zero(10, 10);
        for (int i = 0; i < 10; ++i)
            for (int j = i; j < 10; ++j) inv.M(i, j) = inv.M(j, i) = static_cast<std::int64_t>(rng() % 2);
        inv.M(0, 0) = 1;
        if (!verify_invariant(inv, rep).passed()) ++rejected;
    }
    CHECK(rejected == 20);
    CHECK_THROWS_AS(parse_series("E"), std::invalid_argument);
    CHECK_THROWS(parse_invariant(nlohmann::json::parse(R"({"blocks": []})")));
}
