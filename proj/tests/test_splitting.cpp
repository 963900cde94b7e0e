#include "su3/goldens.hpp"
#include "su3/graph.hpp"
#include "su3/module.hpp"
#include "su3/splitting.hpp"

#include <doctest.h>

using namespace su3;

namespace {

// true when `a` and `b` are conjugate by a permutation matrix
bool permutation_similar(const IMat& a, const IMat& b, const std::vector<std::size_t>& p) {
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(p[i], p[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("A_2 splitting") {
    const auto ring = build_fusion_ring(2);
    const auto s = solve_modular_splitting(ring, identity(6));
    CHECK(s.certified);
    CHECK(s.rank_exact);
    CHECK(s.W_right.size() == 6);
    CHECK(s.d_O == 6);
    CHECK(splitting_residual(ring, s) == 0);
    const auto t = solve_generalized_splitting(ring, s);
    CHECK(verify_toric_table(ring, s, t).passed());
    // O_1L and O_1R are the fundamental fusion matrices in the basis of W_z0 = N_z
    std::vector<std::size_t> p(6);
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t l = 0; l < 6; ++l)
            if (s.W_right[x] == ring.N[l]) p[x] = l;
    const IMat N10 = ring({1, 0}), N01 = ring({0, 1});
    CHECK((permutation_similar(t.O1L, N10, p) || permutation_similar(t.O1L, N01, p)));
    CHECK((permutation_similar(t.O1R, N10, p) || permutation_similar(t.O1R, N01, p)));
    CHECK(t.O1L != t.O1R);
}

TEST_CASE("E5 splitting") {
    const auto ring = build_fusion_ring(5);
    const auto inv = load_invariant(data_file("z_e5.json"));
    const auto s = solve_modular_splitting(ring, inv.M);
    CHECK(s.W_right.size() == 24);
    CHECK(s.rank_K == golden_case("e5").at("rank_K").get<std::size_t>());
    CHECK(s.rank_exact);
    CHECK(s.certified);
    CHECK(s.W_right[0] == inv.M);
    CHECK(splitting_residual(ring, s) == 0);
    for (auto& W : s.W_right) CHECK(nonnegative(W));

    const auto t = solve_generalized_splitting(ring, s);
    CHECK(t.d == 24);
    CHECK(verify_toric_table(ring, s, t).passed());
    const auto f = dual_bimodule_falsification(t, s);
    // W_xy = W_x0 W_0y already fails at the origin, where it would say M = M M
    CHECK(f.pairs == 24 * 24);
    CHECK_FALSE(f.origin_holds);
    CHECK(f.violations > 0);

    const auto g = load_graph(data_file("e5.json"));
    const auto m = build_annular(g, ring);
    const IMat E0 = m.essential(m.unit);
    const IMat Mrel = relative_invariant(inv.M, E0);
    CHECK(Mrel.rows() == 12);
    CHECK(Mrel.cols() == 12);
    CHECK(nonnegative(Mrel));
    CHECK(mul(mul(E0, Mrel), IMat(E0.transpose())) == inv.M);

    IMat bad = E0;
    bad(0, 0) += 1;
    CHECK_THROWS_AS(relative_invariant(inv.M, bad), std::runtime_error);
}

TEST_CASE("partial table matches the full one") {
    const auto ring = build_fusion_ring(4);
    const auto s = solve_modular_splitting(ring, series_invariant(Series::D, 4).M);
    const auto full = solve_generalized_splitting(ring, s, true);
    const auto part = solve_generalized_splitting(ring, s, false);
    CHECK(full.O1L == part.O1L);
    CHECK(full.O1R == part.O1R);
}

TEST_CASE("A_1 falsification") {
    const auto ring = build_fusion_ring(1);
    const auto s = solve_modular_splitting(ring, identity(3));
    const auto t = solve_generalized_splitting(ring, s);
    const auto f = dual_bimodule_falsification(t, s);
    CHECK(f.pairs == 9);
    CHECK(f.origin_holds);
    CHECK(f.violations == 0);
}

TEST_CASE("E9 toric matrices coincide") {
    const auto ring = build_fusion_ring(9);
    const auto inv = load_invariant(data_file("z_e9.json"));
    const auto s = solve_modular_splitting(ring, inv.M);
    CHECK(s.d_O == 72);
    CHECK(s.rank_K == 45);
    CHECK(s.rank_exact);
    CHECK(s.W_right.size() < static_cast<std::size_t>(s.d_O));
}

TEST_CASE("fused modular matrix") {
    const auto ring = build_fusion_ring(3);
    const auto M = load_invariant(data_file("z_d3.json")).M;
    const FusedModularMatrix K(ring, M);
    CHECK(K.rows() == 100);
    CHECK(K.block(0, 0) == M);
    CHECK(K.row(2, 3) == flatten(mul(mul(ring.N[2], M), IMat(ring.N[3].transpose()))));
}
