#include "su3/alcove.hpp"
#include "su3/goldens.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace su3;

TEST_CASE("alcove size and order") {
    CHECK(Alcove(0).size() == 1);
    CHECK(Alcove(0)[0] == Weight{0, 0});
    const Alcove a2(2);
    REQUIRE(a2.size() == 6);
    const std::vector<Weight> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(a2.weights() == expected);
    CHECK(Alcove(5).size() == 21);
    for (int k = 0; k <= 30; ++k) {
        const Alcove a(k);
        std::size_t direct = 0;
        for (int l1 = 0; l1 <= k; ++l1)
            for (int l2 = 0; l1 + l2 <= k; ++l2) ++direct;
        CHECK(a.size() == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
        CHECK(a.size() == direct);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.index(a[i]) == i);
    }
    CHECK_THROWS_AS(a2.index({2, 1}), std::out_of_range);
}

TEST_CASE("triality and conjugation") {
    CHECK(triality({0, 0}) == 0);
    CHECK(triality({1, 0}) == 1);
    CHECK(triality({2, 1}) == 1);
    CHECK(conjugate({1, 0}) == Weight{0, 1});
    CHECK(conjugate({1, 1}) == Weight{1, 1});
    for (int k = 0; k <= 6; ++k)
        for (const Alcove a(k); auto& w : a.weights()) {
            CHECK(conjugate(conjugate(w)) == w);
            CHECK(triality(conjugate(w)) == (3 - triality(w)) % 3);
            if (triality(w) == 0) CHECK(triality(conjugate(w)) == 0);
        }
}

TEST_CASE("z action and Gannon twist") {
    CHECK(z_rotate({0, 0}, 3) == Weight{3, 0});
    CHECK(z_rotate({1, 1}, 3) == Weight{1, 1});
    CHECK_THROWS_AS(z_rotate({3, 1}, 3), std::out_of_range);
    for (int k = 0; k <= 12; ++k) {
        const Alcove a(k);
        std::set<Weight> image;
        for (auto& w : a.weights()) {
            const Weight z1 = z_rotate(w, k);
            CHECK(a.contains(z1));
            CHECK(z_rotate(z_rotate(z1, k), k) == w);
            const bool fixed = z1 == w;
            CHECK(fixed == (k % 3 == 0 && w == Weight{k / 3, k / 3}));
            if (triality(w) == 0) CHECK(gannon_twist(w, k) == w);
            if (k % 3 == 0) CHECK(gannon_twist(w, k) == w);
            image.insert(gannon_twist(w, k));
        }
        CHECK(image.size() == a.size());
    }
    CHECK(gannon_twist({1, 0}, 4) == Weight{3, 1});
}

TEST_CASE("quantum dimensions and masses") {
    for (int kappa = 3; kappa <= 15; ++kappa) CHECK(quantum_dimension({0, 0}, kappa) == doctest::Approx(1.0).epsilon(1e-12));
    for (int kappa = 4; kappa <= 15; ++kappa)
        CHECK(quantum_dimension({1, 0}, kappa) == doctest::Approx(1 + 2 * std::cos(2 * M_PI / kappa)).epsilon(1e-12));
    // [2][2][4]/[2] at q = exp(i pi/6): [2] = [4] = sqrt3
    CHECK(quantum_dimension({1, 1}, 6) == doctest::Approx(3.0).epsilon(1e-12));
    for (int k = 0; k <= 8; ++k)
        for (const Alcove a(k); auto& w : a.weights()) {
            CHECK(quantum_dimension(w, k + 3) > 0);
            CHECK(std::abs(quantum_dimension(w, k + 3) - quantum_dimension(conjugate(w), k + 3)) < 1e-12);
        }
    CHECK(quantum_mass_alcove(0) == doctest::Approx(1.0));
    CHECK(quantum_mass_alcove(5) == doctest::Approx(48 * (3 + 2 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(quantum_mass_alcove(9) == doctest::Approx(432 * (7 + 4 * std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("mass goldens") {
    // The level 5 entry is printed as 48(3+sqrt2); the sum over the alcove is 48(3+2sqrt2).
    for (auto& g : goldens().at("mass_alcove")) {
        const int k = g.at("k").get<int>();
        const double v = g.at("value").get<double>();
        if (k == 5)
            CHECK(std::abs(quantum_mass_alcove(k) - v) / v > 0.2);
        else
            CHECK(quantum_mass_alcove(k) == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("graph eigenvalues") {
    CHECK(graph_eigenvalue(0, 0, 8).real() == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(graph_eigenvalue(0, 0, 8).imag()) < 1e-12);
    CHECK(graph_eigenvalue(0, 0, 12).real() == doctest::Approx(1 + std::sqrt(3.0)).epsilon(1e-12));
    for (int k = 1; k <= 8; ++k) {
        const Alcove a(k);
        const double top = std::abs(graph_eigenvalue(0, 0, a.kappa()));
        for (auto& w : a.weights()) CHECK(std::abs(graph_eigenvalue(w.l1, w.l2, a.kappa())) <= top + 1e-12);
    }
}
