#include "su3/fusion.hpp"
#include "su3/modular.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace su3;

namespace {

// Weight multiplicities of an SU(3) irrep from Gelfand-Tsetlin patterns.
std::map<Weight, int> weights_of(const Weight& w) {
    std::map<Weight, int> out;
    const int m13 = w.l1 + w.l2, m23 = w.l2, m33 = 0;
    for (int m12 = m23; m12 <= m13; ++m12)
        for (int m22 = m33; m22 <= m23; ++m22)
            for (int m11 = m22; m11 <= m12; ++m11) {
                // weight in Dynkin labels: (2 m11 - m12 - m22, ...) via row sums
                const int r1 = m11, r2 = m12 + m22, r3 = m13 + m23 + m33;
                const int a1 = 2 * r1 - r2;
                const int a2 = 2 * r2 - r1 - r3;
                out[{a1, a2}] += 1;
            }
    return out;
}

// Level-k fusion by Kac-Walton: add weights of mu to lambda+rho, reflect into
// the shifted alcove with the affine Weyl group, keep signs.
std::map<Weight, int> kac_walton(const Weight& lam, const Weight& mu, int k) {
    std::map<Weight, int> out;
    const int kappa = k + 3;
    for (auto& [w, mult] : weights_of(mu)) {
        int a = lam.l1 + 1 + w.l1, b = lam.l2 + 1 + w.l2;
        int sign = 1;
        bool dead = false;
        for (int guard = 0; guard < 100; ++guard) {
            if (a == 0 || b == 0 || a + b == kappa) {
                dead = true;
                break;
            }
            if (a < 0) {
                b += a;
                a = -a;
                sign = -sign;
            } else if (b < 0) {
                a += b;
                b = -b;
                sign = -sign;
            } else if (a + b > kappa) {
                const int na = kappa - b, nb = kappa - a;
                a = na;
                b = nb;
                sign = -sign;
            } else {
                break;
            }
        }
        if (!dead) out[{a - 1, b - 1}] += sign * mult;
    }
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    return out;
}

}  // namespace

TEST_CASE("level one and unit") {
    const auto r1 = build_fusion_ring(1);
    IMat cyc = IMat::Zero(3, 3);
    cyc(0, 1) = cyc(1, 2) = cyc(2, 0) = 1;
    CHECK(r1({1, 0}) == cyc);
    for (int k = 0; k <= 10; ++k) CHECK(build_fusion_ring(k).N[0] == identity(Alcove(k).size()));
}

TEST_CASE("ring structure") {
    for (int k = 0; k <= 6; ++k) {
        const auto r = build_fusion_ring(k);
        const auto& a = r.alcove;
        const auto n = a.size();
        for (std::size_t l = 0; l < n; ++l) {
            CHECK(nonnegative(r.N[l]));
            CHECK(r(conjugate(a[l])) == IMat(r.N[l].transpose()));
            for (std::size_t m = 0; m < n; ++m) {
                CHECK(mul(r.N[l], r.N[m]) == mul(r.N[m], r.N[l]));
                IMat rhs = IMat::Zero(n, n);
                for (std::size_t v = 0; v < n; ++v) rhs += r.N[l](m, v) * r.N[v];
                CHECK(mul(r.N[l], r.N[m]) == rhs);
                for (std::size_t v = 0; v < n; ++v) {
                    CHECK(r.coeff(conjugate(a[l]), conjugate(a[m]), conjugate(a[v])) == r.N[l](m, v));
                    if (r.N[l](m, v) != 0) CHECK((triality(a[l]) + triality(a[m])) % 3 == triality(a[v]));
                }
            }
        }
        if (k > 0) CHECK(spectral_radius(to_double(r({1, 0}))) == doctest::Approx(1 + 2 * std::cos(2 * M_PI / (k + 3))).epsilon(1e-9));
    }
}

TEST_CASE("fusion products") {
    const auto r2 = build_fusion_ring(2);
    CHECK(mul(r2({1, 0}), r2({1, 0})) == IMat(r2({2, 0}) + r2({0, 1})));
    const Alcove a4(4);
    const auto r4 = build_fusion_ring(4);
    for (auto& b : a4.weights()) {
        const auto f = fuse(r4, {0, 0}, b);
        REQUIRE(f.size() == 1);
        CHECK(f[0] == std::pair{b, std::int64_t{1}});
    }
    for (int k = 2; k <= 5; ++k) {
        auto f = fuse(build_fusion_ring(k), {1, 0}, {0, 1});
        std::sort(f.begin(), f.end());
        CHECK(f == std::vector<std::pair<Weight, std::int64_t>>{{{0, 0}, 1}, {{1, 1}, 1}});
    }
    CHECK(fuse(build_fusion_ring(1), {1, 0}, {1, 0}) == std::vector<std::pair<Weight, std::int64_t>>{{{0, 1}, 1}});
    const auto r = build_fusion_ring(3);
    for (auto& a : r.alcove.weights())
        for (auto& b : r.alcove.weights()) CHECK(fuse(r, a, b) == fuse(r, b, a));
}

TEST_CASE("recurrence agrees with Kac-Walton") {
    for (int k = 1; k <= 6; ++k) {
        const auto r = build_fusion_ring(k);
        for (auto& l : r.alcove.weights())
            for (auto& m : r.alcove.weights()) {
                const auto kw = kac_walton(l, m, k);
                for (auto& v : r.alcove.weights()) {
                    auto it = kw.find(v);
                    CHECK(r.coeff(l, m, v) == (it == kw.end() ? 0 : it->second));
                }
            }
    }
}

TEST_CASE("recurrence agrees with Verlinde") {
    for (int k = 1; k <= 8; ++k) {
        const auto r = build_fusion_ring(k);
        const auto v = verlinde_fusion(build_S(k));
        CHECK(v.max_residual < 1e-6);
        for (std::size_t l = 0; l < r.N.size(); ++l) CHECK(r.N[l] == v.N[l]);
    }
}

TEST_CASE("horizontal dimension of A_k") {
    CHECK(horizontal_dimension_A(0).direct == 1);
    CHECK(horizontal_dimension_A(1).direct == 9);
    CHECK(horizontal_dimension_A(2).direct == 45);
    for (int k = 0; k <= 10; ++k) {
        const auto h = horizontal_dimension_A(k);
        CHECK(h.direct == h.closed_form);
    }
}
