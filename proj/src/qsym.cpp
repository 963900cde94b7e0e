#include "su3/qsym.hpp"

#include "su3/modular.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace su3 {

SeriesRealization::SeriesRealization(Series s, int k) : series_(s), ring_(build_fusion_ring(k)) {
    if ((s == Series::D || s == Series::Dstar) && k % 3 == 0)
        throw std::invalid_argument("series realization: D and D* at k divisible by 3 are not commutative");
    const auto& alc = ring_.alcove;
    for (const auto& m : alc.weights()) {
        Weight w = m;
        switch (s) {
            case Series::A: w = conjugate(m); break;
            case Series::Astar: w = m; break;
            case Series::D: w = gannon_twist(conjugate(m), k); break;
            case Series::Dstar: w = gannon_twist(m, k); break;
        }
        right_.push_back(alc.index(w));
    }
}

IMat SeriesRealization::V(std::size_t lambda, std::size_t mu) const {
    return mul(ring_.N[lambda], ring_.N[right_[mu]]);
}

Report check_series_realization(Series s, int k, std::size_t samples, std::uint32_t seed) {
    Report r;
    r.subject = "realization of " + to_string(s) + " at level " + std::to_string(k);
    const SeriesRealization real(s, k);
    const auto& ring = real.ring();
    const auto n = ring.alcove.size();
    const auto inv = series_invariant(s, k);

    std::size_t bad = 0;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m)
            if (real.V(l, m)(0, 0) != inv.M(l, m)) ++bad;
    r.expect_eq<std::size_t>("(V_lm)_00 = M_lm mismatches", 0, bad);

    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t eq12 = 0, factor = 0, central = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t l = pick(rng), m = pick(rng), l2 = pick(rng), m2 = pick(rng);
        const IMat lhs = mul(real.V(l, m), real.V(l2, m2));
        IMat rhs = IMat::Zero(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            const auto na = ring.N[l](l2, a);
            if (na == 0) continue;
            for (std::size_t b = 0; b < n; ++b)
                if (const auto nb = ring.N[m](m2, b)) rhs += na * nb * real.V(a, b);
        }
        if (lhs != rhs) ++eq12;
        const IMat V = real.V(l, m);
        if (mul(real.V(l, 0), real.V(0, m)) != V || mul(real.V(0, m), real.V(l, 0)) != V) ++factor;
        if (mul(ring.N[l2], V) != mul(V, ring.N[l2])) ++central;
    }
    r.expect_eq<std::size_t>("double fusion failures on " + std::to_string(samples) + " quadruples", 0, eq12);
    r.expect_eq<std::size_t>("V_l0 V_0m = V_lm = V_0m V_l0 failures", 0, factor);
    r.expect_eq<std::size_t>("central action failures", 0, central);
    return r;
}

namespace {

void finish(DualAnnular& d) {
    d.d_x.clear();
    d.d_V = 0;
    d.sum_squares = 0;
    for (auto& S : d.S) {
        BigInt s = sum_entries(S);
        d.d_x.push_back(s);
        d.d_V += s;
        d.sum_squares += s * s;
    }
    d.complete = true;
}

}  // namespace

DualAnnular dual_annular_series(const GraphModule& m) {
    DualAnnular d;
    d.method = "series closed form";
    d.S = m.F;
    finish(d);
    return d;
}

DualAnnular dual_annular_words(const ToricTable& t, const GraphModule& m) {
    DualAnnular out;
    out.method = "word span";
    const std::size_t d = t.d;
    const IMat& Ad = m.graph.adjacency;
    const IMat AdT = Ad.transpose();
    const IMat O1LT = t.O1L.transpose(), O1RT = t.O1R.transpose();
    const std::vector<std::pair<const IMat*, const IMat*>> gens{
        {&t.O1L, &Ad}, {&t.O1R, &AdT}, {&O1LT, &AdT}, {&O1RT, &Ad}};

    auto row_times = [&](const IVec& c, const IMat& O) {
        IVec out(d, 0);
        for (std::size_t x = 0; x < d; ++x)
            if (c[x] != 0)
                for (std::size_t z = 0; z < d; ++z) out[z] += c[x] * O(x, z);
        return out;
    };

    ModpBasis span(d);
    std::vector<IVec> C;
    std::vector<IMat> Phi;
    IVec e0(d, 0);
    e0[0] = 1;
    std::vector<std::pair<IVec, IMat>> frontier{{e0, identity(m.graph.size())}};
    try {
        while (!frontier.empty() && span.rank() < d) {
            std::vector<std::pair<IVec, IMat>> next;
            for (auto& [c, P] : frontier) {
                if (span.rank() == d) break;
                if (!span.add(c)) continue;
                for (auto& [O, A] : gens) next.emplace_back(row_times(c, *O), mul(P, *A));
                C.push_back(std::move(c));
                Phi.push_back(std::move(P));
            }
            frontier = std::move(next);
        }
    } catch (const OverflowError& e) {
        out.why = std::string("word products overflow: ") + e.what();
        return out;
    }
    if (span.rank() < d) {
        out.why = "words span only " + std::to_string(span.rank()) + " of " + std::to_string(d) + " vertices";
        return out;
    }

    // sum_x C_jx S_x = Phi_j, one lattice solve per matrix entry
    std::vector<IVec> cols(d, IVec(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t x = 0; x < d; ++x) cols[x][j] = C[j][x];
    const LatticeSolver solver(std::move(cols));
    const auto r = m.graph.size();
    out.S.assign(d, IMat::Zero(r, r));
    IVec rhs(d);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            for (std::size_t j = 0; j < d; ++j) rhs[j] = Phi[j](a, b);
            auto s = solver.solve(rhs);
            if (!s) {
                out.S.clear();
                out.why = "dual annular matrices are not integral";
                return out;
            }
            for (std::size_t x = 0; x < d; ++x) out.S[x](a, b) = (*s)[x];
        }
    for (auto& S : out.S)
        if (!nonnegative(S)) {
            out.why = "negative dual annular coefficient";
            return out;
        }
    for (auto& [O, A] : gens)
        for (std::size_t x = 0; x < d; ++x) {
            IMat rhs_x = IMat::Zero(r, r);
            for (std::size_t z = 0; z < d; ++z)
                if ((*O)(x, z)) rhs_x += (*O)(x, z) * out.S[z];
            if (mul(out.S[x], *A) != rhs_x) {
                out.why = "anti-representation check failed at vertex " + std::to_string(x);
                return out;
            }
        }
    if (out.S[0] != identity(r)) {
        out.why = "S_0 is not the identity";
        return out;
    }
    finish(out);
    return out;
}

OcMass quantum_mass_Oc(const ToricTable& t) {
    OcMass out;
    auto v = perron_vector(to_double(t.O1L + t.O1R));
    v /= v[0];
    out.qdim.assign(v.data(), v.data() + v.size());
    for (double x : out.qdim) out.mass += x * x;
    out.norm_left = spectral_radius(to_double(t.O1L));
    return out;
}

std::vector<std::size_t> modular_subalgebra(const GraphModule& m) {
    std::vector<std::size_t> J;
    for (std::size_t b = 0; b < m.graph.size(); ++b) {
        std::set<int> exps;
        for (auto& [w, c] : induction(m, b)) exps.insert(modular_exponent(w, m.graph.k));
        if (exps.size() == 1) J.push_back(b);
    }
    return J;
}

EmbeddingCheck conformal_embedding_check(int n, int k, std::int64_t dim, std::int64_t dual_coxeter) {
    if (n <= 0 || k <= 0 || dim <= 0 || dual_coxeter <= 0)
        throw std::invalid_argument("conformal embedding: inputs must be positive");
    EmbeddingCheck e;
    e.lhs = Rational(static_cast<std::int64_t>(n) * n - 1) * k / (k + n);
    e.rhs = Rational(dim) / (1 + dual_coxeter);
    e.equal = e.lhs == e.rhs;
    return e;
}

}  // namespace su3
