#include "su3/module.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace su3 {

IMat GraphModule::essential(std::size_t a) const {
    const auto r = graph.size();
    IMat E(alcove.size(), r);
    for (std::size_t l = 0; l < alcove.size(); ++l) E.row(l) = F[l].row(a);
    return E;
}

std::size_t default_unit(const GraphSpec& g) {
    const auto v = perron_vector(to_double(g.adjacency));
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
        if (v[i] < v[best] * (1 - 1e-9)) best = i;
    return best;
}

GraphModule build_annular(const GraphSpec& g) {
    GraphModule m;
    m.graph = g;
    m.alcove = Alcove(g.k);
    m.F = su3_recurrence(m.alcove, g.adjacency);
    for (std::size_t l = 0; l < m.F.size(); ++l)
        if (!nonnegative(m.F[l]))
            throw StructuralError(g.name + " is not an A_" + std::to_string(g.k) + " module: F" + to_string(m.alcove[l]) +
                                  " has a negative entry");
    for (auto& F : m.F) {
        BigInt d = sum_entries(F);
        m.d_H += d;
        m.dim_B += d * d;
        m.d_lambda.push_back(d);
    }
    m.unit = g.unit_vertex ? *g.unit_vertex : default_unit(g);
    return m;
}

GraphModule build_annular(const GraphSpec& g, const FusionRing& ring) {
    if (ring.k != g.k) throw std::invalid_argument("build_annular: level mismatch");
    return build_annular(g);
}

Report verify_intertwiner(const GraphModule& m, const FusionRing& ring) {
    Report r;
    r.subject = "intertwiner N_lambda E_a = E_a F_lambda for " + m.graph.name;
    if (ring.k != m.graph.k) {
        r.expect_true("levels match", false);
        return r;
    }
    std::size_t bad = 0;
    std::string first;
    for (std::size_t a = 0; a < m.graph.size(); ++a) {
        const IMat E = m.essential(a);
        for (std::size_t l = 0; l < m.alcove.size(); ++l) {
            if (mul(ring.N[l], E) != mul(E, m.F[l])) {
                if (bad++ == 0) first = to_string(m.alcove[l]) + " at " + m.graph.vertices[a];
            }
        }
    }
    r.expect_true("all lambda, a", bad == 0, bad == 0 ? "exact" : std::to_string(bad) + " failures, first " + first);
    return r;
}

std::vector<std::pair<std::size_t, std::int64_t>> restriction(const GraphModule& m, const Weight& w) {
    const IMat& F = m.annular(w);
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::size_t b = 0; b < m.graph.size(); ++b)
        if (F(m.unit, b) != 0) out.emplace_back(b, F(m.unit, b));
    return out;
}

std::vector<std::pair<Weight, std::int64_t>> induction(const GraphModule& m, std::size_t b) {
    std::vector<std::pair<Weight, std::int64_t>> out;
    for (std::size_t l = 0; l < m.alcove.size(); ++l)
        if (m.F[l](m.unit, b) != 0) out.emplace_back(m.alcove[l], m.F[l](m.unit, b));
    return out;
}

TrialityConjugation assign_triality_conjugation(const GraphModule& m) {
    const auto r = m.graph.size();
    TrialityConjugation tc;
    std::vector<std::vector<std::pair<Weight, std::int64_t>>> ind(r), conj_ind(r);
    for (std::size_t b = 0; b < r; ++b) {
        ind[b] = induction(m, b);
        if (ind[b].empty()) throw std::runtime_error("vertex " + m.graph.vertices[b] + " has an empty induction list");
        const int t = triality(ind[b][0].first);
        for (auto& [w, c] : ind[b])
            if (triality(w) != t) throw std::runtime_error("vertex " + m.graph.vertices[b] + " mixes trialities");
        tc.triality.push_back(t);
        for (auto& [w, c] : ind[b]) conj_ind[b].emplace_back(conjugate(w), c);
        std::sort(ind[b].begin(), ind[b].end());
        std::sort(conj_ind[b].begin(), conj_ind[b].end());
    }
    // Candidates share conjugate induction lists; among them pick an involution
    // with Ad(b*, a*) = Ad(a, b), backtracking when several vertices look alike.
    std::vector<std::vector<std::size_t>> cand(r);
    for (std::size_t b = 0; b < r; ++b) {
        for (std::size_t c = 0; c < r; ++c)
            if (ind[c] == conj_ind[b]) cand[b].push_back(c);
        if (cand[b].empty()) throw std::runtime_error("vertex " + m.graph.vertices[b] + " has no conjugate partner");
    }
    const IMat& A = m.graph.adjacency;
    std::vector<std::size_t>& sigma = tc.conjugate;
    sigma.assign(r, r);
    auto consistent = [&](std::size_t b) {
        for (std::size_t a = 0; a < r; ++a) {
            if (sigma[a] == r) continue;
            if (A(sigma[b], sigma[a]) != A(a, b) || A(sigma[a], sigma[b]) != A(b, a)) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> place = [&](std::size_t b) -> bool {
        if (b == r) return true;
        if (sigma[b] != r) return place(b + 1);
        for (auto c : cand[b]) {
            if (sigma[c] != r) continue;
            sigma[b] = c;
            sigma[c] = b;
            if (consistent(b) && consistent(c) && place(b + 1)) return true;
            sigma[b] = sigma[c] = r;
        }
        return false;
    };
    if (!place(0)) throw std::runtime_error("no conjugation of " + m.graph.name + " matches the induction lists and the edges");
    return tc;
}

bool triality_graded(const GraphModule& m, const TrialityConjugation& tc) {
    const IMat& A = m.graph.adjacency;
    for (Eigen::Index a = 0; a < A.rows(); ++a)
        for (Eigen::Index b = 0; b < A.cols(); ++b)
            if (A(a, b) != 0 && tc.triality[b] != (tc.triality[a] + 1) % 3) return false;
    return true;
}

bool conjugation_compatible(const GraphModule& m, const TrialityConjugation& tc) {
    for (std::size_t l = 0; l < m.alcove.size(); ++l) {
        const IMat& F = m.F[l];
        const IMat& Fc = m.annular(conjugate(m.alcove[l]));
        for (Eigen::Index a = 0; a < F.rows(); ++a)
            for (Eigen::Index b = 0; b < F.cols(); ++b)
                if (Fc(tc.conjugate[a], tc.conjugate[b]) != F(a, b)) return false;
    }
    return true;
}

Report verify_self_fusion(const GraphModule& m) {
    Report r;
    r.subject = "self-fusion of " + m.graph.name;
    const auto& G = m.graph.self_fusion;
    if (G.empty()) {
        r.note("self-fusion", "not applicable");
        return r;
    }
    const auto n = m.graph.size();
    r.expect_true("G_unit = I", G[m.unit] == identity(n));
    bool nonneg = true, commute = true, essential = true;
    const IMat E0 = m.essential(m.unit);
    for (std::size_t a = 0; a < n; ++a) {
        nonneg = nonneg && nonnegative(G[a]);
        for (auto& F : m.F) commute = commute && mul(G[a], F) == mul(F, G[a]);
        essential = essential && m.essential(a) == mul(E0, G[a]);
    }
    r.expect_true("non-negative structure constants", nonneg);
    r.expect_true("G_a F_lambda = F_lambda G_a", commute);
    r.expect_true("E_a = E_0 G_a", essential);
    for (std::size_t b = 0; b < n; ++b) {
        if (m.graph.adjacency(m.unit, b) == 1 && m.graph.adjacency.row(m.unit).sum() == 1)
            r.expect_true("G_" + m.graph.vertices[b] + " = Ad", G[b] == m.graph.adjacency);
    }
    return r;
}

QuantumDims quantum_dims_graph(const GraphSpec& g) {
    QuantumDims q;
    auto v = perron_vector(to_double(g.adjacency));
    q.normalized_at = g.unit_vertex ? *g.unit_vertex : default_unit(g);
    v /= v[q.normalized_at];
    q.qdim.assign(v.data(), v.data() + v.size());
    for (double x : q.qdim) q.mass += x * x;
    return q;
}

std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> horizontal_paths(const GraphModule& m, const Weight& w) {
    const IMat& F = m.annular(w);
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> out;
    for (Eigen::Index a = 0; a < F.rows(); ++a)
        for (Eigen::Index b = 0; b < F.cols(); ++b)
            if (F(a, b) != 0) out.emplace_back(a, b, F(a, b));
    return out;
}

}  // namespace su3
