#include "su3/splitting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace su3 {

FusedModularMatrix::FusedModularMatrix(const FusionRing& ring, const IMat& M)
    : ring_(&ring), M_(M), n_(ring.alcove.size()) {
    if (static_cast<std::size_t>(M.rows()) != n_ || M.rows() != M.cols())
        throw std::invalid_argument("fused modular matrix: M has the wrong size");
}

IMat FusedModularMatrix::block(std::size_t lambda, std::size_t mu) const {
    return mul_transposed(mul(ring_->N[lambda], M_), ring_->N[mu]);
}

IVec FusedModularMatrix::row(std::size_t lambda, std::size_t mu) const { return flatten(block(lambda, mu)); }

namespace {

bool dominates(const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t total(const IVec& a) { return std::accumulate(a.begin(), a.end(), std::int64_t{0}); }

// Bounded depth-first search for the non-negative combination of the pool
// leaving the smallest residual.
class Decomposer {
public:
    Decomposer(const std::vector<IVec>& pool, std::size_t budget) : pool_(pool), budget_(budget) {
        order_.resize(pool.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return total(pool[a]) > total(pool[b]); });
        for (auto& p : pool) {
            std::vector<std::size_t> nz;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p[j] != 0) nz.push_back(j);
            support_.push_back(std::move(nz));
            sums_.push_back(total(p));
        }
    }

    struct Result {
        IVec residual;
        IVec coef;
        bool exhausted = false;
    };

    Result run(const IVec& target) {
        nodes_ = 0;
        best_sum_ = -1;
        stack_.assign(order_.size() + 1, IVec{});
        stack_[0] = target;
        coef_.assign(pool_.size(), 0);
        rec(0, total(target));
        return {best_res_, best_coef_, nodes_ >= budget_};
    }

    std::size_t nodes() const { return nodes_; }

private:
    const std::vector<IVec>& pool_;
    std::size_t budget_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> support_;
    std::vector<std::int64_t> sums_;
    std::vector<IVec> stack_;
    IVec coef_, best_res_, best_coef_;
    std::int64_t best_sum_ = -1;
    std::size_t nodes_ = 0;

    bool solved() const { return best_sum_ == 0; }

    void rec(std::size_t i, std::int64_t res_sum) {
        if (solved() || nodes_ >= budget_) return;
        ++nodes_;
        const IVec& res = stack_[i];
        if (i == order_.size()) {
            if (best_sum_ < 0 || res_sum < best_sum_) {
                best_sum_ = res_sum;
                best_res_ = res;
                best_coef_ = coef_;
            }
            return;
        }
        const std::size_t z = order_[i];
        const IVec& p = pool_[z];
        std::int64_t cmax = std::numeric_limits<std::int64_t>::max();
        for (auto j : support_[z]) cmax = std::min(cmax, res[j] / p[j]);
        for (std::int64_t c = cmax; c >= 0; --c) {
            IVec& next = stack_[i + 1];
            next = res;
            if (c != 0)
                for (auto j : support_[z]) next[j] -= c * p[j];
            coef_[z] = c;
            rec(i + 1, res_sum - c * sums_[z]);
            if (solved() || nodes_ >= budget_) break;
        }
        coef_[z] = 0;
    }
};

bool contains(const std::vector<IVec>& pool, const IVec& v) { return std::find(pool.begin(), pool.end(), v) != pool.end(); }

// Splits a new primitive candidate against the pool. Pool entries dominating
// it are reduced by it, and it is reduced by entries it dominates; the vector
// M at position 0 never changes.
void absorb(std::vector<IVec>& pool, IVec cand) {
    std::vector<IVec> todo{std::move(cand)};
    while (!todo.empty()) {
        IVec c = std::move(todo.back());
        todo.pop_back();
        if (contains(pool, c)) continue;
        for (std::size_t i = 1; i < pool.size(); ++i) {
            if (dominates(pool[i], c)) {
                for (std::size_t j = 0; j < c.size(); ++j) pool[i][j] -= c[j];
            } else if (dominates(c, pool[i])) {
                for (std::size_t j = 0; j < c.size(); ++j) c[j] -= pool[i][j];
            }
        }
        pool.push_back(std::move(c));
    }
    std::vector<IVec> kept;
    for (auto& p : pool)
        if (!is_zero(p) && !contains(kept, p)) kept.push_back(std::move(p));
    pool = std::move(kept);
}

}  // namespace

ModularSplitting solve_modular_splitting(const FusionRing& ring, const IMat& M, const SplitOptions& opt) {
    const FusedModularMatrix K(ring, M);
    const std::size_t n = K.dim();
    ModularSplitting out;
    out.k = ring.k;
    out.n = n;
    out.M = M;
    for (Eigen::Index i = 0; i < M.size(); ++i) out.d_O += M.data()[i] * M.data()[i];

    // row sums without building rows: 1^T N_l M N_m^T 1
    std::vector<Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>> colsum(n);
    for (std::size_t l = 0; l < n; ++l) colsum[l] = ring.N[l].colwise().sum().transpose();
    std::vector<std::pair<std::int64_t, std::size_t>> rows;
    for (std::size_t l = 0; l < n; ++l) {
        const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> left = M.transpose() * colsum[l];
        for (std::size_t m = 0; m < n; ++m) rows.emplace_back(left.dot(colsum[m]), l * n + m);
    }
    std::sort(rows.begin(), rows.end());

    std::vector<IMat> NM(n);
    for (std::size_t l = 0; l < n; ++l) NM[l] = mul(ring.N[l], M);
    auto row = [&](std::size_t idx) { return flatten(mul_transposed(NM[idx / n], ring.N[idx % n])); };

    std::vector<IVec> pool{flatten(M)};
    ModpBasis rankK(n * n);
    for (auto& [sum, idx] : rows) {
        const IVec r = row(idx);
        rankK.add(r);
        Decomposer dec(pool, opt.node_budget);
        auto res = dec.run(r);
        out.nodes += dec.nodes();
        if (is_zero(res.residual)) continue;
        IVec cand = res.residual;
        const std::int64_t g = gcd_entries(cand);
        for (auto& x : cand) x /= g;
        absorb(pool, std::move(cand));
    }
    out.rank_K = rankK.rank();
    out.rank_exact = rank_modp(pool) == pool.size() && out.rank_K == pool.size();

    // certification: every row is an exact non-negative combination of the pool
    std::vector<IMat> left(pool.size(), IMat::Zero(n, n));
    for (auto& [sum, idx] : rows) {
        Decomposer dec(pool, opt.node_budget);
        auto res = dec.run(row(idx));
        out.nodes += dec.nodes();
        if (!is_zero(res.residual))
            throw std::runtime_error("modular splitting: row (" + to_string(ring.alcove[idx / n]) + "," +
                                     to_string(ring.alcove[idx % n]) + ") is not decomposable" +
                                     (res.exhausted ? " within the node budget" : ""));
        for (std::size_t z = 0; z < pool.size(); ++z) left[z](idx / n, idx % n) = res.coef[z];
    }
    out.certified = true;
    for (auto& p : pool) out.W_right.push_back(unflatten(p, n, n));
    out.W_left = std::move(left);
    return out;
}

std::size_t splitting_residual(const FusionRing& ring, const ModularSplitting& s) {
    const FusedModularMatrix K(ring, s.M);
    std::size_t bad = 0;
    for (std::size_t l = 0; l < s.n; ++l)
        for (std::size_t m = 0; m < s.n; ++m) {
            IMat acc = IMat::Zero(s.n, s.n);
            for (std::size_t z = 0; z < s.W_right.size(); ++z)
                if (auto c = s.W_left[z](l, m)) acc += c * s.W_right[z];
            bad += static_cast<std::size_t>((acc.array() != K.block(l, m).array()).count());
        }
    return bad;
}

IMat ToricTable::W(std::size_t x, std::size_t y) const {
    IMat out(n, n);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (coef[x][i].empty()) throw std::logic_error("toric table was not solved in full");
        out(i / n, i % n) = coef[x][i][y];
    }
    return out;
}

IMat ToricTable::V(std::size_t lambda, std::size_t mu) const {
    IMat out(d, d);
    for (std::size_t x = 0; x < d; ++x) {
        const IVec& c = coef[x][lambda * n + mu];
        if (c.empty()) throw std::logic_error("toric table was not solved in full");
        for (std::size_t y = 0; y < d; ++y) out(x, y) = c[y];
    }
    return out;
}

ToricTable solve_generalized_splitting(const FusionRing& ring, const ModularSplitting& s, bool full) {
    ToricTable t;
    t.d = s.W_right.size();
    t.n = s.n;
    std::vector<IVec> basis;
    for (auto& W : s.W_right) basis.push_back(flatten(W));
    const LatticeSolver solver(std::move(basis));

    const std::size_t n = s.n;
    const std::size_t f = ring.alcove.index({1, 0});
    std::vector<std::size_t> wanted;
    if (full) {
        wanted.resize(n * n);
        std::iota(wanted.begin(), wanted.end(), 0);
    } else {
        wanted = {0, f * n, f};
    }
    t.coef.assign(t.d, std::vector<IVec>(n * n));
    for (std::size_t x = 0; x < t.d; ++x) {
        const IMat& Wx = s.W_right[x];
        std::vector<IMat> NW(n);
        for (auto idx : wanted) {
            const std::size_t l = idx / n, m = idx % n;
            if (NW[l].size() == 0) NW[l] = mul(ring.N[l], Wx);
            auto c = solver.solve(flatten(mul_transposed(NW[l], ring.N[m])));
            if (!c)
                throw std::runtime_error("generalized splitting: no integral solution at x=" + std::to_string(x) + ", (" +
                                         to_string(ring.alcove[l]) + "," + to_string(ring.alcove[m]) + ")");
            t.coef[x][idx] = std::move(*c);
        }
    }
    t.O1L = IMat(t.d, t.d);
    t.O1R = IMat(t.d, t.d);
    for (std::size_t x = 0; x < t.d; ++x)
        for (std::size_t z = 0; z < t.d; ++z) {
            t.O1L(x, z) = t.coef[x][f * n][z];
            t.O1R(x, z) = t.coef[x][f][z];
        }
    return t;
}

Report verify_toric_table(const FusionRing& ring, const ModularSplitting& s, const ToricTable& t) {
    Report r;
    r.subject = "toric table, d = " + std::to_string(t.d);
    bool v00 = true, nonneg = true;
    for (std::size_t x = 0; x < t.d; ++x) {
        for (std::size_t y = 0; y < t.d; ++y) v00 = v00 && t.coef[x][0][y] == (x == y ? 1 : 0);
        for (auto& c : t.coef[x])
            for (auto v : c) nonneg = nonneg && v >= 0;
    }
    r.expect_true("V_00 = I", v00);
    r.expect_true("non-negative coefficients", nonneg);
    r.expect_true("O_1L O_1R = O_1R O_1L", mul(t.O1L, t.O1R) == mul(t.O1R, t.O1L));
    r.expect_eq<std::size_t>("W_00 = M", 0, static_cast<std::size_t>((s.W_right[0].array() != s.M.array()).count()));

    const bool full = std::all_of(t.coef.begin(), t.coef.end(),
                                  [](const std::vector<IVec>& c) { return std::all_of(c.begin(), c.end(), [](const IVec& v) { return !v.empty(); }); });
    if (!full) {
        r.note("double intertwining", "skipped, table not solved in full");
        return r;
    }
    const std::size_t n = t.n, f = ring.alcove.index({1, 0});
    std::vector<std::vector<IMat>> W(t.d, std::vector<IMat>(t.d));
    for (std::size_t x = 0; x < t.d; ++x)
        for (std::size_t y = 0; y < t.d; ++y) W[x][y] = t.W(x, y);
    std::size_t bad = 0;
    for (auto [l, m] : {std::pair{f, std::size_t{0}}, std::pair{std::size_t{0}, f}}) {
        for (std::size_t x = 0; x < t.d; ++x) {
            const IVec& c = t.coef[x][l * n + m];
            for (std::size_t y = 0; y < t.d; ++y) {
                IMat rhs = IMat::Zero(n, n);
                for (std::size_t z = 0; z < t.d; ++z)
                    if (c[z]) rhs += c[z] * W[z][y];
                if (mul_transposed(mul(ring.N[l], W[x][y]), ring.N[m]) != rhs) ++bad;
            }
        }
    }
    r.expect_eq<std::size_t>("double intertwining failures", 0, bad);
    return r;
}

IMat relative_invariant(const IMat& M, const IMat& E0) {
    const auto n = static_cast<std::size_t>(E0.rows()), r = static_cast<std::size_t>(E0.cols());
    if (static_cast<std::size_t>(M.rows()) != n || M.rows() != M.cols())
        throw std::invalid_argument("relative invariant: size mismatch");
    std::vector<IVec> basis;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            IVec v(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) v[i * n + j] = E0(i, a) * E0(j, b);
            basis.push_back(std::move(v));
        }
    std::optional<LatticeSolver> solver;
    try {
        solver.emplace(std::move(basis));
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("relative invariant: E_0 does not have full column rank");
    }
    auto c = solver->solve(flatten(M));
    if (!c) throw std::runtime_error("relative invariant: no exact integer solution");
    return unflatten(*c, r, r);
}

FalsificationResult dual_bimodule_falsification(const ToricTable& t, const ModularSplitting& s) {
    FalsificationResult out;
    for (std::size_t x = 0; x < t.d; ++x)
        for (std::size_t y = 0; y < t.d; ++y) {
            ++out.pairs;
            const bool ok = t.W(x, y) == mul(s.W_right[x], s.W_left[y]);
            if (x == 0 && y == 0) out.origin_holds = ok;
            if (!ok) {
                ++out.violations;
                if (!out.first) out.first = {x, y};
            }
        }
    return out;
}

}  // namespace su3
