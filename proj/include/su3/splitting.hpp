#pragma once

#include "su3/fusion.hpp"
#include "su3/invariant.hpp"
#include "su3/linalg.hpp"
#include "su3/report.hpp"

#include <optional>
#include <vector>

namespace su3 {

// Fused modular matrix: row (lambda, mu) is vec(N_lambda M N_mu^T). Rows are
// built on demand.
class FusedModularMatrix {
public:
    FusedModularMatrix(const FusionRing& ring, const IMat& M);
    std::size_t dim() const { return n_; }
    std::size_t rows() const { return n_ * n_; }
    IVec row(std::size_t lambda, std::size_t mu) const;
    IMat block(std::size_t lambda, std::size_t mu) const;

private:
    const FusionRing* ring_;
    IMat M_;
    std::size_t n_;
};

struct SplitOptions {
    std::size_t node_budget = 20'000'000;  // per row decomposition
};

struct ModularSplitting {
    int k = 0;
    std::size_t n = 0;            // d_A
    IMat M;
    std::vector<IMat> W_right;    // distinct W_z0, W_00 = M first
    std::vector<IMat> W_left;     // (W_0z)_{lambda mu}
    std::size_t rank_K = 0;
    bool rank_exact = false;      // rank_p(K) = |pool| pins rank_Q(K)
    bool certified = false;       // every row of K replayed exactly
    std::int64_t d_O = 0;         // Tr(M M^T)
    std::size_t nodes = 0;
};

// Throws std::runtime_error when some row of K cannot be decomposed within the budget.
ModularSplitting solve_modular_splitting(const FusionRing& ring, const IMat& M, const SplitOptions& opt = {});

// Exact replay of the splitting equation; returns the number of mismatching entries.
std::size_t splitting_residual(const FusionRing& ring, const ModularSplitting& s);

struct ToricTable {
    std::size_t d = 0;  // number of toric matrices
    std::size_t n = 0;  // d_A
    // coef[x][lambda * n + mu][z] = (W_xz)_{lambda mu}
    std::vector<std::vector<IVec>> coef;
    IMat O1L, O1R;

    IMat W(std::size_t x, std::size_t y) const;  // (W_xy)_{lambda mu}
    IMat V(std::size_t lambda, std::size_t mu) const;  // (V_lambda mu)_{xy}
};

// Solves N_lambda W_x0 N_mu^T = sum_z (W_xz)_{lambda mu} W_z0 for every x,
// lambda, mu. Throws std::runtime_error on dependence or non-integral solutions.
ToricTable solve_generalized_splitting(const FusionRing& ring, const ModularSplitting& s, bool full = true);

// V_00 = I, O_1L and O_1R commute, double intertwining on the generators and
// non-negativity of the table.
Report verify_toric_table(const FusionRing& ring, const ModularSplitting& s, const ToricTable& t);

// M = E_0 M_rel E_0^T over the integers; std::runtime_error when no exact solution exists.
IMat relative_invariant(const IMat& M, const IMat& E0);

struct FalsificationResult {
    std::size_t pairs = 0;
    std::size_t violations = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first;
    bool origin_holds = false;  // compares M with M M
};
FalsificationResult dual_bimodule_falsification(const ToricTable& t, const ModularSplitting& s);

}  // namespace su3
