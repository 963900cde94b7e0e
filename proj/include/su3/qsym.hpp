#pragma once

#include "su3/fusion.hpp"
#include "su3/invariant.hpp"
#include "su3/module.hpp"
#include "su3/report.hpp"
#include "su3/splitting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace su3 {

// Double annular matrices of the series in the basis x = lambda (x) 0:
// A: N_l N_m*, A*: N_l N_m, D: N_l N_rho(m*), D*: N_l N_rho(m).
// D and D* are only commutative for k not divisible by 3.
class SeriesRealization {
public:
    SeriesRealization(Series s, int k);
    const FusionRing& ring() const { return ring_; }
    Series series() const { return series_; }
    IMat V(std::size_t lambda, std::size_t mu) const;

private:
    Series series_;
    FusionRing ring_;
    std::vector<std::size_t> right_;  // mu -> index of the right factor
};

// (V_lm)_00 = M_lm for all pairs, double fusion on `samples` random quadruples,
// V_l0 V_0m = V_lm = V_0m V_l0 and centrality of the left fusion action.
Report check_series_realization(Series s, int k, std::size_t samples = 200, std::uint32_t seed = 20061016);

struct DualAnnular {
    bool complete = false;
    std::string method;
    std::string why;  // reason when incomplete
    std::vector<IMat> S;
    std::vector<BigInt> d_x;
    BigInt d_V;
    BigInt sum_squares;
};

// S_x = F_lambda for x = lambda (x) 0.
DualAnnular dual_annular_series(const GraphModule& m);

// Spans the Ocneanu vertices by words in the chiral generators and their
// transposes, carried alongside the matching products of Ad(G), then solves
// for every S_x exactly and checks S_x Ad = sum_z O_xz S_z for each generator.
DualAnnular dual_annular_words(const ToricTable& t, const GraphModule& m);

struct OcMass {
    std::vector<double> qdim;  // normalized at the vertex of M
    double mass = 0;
    double norm_left = 0;      // Perron norm of O_1L
};
OcMass quantum_mass_Oc(const ToricTable& t);

// Vertices whose induction list carries a single modular exponent.
std::vector<std::size_t> modular_subalgebra(const GraphModule& m);

struct EmbeddingCheck {
    bool equal = false;
    Rational lhs;  // (n^2-1) k / (k+n)
    Rational rhs;  // dim / (1 + h)
};
EmbeddingCheck conformal_embedding_check(int n, int k, std::int64_t dim, std::int64_t dual_coxeter);

}  // namespace su3
