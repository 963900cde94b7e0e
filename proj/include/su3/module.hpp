#pragma once

#include "su3/alcove.hpp"
#include "su3/fusion.hpp"
#include "su3/graph.hpp"
#include "su3/report.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace su3 {

// A graph whose annular recurrence goes negative is not an A_k module.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphModule {
    GraphSpec graph;
    Alcove alcove{0};
    std::vector<IMat> F;  // annular matrices, alcove order
    std::vector<BigInt> d_lambda;
    BigInt d_H;
    BigInt dim_B;
    std::size_t unit = 0;  // declared unit, else smallest Perron component

    // (E_a)_{lambda b} = (F_lambda)_{a b}, size d_A x r
    IMat essential(std::size_t a) const;
    const IMat& annular(const Weight& w) const { return F[alcove.index(w)]; }
};

GraphModule build_annular(const GraphSpec& g);
GraphModule build_annular(const GraphSpec& g, const FusionRing& ring);

Report verify_intertwiner(const GraphModule& m, const FusionRing& ring);

std::vector<std::pair<std::size_t, std::int64_t>> restriction(const GraphModule& m, const Weight& w);
std::vector<std::pair<Weight, std::int64_t>> induction(const GraphModule& m, std::size_t b);

struct TrialityConjugation {
    std::vector<int> triality;
    std::vector<std::size_t> conjugate;
};

// Throws std::runtime_error when some induction list mixes trialities or a vertex
// has no conjugate partner.
TrialityConjugation assign_triality_conjugation(const GraphModule& m);

// True when every edge raises the assigned triality by one.
bool triality_graded(const GraphModule& m, const TrialityConjugation& tc);

// (F_{lambda*})_{a* b*} = (F_lambda)_{ab}
bool conjugation_compatible(const GraphModule& m, const TrialityConjugation& tc);

Report verify_self_fusion(const GraphModule& m);

struct QuantumDims {
    std::vector<double> qdim;
    double mass = 0;
    std::size_t normalized_at = 0;
};
QuantumDims quantum_dims_graph(const GraphSpec& g);

// Vertex with the smallest Perron component; ties go to the first in file order.
std::size_t default_unit(const GraphSpec& g);

// Edge multiset of the horizontal graph of type w: (a, b, multiplicity).
std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> horizontal_paths(const GraphModule& m, const Weight& w);

}  // namespace su3
