#pragma once

#include "su3/alcove.hpp"
#include "su3/linalg.hpp"

#include <utility>
#include <vector>

namespace su3 {

// Runs the SU(3) recurrence seeded with F(0,0) = I, F(1,0) = A:
//   F(l1,0)  = A F(l1-1,0) - F(l1-2,1)
//   F(l1,l2) = A F(l1-1,l2) - F(l1-1,l2-1) - F(l1-2,l2+1)
//   F(0,l)   = F(l,0)^T
// Terms outside the alcove are zero. The result is indexed in alcove order.
std::vector<IMat> su3_recurrence(const Alcove& alcove, const IMat& A);

// Adjacency of the A_k graph: (a,b) -> (a+1,b), (a-1,b+1), (a,b-1).
IMat fundamental_adjacency(const Alcove& alcove);

struct FusionRing {
    int k = 0;
    Alcove alcove{0};
    std::vector<IMat> N;

    const IMat& operator()(const Weight& w) const { return N[alcove.index(w)]; }
    std::int64_t coeff(const Weight& a, const Weight& b, const Weight& c) const {
        return N[alcove.index(a)](alcove.index(b), alcove.index(c));
    }
};

FusionRing build_fusion_ring(int k);

std::vector<std::pair<Weight, std::int64_t>> fuse(const FusionRing& ring, const Weight& a, const Weight& b);

struct HorizontalDimension {
    BigInt direct;
    BigInt closed_form;
};
HorizontalDimension horizontal_dimension_A(int k);

}  // namespace su3
