#include "su3/fusion.hpp"

namespace su3 {

std::vector<IMat> su3_recurrence(const Alcove& alcove, const IMat& A) {
    const int k = alcove.level();
    const auto r = static_cast<std::size_t>(A.rows());
    std::vector<IMat> F(alcove.size());
    const IMat zero = IMat::Zero(r, r);
    auto at = [&](int a, int b) -> const IMat& {
        auto i = alcove.find({a, b});
        return i ? F[*i] : zero;
    };
    F[0] = identity(r);
    for (int d = 1; d <= k; ++d) {
        for (int l1 = d; l1 >= 0; --l1) {
            const int l2 = d - l1;
            IMat& out = F[alcove.index({l1, l2})];
            if (l1 == 0) {
                out = at(l2, 0).transpose();
            } else if (l2 == 0) {
                out = mul(A, at(l1 - 1, 0)) - at(l1 - 2, 1);
            } else {
                out = mul(A, at(l1 - 1, l2)) - at(l1 - 1, l2 - 1) - at(l1 - 2, l2 + 1);
            }
        }
    }
    return F;
}

IMat fundamental_adjacency(const Alcove& alcove) {
    const auto n = alcove.size();
    IMat A = IMat::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Weight w = alcove[i];
        for (Weight t : {Weight{w.l1 + 1, w.l2}, Weight{w.l1 - 1, w.l2 + 1}, Weight{w.l1, w.l2 - 1}})
            if (auto j = alcove.find(t)) A(i, *j) += 1;
    }
    return A;
}

FusionRing build_fusion_ring(int k) {
    FusionRing ring;
    ring.k = k;
    ring.alcove = Alcove(k);
    ring.N = su3_recurrence(ring.alcove, fundamental_adjacency(ring.alcove));
    return ring;
}

std::vector<std::pair<Weight, std::int64_t>> fuse(const FusionRing& ring, const Weight& a, const Weight& b) {
    const IMat& Na = ring(a);
    const auto j = ring.alcove.index(b);
    std::vector<std::pair<Weight, std::int64_t>> out;
    for (std::size_t c = 0; c < ring.alcove.size(); ++c)
        if (Na(j, c) != 0) out.emplace_back(ring.alcove[c], Na(j, c));
    return out;
}

HorizontalDimension horizontal_dimension_A(int k) {
    HorizontalDimension h;
    for (const auto& N : build_fusion_ring(k).N) h.direct += sum_entries(N);
    BigInt K = k;
    h.closed_form = (K + 1) * (K + 2) * (K + 3) * (K + 4) * (K + 5) * (K * K + 6 * K + 14) / 1680;
    return h;
}

}  // namespace su3
