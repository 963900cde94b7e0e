#include "su3/modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su3 {

using namespace std::complex_literals;

Eigen::MatrixXcd build_S(int k) {
    const Alcove alc(k);
    const int kappa = k + 3;
    const auto n = static_cast<Eigen::Index>(alc.size());
    const double pi = std::numbers::pi;
    auto e = [&](long x) { return std::exp(-2i * pi * static_cast<double>(x) / (3.0 * kappa)); };
    Eigen::MatrixXcd S(n, n);
    const std::complex<double> pre = -1i / (std::sqrt(3.0) * kappa);
    for (Eigen::Index a = 0; a < n; ++a) {
        const long l1 = alc[a].l1 + 1, l2 = alc[a].l2 + 1;
        for (Eigen::Index b = 0; b < n; ++b) {
            const long m1 = alc[b].l1 + 1, m2 = alc[b].l2 + 1;
            S(a, b) = pre * (e(2 * l1 * m1 + l1 * m2 + l2 * m1 + 2 * l2 * m2) -
                             e(-l1 * m1 + l1 * m2 + l2 * m1 + 2 * l2 * m2) -
                             e(2 * l1 * m1 + l1 * m2 + l2 * m1 - l2 * m2) +
                             e(-l1 * m1 + l1 * m2 - 2 * l2 * m1 - l2 * m2) +
                             e(-l1 * m1 - 2 * l1 * m2 + l2 * m1 - l2 * m2) -
                             e(-l1 * m1 - 2 * l1 * m2 - 2 * l2 * m1 - l2 * m2));
        }
    }
    return S;
}

int modular_exponent(const Weight& w, int k) {
    const int kappa = k + 3, a = w.l1 + 1, b = w.l2 + 1;
    const int m = 3 * kappa;
    return (((a * a + a * b + b * b - kappa) % m) + m) % m;
}

Eigen::VectorXcd build_T(int k) {
    const Alcove alc(k);
    const int kappa = k + 3;
    Eigen::VectorXcd T(static_cast<Eigen::Index>(alc.size()));
    for (std::size_t i = 0; i < alc.size(); ++i)
        T[i] = std::exp(2i * std::numbers::pi * static_cast<double>(modular_exponent(alc[i], k)) / (3.0 * kappa));
    return T;
}

ModularRep build_modular(int k) {
    ModularRep rep;
    rep.k = k;
    rep.kappa = k + 3;
    rep.alcove = Alcove(k);
    rep.S = build_S(k);
    rep.T = build_T(k);
    for (const auto& w : rep.alcove.weights()) rep.C.push_back(rep.alcove.index(conjugate(w)));
    return rep;
}

VerlindeTensor verlinde_fusion(const Eigen::MatrixXcd& S) {
    const auto n = S.rows();
    VerlindeTensor out;
    out.N.assign(n, IMat::Zero(n, n));
    for (Eigen::Index b = 0; b < n; ++b)
        if (std::abs(S(0, b)) < 1e-12) throw std::runtime_error("verlinde: vanishing S_0b");
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index m = 0; m < n; ++m) {
            for (Eigen::Index v = 0; v < n; ++v) {
                std::complex<double> s = 0;
                for (Eigen::Index b = 0; b < n; ++b) s += S(l, b) * S(m, b) * std::conj(S(v, b)) / S(0, b);
                const double r = std::round(s.real());
                out.max_residual = std::max(out.max_residual, std::abs(s - r));
                out.N[l](m, v) = static_cast<std::int64_t>(r);
            }
        }
    }
    if (out.max_residual > 1e-6)
        throw std::runtime_error("verlinde: rounding residual " + fmt_double(out.max_residual) + " exceeds 1e-6");
    return out;
}

Report verify_sl2z(const ModularRep& rep, double tol) {
    Report r;
    r.subject = "SL(2,Z) at level " + std::to_string(rep.k);
    const auto n = rep.S.rows();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd& S = rep.S;
    const Eigen::MatrixXcd T = rep.T.asDiagonal();
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) C(i, rep.C[i]) = 1;
    const Eigen::MatrixXcd S2 = S * S;
    const Eigen::MatrixXcd ST = S * T;
    Eigen::MatrixXcd T3k = I;
    for (int i = 0; i < 3 * rep.kappa; ++i) T3k = T3k * T;
    auto norm = [](const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; };
    r.expect_below("S-S^T", norm(S - S.transpose()), tol);
    r.expect_below("SS^H-I", norm(S * S.adjoint() - I), tol);
    r.expect_below("S^4-I", norm(S2 * S2 - I), tol);
    r.expect_below("(ST)^3-S^2", norm(ST * ST * ST - S2), tol);
    r.expect_below("T^(3kappa)-I", norm(T3k - I), tol);
    r.expect_below("S^2-C", norm(S2 - C), tol);
    return r;
}

}  // namespace su3
