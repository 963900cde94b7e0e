#include "su3/alcove.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su3 {

std::string to_string(const Weight& w) {
    return "(" + std::to_string(w.l1) + "," + std::to_string(w.l2) + ")";
}

Alcove::Alcove(int k) : k_(k) {
    if (k < 0) throw std::invalid_argument("level must be non-negative");
    slot_.assign(static_cast<std::size_t>(k + 1) * (k + 1), -1);
    for (int d = 0; d <= k; ++d) {
        for (int l1 = d; l1 >= 0; --l1) {
            slot_[l1 * (k + 1) + (d - l1)] = static_cast<int>(weights_.size());
            weights_.push_back({l1, d - l1});
        }
    }
}

bool Alcove::contains(const Weight& w) const {
    return w.l1 >= 0 && w.l2 >= 0 && w.l1 + w.l2 <= k_;
}

std::optional<std::size_t> Alcove::find(const Weight& w) const {
    if (!contains(w)) return std::nullopt;
    return static_cast<std::size_t>(slot_[w.l1 * (k_ + 1) + w.l2]);
}

std::size_t Alcove::index(const Weight& w) const {
    auto i = find(w);
    if (!i) throw std::out_of_range("weight " + to_string(w) + " outside alcove at level " + std::to_string(k_));
    return *i;
}

Alcove enumerate_alcove(int k) { return Alcove(k); }

int triality(const Weight& w) { return (((w.l1 - w.l2) % 3) + 3) % 3; }

Weight conjugate(const Weight& w) { return {w.l2, w.l1}; }

Weight z_rotate(const Weight& w, int k) {
    if (w.l1 < 0 || w.l2 < 0 || w.l1 + w.l2 > k)
        throw std::out_of_range("weight " + to_string(w) + " outside alcove at level " + std::to_string(k));
    return {k - w.l1 - w.l2, w.l1};
}

Weight gannon_twist(const Weight& w, int k) {
    int e = (k % 3) * triality(w) % 3;
    Weight r = w;
    for (int i = 0; i < e; ++i) r = z_rotate(r, k);
    return r;
}

namespace {
double qint(int n, int kappa) {
    return std::sin(n * std::numbers::pi / kappa) / std::sin(std::numbers::pi / kappa);
}
}  // namespace

double quantum_dimension(const Weight& w, int kappa) {
    return qint(w.l1 + 1, kappa) * qint(w.l2 + 1, kappa) * qint(w.l1 + w.l2 + 2, kappa) / qint(2, kappa);
}

std::complex<double> graph_eigenvalue(int r1, int r2, int kappa) {
    using namespace std::complex_literals;
    const double pi = std::numbers::pi;
    double a = r1 + 1, b = r2 + 1;
    auto e = [&](double x) { return std::exp(2i * pi * x); };
    return e(-(2 * a + b) / (3.0 * kappa)) * (1.0 + e(a / kappa) + e((a + b) / kappa));
}

double quantum_mass_alcove(int k) {
    const Alcove alc(k);
    double m = 0;
    for (const auto& w : alc.weights()) {
        double q = quantum_dimension(w, k + 3);
        m += q * q;
    }
    return m;
}

}  // namespace su3
