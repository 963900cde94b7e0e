#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace su3 {

// Dynkin labels of an SU(3) weight. Shifted labels are (l1+1, l2+1).
struct Weight {
    int l1 = 0;
    int l2 = 0;
    auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

// Integrable weights at level k, ordered by l1+l2 ascending, then l1 descending.
// Every alcove-indexed matrix in the library uses this order.
class Alcove {
public:
    explicit Alcove(int k);

    int level() const { return k_; }
    int kappa() const { return k_ + 3; }
    std::size_t size() const { return weights_.size(); }
    const Weight& operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<Weight>& weights() const { return weights_; }

    bool contains(const Weight& w) const;
    std::optional<std::size_t> find(const Weight& w) const;
    // throws std::out_of_range for weights outside the alcove
    std::size_t index(const Weight& w) const;

private:
    int k_;
    std::vector<Weight> weights_;
    std::vector<int> slot_;  // (k+1)^2 table, -1 when outside
};

Alcove enumerate_alcove(int k);

int triality(const Weight& w);
Weight conjugate(const Weight& w);
Weight z_rotate(const Weight& w, int k);
Weight gannon_twist(const Weight& w, int k);

double quantum_dimension(const Weight& w, int kappa);
std::complex<double> graph_eigenvalue(int r1, int r2, int kappa);
double quantum_mass_alcove(int k);

}  // namespace su3
