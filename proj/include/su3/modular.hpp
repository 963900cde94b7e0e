#pragma once

#include "su3/alcove.hpp"
#include "su3/linalg.hpp"
#include "su3/report.hpp"

#include <Eigen/Dense>

#include <vector>

namespace su3 {

struct ModularRep {
    int k = 0;
    int kappa = 3;
    Alcove alcove{0};
    Eigen::MatrixXcd S;
    Eigen::VectorXcd T;       // diagonal of T
    std::vector<std::size_t> C;  // charge conjugation as a permutation of alcove positions
};

Eigen::MatrixXcd build_S(int k);
Eigen::VectorXcd build_T(int k);
ModularRep build_modular(int k);

int modular_exponent(const Weight& w, int k);

struct VerlindeTensor {
    std::vector<IMat> N;
    double max_residual = 0;
};

// Throws std::runtime_error when some coefficient is further than 1e-6 from an integer.
VerlindeTensor verlinde_fusion(const Eigen::MatrixXcd& S);

Report verify_sl2z(const ModularRep& rep, double tol = 1e-9);

}  // namespace su3
