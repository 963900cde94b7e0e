#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace su3 {

using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IVec = std::vector<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Integer products with overflow detection; zero entries of a are skipped,
// which keeps products with sparse fusion matrices cheap.
IMat mul(const IMat& a, const IMat& b);
IMat mul_transposed(const IMat& a, const IMat& b);  // a * b^T
IMat identity(std::size_t n);

BigInt sum_entries(const IMat& a);
bool nonnegative(const IMat& a);
IVec flatten(const IMat& a);
IMat unflatten(const IVec& v, std::size_t rows, std::size_t cols);
std::int64_t gcd_entries(const IVec& v);

Eigen::MatrixXd to_double(const IMat& a);
std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& a);
double spectral_radius(const Eigen::MatrixXd& a);
// Non-negative Perron eigenvector (right eigenvector), not normalized.
Eigen::VectorXd perron_vector(const Eigen::MatrixXd& a);

// Greedy matching of two complex multisets within tol.
bool same_multiset(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol);

// Row echelon basis modulo a fixed 31-bit prime. Used to pick independent rows
// and to bound ranks from below; the exact statements are derived by the callers.
class ModpBasis {
public:
    explicit ModpBasis(std::size_t dim);
    // true if v is independent of the rows added so far (and then keeps it)
    bool add(const IVec& v);
    std::size_t rank() const { return rows_.size(); }

    static constexpr std::int64_t prime = 2147483629;

private:
    std::size_t dim_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::int64_t> reduce(const IVec& v) const;
};

std::size_t rank_modp(const std::vector<IVec>& rows);

// Integer coordinates with respect to a family of vectors that is independent
// modulo the prime (hence over Q). Coordinates are found modulo p, lifted to
// the symmetric range and then checked exactly, so a returned solution is
// always a true integer solution; rational or huge solutions come back empty.
class LatticeSolver {
public:
    // throws std::invalid_argument when the family is dependent mod p
    explicit LatticeSolver(std::vector<IVec> basis);
    std::optional<IVec> solve(const IVec& target) const;
    std::size_t size() const { return basis_.size(); }
    const std::vector<IVec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_coordinates() const { return rowsel_; }

private:
    std::vector<IVec> basis_;
    std::vector<std::size_t> rowsel_;
    std::vector<std::vector<std::int64_t>> inv_;  // inverse of the pivot block mod p
};

using QMat = std::vector<std::vector<Rational>>;

// Exact inverse over Q; nullopt when singular.
std::optional<QMat> inverse(const QMat& a);
QMat to_rational(const IMat& a);

}  // namespace su3
