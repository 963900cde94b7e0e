#include "su3/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace su3 {

namespace {
std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("integer matrix product overflow");
    return static_cast<std::int64_t>(v);
}
}  // namespace

IMat mul(const IMat& a, const IMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    const Eigen::Index n = a.rows(), m = b.cols();
    std::vector<__int128> acc(static_cast<std::size_t>(m));
    IMat out(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const std::int64_t x = a(i, k);
            if (x == 0) continue;
            const std::int64_t* row = b.data() + k * m;
            for (Eigen::Index j = 0; j < m; ++j) acc[j] += static_cast<__int128>(x) * row[j];
        }
        for (Eigen::Index j = 0; j < m; ++j) out(i, j) = checked(acc[j]);
    }
    return out;
}

IMat mul_transposed(const IMat& a, const IMat& b) {
    IMat bt = b.transpose();
    return mul(a, bt);
}

IMat identity(std::size_t n) {
    return IMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

BigInt sum_entries(const IMat& a) {
    BigInt s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a.data()[i];
    return s;
}

bool nonnegative(const IMat& a) { return a.size() == 0 || a.minCoeff() >= 0; }

IVec flatten(const IMat& a) { return IVec(a.data(), a.data() + a.size()); }

IMat unflatten(const IVec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
    IMat out(rows, cols);
    std::copy(v.begin(), v.end(), out.data());
    return out;
}

std::int64_t gcd_entries(const IVec& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

Eigen::MatrixXd to_double(const IMat& a) { return a.cast<double>(); }

std::vector<std::complex<double>> eigenvalues(const Eigen::MatrixXd& a) {
    if (a.rows() == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    auto ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double spectral_radius(const Eigen::MatrixXd& a) {
    double r = 0;
    for (auto& z : eigenvalues(a)) r = std::max(r, std::abs(z));
    return r;
}

Eigen::VectorXd perron_vector(const Eigen::MatrixXd& a) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, true);
    auto ev = es.eigenvalues();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < ev.size(); ++i)
        if (ev[i].real() > ev[best].real() + 1e-12) best = i;
    Eigen::VectorXd v = es.eigenvectors().col(best).real();
    if (v.sum() < 0) v = -v;
    return v.cwiseAbs();
}

bool same_multiset(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (auto& x : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && std::abs(x - b[j]) < tol) {
                used[j] = hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

ModpBasis::ModpBasis(std::size_t dim) : dim_(dim) {}

namespace {
std::int64_t modp(std::int64_t x) {
    x %= ModpBasis::prime;
    return x < 0 ? x + ModpBasis::prime : x;
}
std::int64_t powmod(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b = modp(b);
    while (e) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % ModpBasis::prime);
        b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % ModpBasis::prime);
        e >>= 1;
    }
    return r;
}
}  // namespace

std::vector<std::int64_t> ModpBasis::reduce(const IVec& v) const {
    std::vector<std::int64_t> w(dim_);
    for (std::size_t i = 0; i < dim_; ++i) w[i] = modp(v[i]);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::int64_t c = w[pivots_[r]];
        if (c == 0) continue;
        const auto& row = rows_[r];
        for (std::size_t j = pivots_[r]; j < dim_; ++j) {
            if (row[j] == 0) continue;
            w[j] = modp(w[j] - static_cast<std::int64_t>(static_cast<__int128>(c) * row[j] % prime));
        }
    }
    return w;
}

bool ModpBasis::add(const IVec& v) {
    if (v.size() != dim_) throw std::invalid_argument("ModpBasis: dimension mismatch");
    auto w = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && w[p] == 0) ++p;
    if (p == dim_) return false;
    std::int64_t inv = powmod(w[p], prime - 2);
    for (std::size_t j = p; j < dim_; ++j)
        w[j] = static_cast<std::int64_t>(static_cast<__int128>(w[j]) * inv % prime);
    // keep rows fully reduced against the new pivot so reduce() needs one pass
    for (auto& row : rows_) {
        std::int64_t c = row[p];
        if (c == 0) continue;
        for (std::size_t j = p; j < dim_; ++j) {
            if (w[j] == 0) continue;
            row[j] = modp(row[j] - static_cast<std::int64_t>(static_cast<__int128>(c) * w[j] % prime));
        }
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

std::size_t rank_modp(const std::vector<IVec>& rows) {
    if (rows.empty()) return 0;
    ModpBasis b(rows.front().size());
    for (auto& r : rows) b.add(r);
    return b.rank();
}

LatticeSolver::LatticeSolver(std::vector<IVec> basis) : basis_(std::move(basis)) {
    const std::size_t d = basis_.size();
    if (d == 0) return;
    const std::size_t len = basis_.front().size();
    ModpBasis cols(d);
    IVec slice(d);
    for (std::size_t i = 0; i < len && rowsel_.size() < d; ++i) {
        for (std::size_t z = 0; z < d; ++z) slice[z] = basis_[z][i];
        if (cols.add(slice)) rowsel_.push_back(i);
    }
    if (rowsel_.size() < d) throw std::invalid_argument("LatticeSolver: family is dependent modulo p");

    // Gauss-Jordan on [B | I] mod p, B[r][z] = basis[z][rowsel[r]]
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(2 * d, 0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t z = 0; z < d; ++z) m[r][z] = modp(basis_[z][rowsel_[r]]);
        m[r][d + r] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && m[p][c] == 0) ++p;
        if (p == d) throw std::logic_error("LatticeSolver: singular pivot block");
        std::swap(m[p], m[c]);
        const std::int64_t inv = powmod(m[c][c], ModpBasis::prime - 2);
        for (auto& x : m[c]) x = static_cast<std::int64_t>(static_cast<__int128>(x) * inv % ModpBasis::prime);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const std::int64_t f = m[r][c];
            for (std::size_t j = 0; j < 2 * d; ++j)
                if (m[c][j] != 0)
                    m[r][j] = modp(m[r][j] - static_cast<std::int64_t>(static_cast<__int128>(f) * m[c][j] % ModpBasis::prime));
        }
    }
    inv_.assign(d, std::vector<std::int64_t>(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < d; ++j) inv_[r][j] = m[r][d + j];
}

std::optional<IVec> LatticeSolver::solve(const IVec& target) const {
    const std::size_t d = basis_.size();
    if (d == 0) {
        for (auto x : target)
            if (x != 0) return std::nullopt;
        return IVec{};
    }
    if (target.size() != basis_.front().size()) throw std::invalid_argument("LatticeSolver: length mismatch");
    IVec c(d);
    for (std::size_t z = 0; z < d; ++z) {
        __int128 acc = 0;
        for (std::size_t r = 0; r < d; ++r) acc += static_cast<__int128>(inv_[z][r]) * modp(target[rowsel_[r]]) % ModpBasis::prime;
        std::int64_t v = static_cast<std::int64_t>(acc % ModpBasis::prime);
        c[z] = v > ModpBasis::prime / 2 ? v - ModpBasis::prime : v;
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        __int128 acc = 0;
        for (std::size_t z = 0; z < d; ++z)
            if (c[z] != 0 && basis_[z][i] != 0) acc += static_cast<__int128>(c[z]) * basis_[z][i];
        if (acc != target[i]) return std::nullopt;
    }
    return c;
}

QMat to_rational(const IMat& a) {
    QMat q(a.rows(), std::vector<Rational>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) q[i][j] = a(i, j);
    return q;
}

std::optional<QMat> inverse(const QMat& a) {
    const std::size_t n = a.size();
    QMat m = a, inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rational d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                if (m[c][j] != 0) m[r][j] -= f * m[c][j];
                if (inv[c][j] != 0) inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace su3
