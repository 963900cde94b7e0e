#include "su3/invariant.hpp"

#include <fstream>
#include <stdexcept>

namespace su3 {

Series parse_series(const std::string& s) {
    if (s == "A") return Series::A;
    if (s == "A*") return Series::Astar;
    if (s == "D") return Series::D;
    if (s == "D*") return Series::Dstar;
    throw std::invalid_argument("unknown series '" + s + "' (expected A, A*, D or D*)");
}

std::string to_string(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::Astar: return "A*";
        case Series::D: return "D";
        case Series::Dstar: return "D*";
    }
    return "?";
}

namespace {

void require_valid(const ModularInvariant& inv) {
    auto rep = build_modular(inv.k);
    auto r = verify_invariant(inv, rep);
    if (!r.passed()) {
        std::string why;
        for (auto& c : r.checks)
            if (c.status == Status::fail) why += " " + c.name + "=" + c.actual;
        throw std::invalid_argument("not a modular invariant at level " + std::to_string(inv.k) + ":" + why);
    }
}

}  // namespace

ModularInvariant invariant_from_blocks(int k, const std::vector<Block>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("empty block list");
    const Alcove alc(k);
    ModularInvariant inv;
    inv.k = k;
    inv.blocks = blocks;
    inv.M = IMat::Zero(alc.size(), alc.size());
    for (const auto& b : blocks)
        for (const auto& l : b.left)
            for (const auto& r : b.right) inv.M(alc.index(l), alc.index(r)) += b.coeff;
    require_valid(inv);
    return inv;
}

ModularInvariant series_invariant(Series s, int k) {
    if (k < 1) throw std::invalid_argument("series invariants need k >= 1");
    const Alcove alc(k);
    const auto n = alc.size();
    ModularInvariant inv;
    inv.k = k;
    inv.series = to_string(s);
    inv.M = IMat::Zero(n, n);
    const bool fixed_point_level = k % 3 == 0;
    if (s == Series::A || s == Series::Astar || !fixed_point_level) {
        for (std::size_t mu = 0; mu < n; ++mu) {
            const Weight m = alc[mu];
            Weight lam = m;
            switch (s) {
                case Series::A: lam = m; break;
                case Series::Astar: lam = conjugate(m); break;
                case Series::D: lam = gannon_twist(m, k); break;
                case Series::Dstar: lam = gannon_twist(conjugate(m), k); break;
            }
            inv.M(alc.index(lam), mu) = 1;
        }
    } else {
        // (1/3) sum over triality-zero weights of |orbit character sum|^2,
        // with the right factor conjugated for D*.
        for (const auto& w : alc.weights()) {
            if (triality(w) != 0) continue;
            const Weight orbit[3] = {w, z_rotate(w, k), z_rotate(z_rotate(w, k), k)};
            for (const auto& a : orbit)
                for (const auto& b : orbit)
                    inv.M(alc.index(a), alc.index(s == Series::Dstar ? conjugate(b) : b)) += 1;
        }
        for (Eigen::Index i = 0; i < inv.M.size(); ++i) {
            if (inv.M.data()[i] % 3 != 0) throw std::logic_error("orbit formula not divisible by 3");
            inv.M.data()[i] /= 3;
        }
    }
    require_valid(inv);
    return inv;
}

Report verify_invariant(const ModularInvariant& inv, const ModularRep& rep, double tol) {
    Report r;
    r.subject = "modular invariant at level " + std::to_string(inv.k);
    if (inv.k != rep.k) {
        r.expect_true("levels match", false, std::to_string(inv.k) + " vs " + std::to_string(rep.k));
        return r;
    }
    const Eigen::MatrixXcd M = inv.M.cast<double>().cast<std::complex<double>>();
    const Eigen::MatrixXcd T = rep.T.asDiagonal();
    r.expect_eq<std::int64_t>("M_00", 1, inv.M(0, 0));
    r.expect_true("non-negative", nonnegative(inv.M));
    r.expect_below("|SM-MS|", (rep.S * M - M * rep.S).cwiseAbs().maxCoeff(), tol);
    r.expect_below("|TM-MT|", (T * M - M * T).cwiseAbs().maxCoeff(), tol);
    return r;
}

ModularInvariant parse_invariant(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("level")) throw std::invalid_argument("invariant: missing level");
    const int k = j.at("level").get<int>();
    if (j.contains("series")) return series_invariant(parse_series(j.at("series").get<std::string>()), k);
    if (!j.contains("blocks") || !j.at("blocks").is_array()) throw std::invalid_argument("invariant: missing blocks");
    auto weights = [](const nlohmann::json& a) {
        std::vector<Weight> out;
        for (auto& w : a) {
            if (!w.is_array() || w.size() != 2) throw std::invalid_argument("invariant: weight must be [l1,l2]");
            out.push_back({w[0].get<int>(), w[1].get<int>()});
        }
        return out;
    };
    std::vector<Block> blocks;
    for (auto& b : j.at("blocks"))
        blocks.push_back({b.value("coeff", std::int64_t{1}), weights(b.at("left")), weights(b.at("right"))});
    return invariant_from_blocks(k, blocks);
}

ModularInvariant load_invariant(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(file.string() + ": " + e.what());
    }
    return parse_invariant(j);
}

OcneanuDimension ocneanu_dimension(const IMat& M) {
    OcneanuDimension out;
    for (Eigen::Index i = 0; i < M.size(); ++i) {
        const auto m = M.data()[i];
        out.d_O += m * m;
        if (m != 0) out.block_dims[m] += 1;
    }
    return out;
}

}  // namespace su3
