// Command-line entry point. Exit codes: 0 pass, 1 check failure, 2 usage or data error.
#include "su3/acceptance.hpp"
#include "su3/fusion.hpp"
#include "su3/goldens.hpp"
#include "su3/graph.hpp"
#include "su3/invariant.hpp"
#include "su3/modular.hpp"
#include "su3/module.hpp"
#include "su3/qsym.hpp"
#include "su3/splitting.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace su3;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::string format = "pretty";
    double tol = 1e-9;
};

ojson matrix_json(const IMat& m) {
    ojson a = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        a.push_back(row);
    }
    return a;
}

ojson weight_json(const Weight& w) { return ojson::array({w.l1, w.l2}); }

ojson weights_json(const Alcove& alc) {
    ojson a = ojson::array();
    for (auto& w : alc.weights()) a.push_back(weight_json(w));
    return a;
}

Weight parse_weight(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("weight must look like l1,l2: '" + s + "'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("weight must look like l1,l2: '" + s + "'");
    }
}

// A path, or a name resolved inside the data directory (e5, z_e5, e5.json).
std::filesystem::path resolve(const std::string& arg, const std::string& prefix = {}) {
    if (std::filesystem::exists(arg)) return arg;
    for (const auto& cand : {arg, arg + ".json", prefix + arg + ".json"})
        if (std::filesystem::exists(data_dir() / cand)) return data_dir() / cand;
    throw UsageError("no such file or packaged name: " + arg);
}

ModularInvariant resolve_invariant(const std::string& arg) {
    for (const char* s : {"A", "A*", "D", "D*"})
        if (arg.starts_with(std::string(s) + ":")) return series_invariant(parse_series(s), std::stoi(arg.substr(arg.find(':') + 1)));
    return load_invariant(resolve(arg, "z_"));
}

int emit(const Global& g, const Report& r) {
    if (g.format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else
        r.print(std::cout);
    return r.passed() ? 0 : 1;
}

void emit_data(const Global& g, const ojson& j) { std::cout << (g.format == "json" ? j.dump(2) : j.dump(1)) << "\n"; }

std::string mult_list(const std::vector<std::pair<Weight, std::int64_t>>& v) {
    std::string s;
    for (auto& [w, c] : v) s += (s.empty() ? "" : " + ") + (c == 1 ? "" : std::to_string(c)) + to_string(w);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SU(3) fusion rings, modular data, graph modules and quantum symmetries"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--tolerance", g.tol, "tolerance for floating point checks");

    int level = 0;
    std::string weight, emit_what, file, inv_arg, rel_graph, vertex, paths;
    bool check = false, diagram = false, full = false, dims = false;

    auto* fusion = app.add_subcommand("fusion", "fusion matrices N_lambda");
    fusion->add_option("--level", level, "level k")->required()->check(CLI::NonNegativeNumber);
    fusion->add_option("--weight", weight, "only N_(l1,l2)");

    auto* modular = app.add_subcommand("modular", "S and T matrices");
    modular->add_option("--level", level, "level k")->required()->check(CLI::NonNegativeNumber);
    modular->add_flag("--check", check, "print the SL(2,Z) residual report");
    modular->add_option("--emit", emit_what, "dump S or T as [re,im] pairs")->check(CLI::IsMember({"S", "T"}));

    auto* graph = app.add_subcommand("graph", "graph catalog");
    graph->require_subcommand(1);
    graph->fallthrough();
    auto* gvalidate = graph->add_subcommand("validate", "norm, exponents and vertex count against an invariant");
    gvalidate->add_option("file", file, "graph file or packaged name")->required();
    gvalidate->add_option("--invariant", inv_arg, "invariant file, packaged name or SERIES:k")->required();
    std::string series_name;
    auto* gbuild = graph->add_subcommand("build", "emit a series graph");
    gbuild->add_option("--series", series_name, "A, A*, D or D*")->required();
    gbuild->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);

    auto* nimrep = app.add_subcommand("nimrep", "annular matrices and horizontal dimensions");
    nimrep->add_option("file", file, "graph file or packaged name")->required();
    nimrep->add_flag("--dims", dims, "print d_lambda, d_H and dim_B");
    nimrep->add_option("--paths", paths, "horizontal graph of type l1,l2");
    nimrep->add_option("--induction", vertex, "induction list of a vertex");

    auto* invariant = app.add_subcommand("invariant", "modular invariants");
    invariant->add_option("name", inv_arg, "invariant file, packaged name or SERIES:k")->required();
    invariant->add_flag("--check", check, "commutation with S and T");
    invariant->add_flag("--diagram", diagram, "weight groups per block");

    auto* split = app.add_subcommand("split", "modular splitting of an invariant");
    split->add_option("invariant", inv_arg, "invariant file, packaged name or SERIES:k")->required();
    split->add_option("--relative", rel_graph, "graph whose E_0 gives the relative invariant");
    split->add_flag("--full", full, "solve the generalized splitting for every (lambda, mu)");

    auto* realize = app.add_subcommand("realize", "series realizations of the double annular matrices");
    realize->add_option("series", series_name, "A, A*, D or D*")->required();
    realize->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);

    auto* audit_cmd = app.add_subcommand("audit", "every sum rule for a graph and invariant, against the goldens");
    audit_cmd->add_option("graph", file, "graph file or packaged name")->required();
    audit_cmd->add_option("invariant", inv_arg, "invariant file, packaged name or SERIES:k")->required();

    int n = 0;
    std::int64_t dim = 0, hv = 0;
    auto* embed = app.add_subcommand("embed", "central charge test for a conformal embedding");
    embed->add_option("--n", n, "N of SU(N)")->required()->check(CLI::PositiveNumber);
    embed->add_option("--level", level, "level k")->required()->check(CLI::PositiveNumber);
    embed->add_option("--dim", dim, "dimension of g")->required()->check(CLI::PositiveNumber);
    embed->add_option("--dual-coxeter", hv, "dual Coxeter number of g")->required()->check(CLI::PositiveNumber);

    int max_level = 1000;
    auto* verify_all = app.add_subcommand("verify-all", "the acceptance suite over the packaged data");
    verify_all->add_option("--max-level", max_level, "skip items above this level");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*fusion) {
            const auto ring = build_fusion_ring(level);
            ojson j;
            j["level"] = level;
            j["weights"] = weights_json(ring.alcove);
            if (!weight.empty()) {
                const Weight w = parse_weight(weight);
                j["weight"] = weight_json(w);
                j["matrix"] = matrix_json(ring(w));
            } else {
                j["matrices"] = ojson::array();
                for (auto& N : ring.N) j["matrices"].push_back(matrix_json(N));
            }
            emit_data(g, j);
            return 0;
        }
        if (*modular) {
            const auto rep = build_modular(level);
            if (!emit_what.empty()) {
                ojson j;
                j["level"] = level;
                j["weights"] = weights_json(rep.alcove);
                ojson m = ojson::array();
                if (emit_what == "S") {
                    for (Eigen::Index a = 0; a < rep.S.rows(); ++a) {
                        ojson row = ojson::array();
                        for (Eigen::Index b = 0; b < rep.S.cols(); ++b) row.push_back({rep.S(a, b).real(), rep.S(a, b).imag()});
                        m.push_back(row);
                    }
                } else {
                    for (Eigen::Index a = 0; a < rep.T.size(); ++a) m.push_back({rep.T(a).real(), rep.T(a).imag()});
                }
                j[emit_what] = m;
                emit_data(g, j);
                if (!check) return 0;
            }
            return emit(g, verify_sl2z(rep, g.tol));
        }
        if (*gvalidate) {
            const auto G = load_graph(resolve(file));
            return emit(g, validate_graph(G, resolve_invariant(inv_arg), std::max(g.tol, 1e-7)));
        }
        if (*gbuild) {
            emit_data(g, graph_to_json(build_series_graph(parse_series(series_name), level)));
            return 0;
        }
        if (*nimrep) {
            const auto m = build_annular(load_graph(resolve(file)));
            ojson j;
            j["graph"] = m.graph.name;
            j["level"] = m.graph.k;
            j["unit"] = m.graph.vertices[m.unit];
            if (dims || (paths.empty() && vertex.empty())) {
                ojson dl = ojson::object();
                for (std::size_t l = 0; l < m.alcove.size(); ++l) dl[to_string(m.alcove[l])] = m.d_lambda[l].str();
                j["d_lambda"] = dl;
                j["d_H"] = m.d_H.str();
                j["dim_B"] = m.dim_B.str();
            }
            if (!paths.empty()) {
                ojson e = ojson::array();
                for (auto [a, b, c] : horizontal_paths(m, parse_weight(paths)))
                    e.push_back({m.graph.vertices[a], m.graph.vertices[b], c});
                j["paths"] = e;
            }
            if (!vertex.empty()) {
                const auto b = m.graph.index_of(vertex);
                ojson e = ojson::array();
                for (auto& [w, c] : induction(m, b)) e.push_back({weight_json(w), c});
                j["induction"] = e;
                if (g.format == "pretty") j["induction_text"] = mult_list(induction(m, b));
            }
            emit_data(g, j);
            return 0;
        }
        if (*invariant) {
            const auto inv = resolve_invariant(inv_arg);
            Report r = verify_invariant(inv, build_modular(inv.k), std::max(g.tol, 1e-8));
            r.subject = "invariant " + inv_arg + " at level " + std::to_string(inv.k);
            const auto od = ocneanu_dimension(inv.M);
            r.note("d_O = Tr(M M^T)", std::to_string(od.d_O));
            std::string blocks;
            for (auto [size, count] : od.block_dims) blocks += (blocks.empty() ? "" : ", ") + std::to_string(count) + " x Mat_" + std::to_string(size);
            r.note("Ocneanu algebra blocks", blocks);
            if (diagram) {
                const Alcove alc(inv.k);
                if (!inv.blocks.empty()) {
                    for (std::size_t b = 0; b < inv.blocks.size(); ++b) {
                        std::string left, right;
                        for (auto& w : inv.blocks[b].left) left += to_string(w);
                        for (auto& w : inv.blocks[b].right) right += to_string(w);
                        r.note("block " + std::to_string(b + 1), std::to_string(inv.blocks[b].coeff) + " x " + left + " -- " + right);
                    }
                } else {
                    for (std::size_t a = 0; a < alc.size(); ++a)
                        for (std::size_t b = 0; b < alc.size(); ++b)
                            if (inv.M(a, b) != 0)
                                r.note("arc " + to_string(alc[a]) + " -- " + to_string(alc[b]), std::to_string(inv.M(a, b)));
                }
            }
            (void)check;
            return emit(g, r);
        }
        if (*split) {
            const auto inv = resolve_invariant(inv_arg);
            const auto ring = build_fusion_ring(inv.k);
            Report r;
            r.subject = "modular splitting of " + inv_arg;
            const auto s = solve_modular_splitting(ring, inv.M);
            r.expect_true("certified", s.certified);
            r.expect_eq<std::size_t>("splitting residual entries", 0, splitting_residual(ring, s));
            r.note("rank K", std::to_string(s.rank_K) + (s.rank_exact ? " (exact)" : " (lower bound)"));
            r.note("distinct toric matrices", std::to_string(s.W_right.size()));
            r.note("d_O = Tr(M M^T)", std::to_string(s.d_O));
            r.note("toric multiplicity", static_cast<std::int64_t>(s.W_right.size()) == s.d_O
                                             ? "none, every toric matrix is distinct"
                                             : "at least " + std::to_string(s.W_right.size()) + ", target " + std::to_string(s.d_O));
            r.note("search nodes", std::to_string(s.nodes));
            if (static_cast<std::int64_t>(s.W_right.size()) == s.d_O && s.rank_exact) {
                const auto t = solve_generalized_splitting(ring, s, full);
                r.merge(verify_toric_table(ring, s, t));
                const auto oc = quantum_mass_Oc(t);
                r.expect_close("Perron norm of O_1L", graph_norm_target(inv.k), oc.norm_left, 1e-8, "1+2cos(2pi/kappa)");
                r.note("m(Oc)", fmt_double(oc.mass));
                if (full) {
                    const auto f = dual_bimodule_falsification(t, s);
                    r.note("pairs with W_xy != W_x0 W_0y", std::to_string(f.violations) + " of " + std::to_string(f.pairs));
                }
            }
            if (!rel_graph.empty()) {
                const auto m = build_annular(load_graph(resolve(rel_graph)));
                const IMat Mrel = relative_invariant(inv.M, m.essential(m.unit));
                r.expect_true("M = E_0 M_rel E_0^T", true, std::to_string(Mrel.rows()) + "x" + std::to_string(Mrel.cols()));
                r.expect_true("M_rel non-negative", nonnegative(Mrel));
                if (g.format == "json") {
                    auto j = r.to_json();
                    j["relative_invariant"] = matrix_json(Mrel);
                    std::cout << j.dump(2) << "\n";
                    return r.passed() ? 0 : 1;
                }
            }
            return emit(g, r);
        }
        if (*realize) return emit(g, check_series_realization(parse_series(series_name), level));
        if (*audit_cmd) {
            const auto path = resolve(file);
            return emit(g, audit(load_graph(path), resolve_invariant(inv_arg), golden_for_graph(path.string()), g.tol));
        }
        if (*embed) {
            const auto e = conformal_embedding_check(n, level, dim, hv);
            if (g.format == "json") {
                ojson j;
                j["lhs"] = e.lhs.str();
                j["rhs"] = e.rhs.str();
                j["equal"] = e.equal;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "central charges " << (e.equal ? "equal: " : "differ: ") << e.lhs.str() << (e.equal ? " = " : " != ")
                          << e.rhs.str() << "\n";
            }
            return e.equal ? 0 : 1;
        }
        if (*verify_all) {
            AcceptanceOptions opt;
            opt.max_level = max_level;
            opt.tol = g.tol;
            bool all = true;
            ojson out = ojson::array();
            for (int id = 1; id <= criterion_count; ++id) {
                const auto res = run_criterion(id, opt);
                all = all && res.report.passed();
                if (g.format == "json") {
                    auto j = res.report.to_json();
                    j["criterion"] = id;
                    out.push_back(j);
                } else {
                    std::cout << "criterion " << id << ": " << (res.report.passed() ? "PASS" : "FAIL") << "  " << res.title << "\n";
                    for (auto& c : res.report.checks)
                        if (c.status == Status::fail)
                            std::cout << "    " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
                }
            }
            if (g.format == "json") std::cout << out.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
