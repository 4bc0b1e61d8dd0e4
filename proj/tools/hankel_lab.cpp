// hankel_lab: command-line front end for small Hankel operators with
// polynomial symbols on the d-torus.
//
// Exit codes: 0 success, 1 domain/contract error, 2 parse error.

#include "hankel/errors.hpp"
#include "hankel/hankel_matrix.hpp"
#include "hankel/minimal_norm.hpp"
#include "hankel/nehari.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/recipe.hpp"
#include "hankel/report.hpp"
#include "hankel/symbol_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hankel;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct Config {
    bool json = false;
    double tol = kDefaultTolerance;
    std::size_t grid = 0; // 0: per-dimension default
    std::uint64_t seed = QuadratureSpec{}.seed;
    std::size_t samples = QuadratureSpec{}.samples;
    std::size_t trunc = 10'000;
    bool dump = false;
    std::string recipe;
    std::string method = "tensor";
    std::string p = "1";
    std::vector<std::string> inputs;
    double a = 0.5;
    double c_lo = 0.0;
    double c_hi = 2.0;
    double q = 1.0;
    std::size_t kmax = 200;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

QuadratureSpec quadrature_for(const Config& cfg, std::size_t dimension) {
    QuadratureSpec spec = default_quadrature(dimension);
    if (cfg.grid) spec.points_per_dimension = cfg.grid;
    spec.seed = cfg.seed;
    spec.samples = cfg.samples;
    if (cfg.method == "monte-carlo") {
        spec.method = QuadratureMethod::MonteCarlo;
    } else if (cfg.method != "tensor") {
        throw ContractViolation("unknown quadrature method '" + cfg.method + "'");
    }
    return spec;
}

void header(const Config& cfg, const std::string& extra = "") {
    if (cfg.json) return;
    std::printf("# hankel_lab  tol=%s grid=%s trunc=%zu%s\n", format_double(cfg.tol).c_str(),
                cfg.grid ? std::to_string(cfg.grid).c_str() : "256(d<=2)/64(d>2)", cfg.trunc, extra.c_str());
}

void emit(const Config& cfg, const std::vector<ReportRow>& rows) {
    std::fputs((cfg.json ? render_json(rows) : render_table(rows)).c_str(), stdout);
}

int cmd_norm(const Config& cfg) {
    const Symbol s = read_symbol_file(cfg.inputs.at(0));
    header(cfg);
    std::vector<ReportRow> rows;
    rows.push_back({"h2_norm", h2_norm(s), "closed-form", 0.0});
    rows.push_back(make_row("operator_norm", operator_norm(s)));
    if (!s.is_zero() && s.dimension() <= 4) {
        rows.push_back(make_row("sup_norm_grid_lower", hp_norm(s, kInfinity, quadrature_for(cfg, s.dimension()))));
    }
    emit(cfg, rows);
    return 0;
}

int cmd_check_minimal(const Config& cfg) {
    MinimalityVerdict v;
    if (!cfg.recipe.empty()) {
        const Symbol s = build_recipe(parse_recipe(read_file(cfg.recipe)));
        v = classify_auto(s, cfg.tol);
        v.note += "; recipe certificate: sums and products of monomials in separate variables";
    } else {
        v = classify_auto(read_symbol_file(cfg.inputs.at(0)), cfg.tol);
    }
    header(cfg);
    std::fputs((cfg.json ? render_verdict_json(v) : render_verdict(v)).c_str(), stdout);
    return 0;
}

int cmd_blocks(const Config& cfg) {
    const Symbol s = read_symbol_file(cfg.inputs.at(0));
    const auto m = is_homogeneous(s);
    if (!m) throw ContractViolation("blocks: symbol is not homogeneous");
    header(cfg, " m=" + std::to_string(*m));
    std::vector<ReportRow> rows;
    for (std::uint64_t k = 0; k <= *m; ++k) {
        const auto block = build_block(s, k);
        rows.push_back(make_row("block_" + std::to_string(k) + "_" + std::to_string(block.rows()) + "x" +
                                    std::to_string(block.cols()),
                                spectral_norm(block)));
        if (cfg.dump && !cfg.json) std::fputs(dump_matrix(block).c_str(), stdout);
    }
    emit(cfg, rows);
    return 0;
}

int cmd_hp_norm(const Config& cfg) {
    const Symbol s = read_symbol_file(cfg.inputs.at(0));
    const double p = (cfg.p == "inf" || cfg.p == "infinity") ? kInfinity : parse_double(cfg.p, 0);
    const auto spec = quadrature_for(cfg, s.dimension());
    header(cfg, " method=" + cfg.method);
    std::vector<ReportRow> rows{make_row("hp_norm_p" + cfg.p, hp_norm(s, p, spec))};
    if (spec.method == QuadratureMethod::TensorUniform && std::isfinite(p) && is_homogeneous(s) &&
        variable_support(s).size() <= 2) {
        rows.push_back(make_row("hp_norm_p" + cfg.p + "_reduced", hp_norm_2hom(s, p, spec)));
    }
    emit(cfg, rows);
    return 0;
}

int cmd_nehari_bound(const Config& cfg) {
    if (cfg.inputs.size() != 2) throw ContractViolation("nehari-bound needs <f file> <phi file>");
    const Symbol f = read_symbol_file(cfg.inputs[0]);
    const Symbol phi = read_symbol_file(cfg.inputs[1]);
    const auto report = dual_bound(f, phi, quadrature_for(cfg, f.dimension()));
    header(cfg);
    const auto& w = *report.witness;
    std::vector<ReportRow> rows{
        {"pairing", std::abs(w.pairing), "closed-form", 0.0},
        make_row("operator_norm_phi", w.operator_norm),
        make_row("h1_norm_f", w.h1),
        {"ratio", w.ratio, "dual-pairing", 0.0},
        make_row("C" + std::to_string(report.d) + "_lower", report),
    };
    emit(cfg, rows);
    return 0;
}

int cmd_nehari_search(const Config& cfg) {
    const auto result = search_c2(cfg.a, cfg.c_lo, cfg.c_hi);
    header(cfg, " a=" + format_double(cfg.a));
    std::vector<ReportRow> rows{
        {"best_c", result.best_c, "search", 1e-6},
        make_row("C2_lower", result.report),
        {"C2_lower_closed_form", cd_lower(2).bound_value, "closed-form", 0.0},
    };
    emit(cfg, rows);
    return 0;
}

int cmd_cex(const Config& cfg) {
    header(cfg, " q=" + format_double(cfg.q));
    std::vector<ReportRow> rows;
    const std::size_t K = std::min<std::size_t>(cfg.trunc, 12);
    for (std::size_t k = 1; k <= K; ++k) {
        rows.push_back({"h2_truncation_K" + std::to_string(k), h2_norm(cex_truncation(k)), "closed-form", 0.0});
    }
    for (std::size_t k = 1; k <= std::min<std::size_t>(K, 3); ++k) {
        const auto v = classify(cex_truncation(k), cfg.tol);
        rows.push_back({"minimality_gap_K" + std::to_string(k), v.gap, "spectral-exact", cfg.tol});
    }
    const auto ratios = cex_ratio_sequence(cfg.kmax, cfg.q);
    std::size_t last = 0;
    for (std::size_t k = 1; k <= ratios.size(); k = k < 10 ? k + 1 : k * 2) {
        rows.push_back({"ratio_R" + std::to_string(k), ratios[k - 1], "closed-form", 0.0});
        last = k;
    }
    if (last != ratios.size()) {
        rows.push_back({"ratio_R" + std::to_string(ratios.size()), ratios.back(), "closed-form", 0.0});
    }
    rows.push_back({"ratio_max", *std::max_element(ratios.begin(), ratios.end()), "closed-form", 0.0});
    rows.push_back({"ratio_increasing_from_k", static_cast<double>(cex_ratio_increasing_from(cfg.q)),
                    "closed-form", 0.0});
    emit(cfg, rows);
    return 0;
}

int cmd_psi(const Config& cfg) {
    const std::size_t n = cfg.grid ? cfg.grid : 512;
    header(cfg, " psi_grid=" + std::to_string(n));
    const auto est = psi_sup_estimate(cfg.trunc, n);
    const auto proj = psi_projection(PsiSeries{cfg.trunc});
    std::vector<ReportRow> rows{
        make_row("psi_sup_grid", est),
        {"psi_sup_certified_lower", std::stod(est.metadata.at("certified_lower")), "grid-quadrature", 0.0},
        {"pi_over_2", std::acos(-1.0) / 2.0, "closed-form", 0.0},
    };
    emit(cfg, rows);
    if (!cfg.json) std::printf("# analytic projection:\n%s", write_symbol(proj).c_str());
    return 0;
}

int cmd_reproduce(const Config& cfg) {
    ReproduceOptions opts;
    opts.psi_truncation = cfg.trunc;
    if (cfg.grid) opts.psi_grid = cfg.grid;
    header(cfg);
    const auto rows = reproduce_all(opts);
    std::fputs((cfg.json ? render_repro_json(rows) : render_repro_table(rows)).c_str(), stdout);
    std::vector<std::string> failed;
    for (const auto& r : rows) {
        if (!r.pass()) failed.push_back(r.name);
    }
    if (!failed.empty()) {
        std::string list;
        for (const auto& n : failed) list += " " + n;
        std::fprintf(stderr, "reproduce: %zu row(s) out of tolerance:%s\n", failed.size(), list.c_str());
        return kExitDomain;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Small Hankel operators with polynomial symbols on the d-torus"};
    app.require_subcommand(1, 1);
    Config cfg;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json, "Emit JSON instead of a text table"); };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--grid", cfg.grid, "Quadrature points per angle")->check(CLI::Range(4, 1 << 20));
    };

    auto* norm = app.add_subcommand("norm", "H^2 norm, operator norm and sup-norm estimate");
    norm->add_option("symbol", cfg.inputs, "Symbol file")->required()->expected(1);
    add_grid(norm);
    add_json(norm);

    auto* check = app.add_subcommand("check-minimal", "Classify a symbol as minimal-norm or not");
    check->add_option("symbol", cfg.inputs, "Symbol file")->expected(0, 1);
    check->add_option("--recipe", cfg.recipe, "Recipe expression file instead of a symbol");
    check->add_option("--tol", cfg.tol, "Classification tolerance")->check(CLI::Range(1e-12, 1.0));
    add_json(check);

    auto* blocks = app.add_subcommand("blocks", "Norms of the homogeneous blocks H_{phi,k}");
    blocks->add_option("symbol", cfg.inputs, "Homogeneous symbol file")->required()->expected(1);
    blocks->add_flag("--dump", cfg.dump, "Print each block matrix");
    add_json(blocks);

    auto* hp = app.add_subcommand("hp-norm", "H^p norm by quadrature");
    hp->add_option("symbol", cfg.inputs, "Symbol file")->required()->expected(1);
    hp->add_option("--p", cfg.p, "Exponent p >= 1 or 'inf'");
    hp->add_option("--method", cfg.method, "tensor | monte-carlo");
    hp->add_option("--seed", cfg.seed, "Monte Carlo seed");
    hp->add_option("--samples", cfg.samples, "Monte Carlo samples")->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 40));
    add_grid(hp);
    add_json(hp);

    auto* bound = app.add_subcommand("nehari-bound", "Dual-pairing lower bound for C_d");
    bound->add_option("files", cfg.inputs, "<f file> <phi file>")->required()->expected(2);
    add_grid(bound);
    add_json(bound);

    auto* search = app.add_subcommand("nehari-search", "Optimize f = z1^2 + c z1 z2 + z2^2 against phi_2(a)");
    search->add_option("--a", cfg.a, "Middle coefficient of phi, |a| <= 1/2");
    search->add_option("--c-lo", cfg.c_lo, "Lower end of the c range");
    search->add_option("--c-hi", cfg.c_hi, "Upper end of the c range");
    add_json(search);

    auto* cex = app.add_subcommand("cex", "Truncations and dual ratios of the explicit counterexample");
    cex->add_option("--trunc", cfg.trunc, "Largest truncation K (capped at 12)")->check(CLI::Range(1, 1 << 30));
    cex->add_option("--q", cfg.q, "Dual exponent in [1, 2)");
    cex->add_option("--kmax", cfg.kmax, "Largest k for R_k(q)")->check(CLI::Range(1, 1 << 20));
    cex->add_option("--tol", cfg.tol, "Classification tolerance")->check(CLI::Range(1e-12, 1.0));
    add_json(cex);

    auto* psi = app.add_subcommand("psi", "Sup-norm of the partial sums of the Nehari solution for z1 + z2");
    psi->add_option("--trunc", cfg.trunc, "Truncation K")->check(CLI::Range(1, 1 << 30));
    psi->add_option("--grid", cfg.grid, "Grid size N >= 16")->check(CLI::Range(16, 1 << 16));
    add_json(psi);

    auto* repro = app.add_subcommand("reproduce", "Recompute every published number and compare");
    repro->add_option("--trunc", cfg.trunc, "psi truncation K")->check(CLI::Range(1, 1 << 30));
    repro->add_option("--grid", cfg.grid, "psi grid N")->check(CLI::Range(16, 1 << 16));
    add_json(repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*norm) return cmd_norm(cfg);
        if (*check) {
            if (cfg.recipe.empty() && cfg.inputs.empty()) throw ContractViolation("check-minimal needs a symbol file or --recipe");
            return cmd_check_minimal(cfg);
        }
        if (*blocks) return cmd_blocks(cfg);
        if (*hp) return cmd_hp_norm(cfg);
        if (*bound) return cmd_nehari_bound(cfg);
        if (*search) return cmd_nehari_search(cfg);
        if (*cex) return cmd_cex(cfg);
        if (*psi) return cmd_psi(cfg);
        if (*repro) return cmd_reproduce(cfg);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
    return kExitDomain;
}
