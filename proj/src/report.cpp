#include "hankel/report.hpp"

#include "hankel/hankel_matrix.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/symbol_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hankel {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i] + 2);
        }
        out += line + "\n";
    }
    return out;
}

// JSON has no inf/nan; those go out as strings.
nlohmann::json number(double x) {
    if (!std::isfinite(x)) return format_double(x);
    return x;
}

std::string_view to_string(Comparison c) {
    switch (c) {
    case Comparison::Equal: return "eq";
    case Comparison::AtLeast: return "ge";
    case Comparison::InRange: return "in";
    }
    return "?";
}

// Signed gap of block 1 against the H^2 norm; root finding target for the thresholds.
double first_block_gap(const Symbol& s) {
    return spectral_norm(build_block(s, 1)).value - h2_norm(s);
}

template <class Gap>
double bisect_threshold(Gap gap, double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) <= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

ReportRow make_row(std::string quantity, const NormEstimate& est) {
    return {std::move(quantity), est.value, std::string(to_string(est.method)), est.error_bound};
}

ReportRow make_row(std::string quantity, const BoundReport& report) {
    return {std::move(quantity), report.bound_value, std::string(to_string(report.method)),
            report.witness ? report.witness->h1.error_bound * report.bound_value / report.witness->h1.value : 0.0};
}

std::string render_table(std::span<const ReportRow> rows) {
    std::vector<std::vector<std::string>> cells{{"quantity", "value", "method", "error_bound"}};
    for (const auto& r : rows) {
        cells.push_back({r.quantity, format_double(r.value), r.method, format_double(r.error_bound)});
    }
    return aligned(cells);
}

std::string render_json(std::span<const ReportRow> rows) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"quantity", r.quantity},
                       {"value", number(r.value)},
                       {"method", r.method},
                       {"error_bound", number(r.error_bound)}});
    }
    return arr.dump(2) + "\n";
}

std::string render_verdict(const MinimalityVerdict& v) {
    std::vector<std::vector<std::string>> cells{
        {"status", std::string(to_string(v.status)) + (v.boundary ? " (boundary)" : "")},
        {"gap", format_double(v.gap)},
        {"tolerance", format_double(v.tolerance)},
        {"operator_norm", format_double(v.operator_norm)},
        {"h2_norm", format_double(v.h2_norm)},
        {"note", v.note},
    };
    if (v.block_norms) {
        for (const auto& [k, n] : *v.block_norms) cells.push_back({"block " + std::to_string(k), format_double(n)});
    }
    return aligned(cells);
}

std::string render_verdict_json(const MinimalityVerdict& v) {
    nlohmann::json j{{"status", std::string(to_string(v.status))},
                     {"boundary", v.boundary},
                     {"gap", number(v.gap)},
                     {"tolerance", number(v.tolerance)},
                     {"operator_norm", number(v.operator_norm)},
                     {"h2_norm", number(v.h2_norm)},
                     {"note", v.note}};
    if (v.block_norms) {
        auto blocks = nlohmann::json::array();
        for (const auto& [k, n] : *v.block_norms) blocks.push_back({{"k", k}, {"norm", number(n)}});
        j["block_norms"] = blocks;
    }
    return j.dump(2) + "\n";
}

double ReproRow::difference() const {
    switch (comparison) {
    case Comparison::Equal: return std::abs(computed - reference);
    case Comparison::AtLeast: return std::max(0.0, reference - computed);
    case Comparison::InRange: return std::max({0.0, reference - computed, computed - reference_hi});
    }
    return 0.0;
}

bool ReproRow::pass() const {
    return difference() <= tolerance;
}

std::vector<ReproRow> reproduce_all(const ReproduceOptions& opts) {
    using std::numbers::pi;
    const double sqrt3 = std::numbers::sqrt3;
    std::vector<ReproRow> rows;
    auto eq = [&](std::string name, double computed, double reference, double tol) {
        rows.push_back({std::move(name), computed, reference, tol, Comparison::Equal, 0.0});
    };

    const Symbol z1z2 = Symbol::variable(2, 0) + Symbol::variable(2, 1);
    eq("opnorm_z1+z2", operator_norm(z1z2).value, std::numbers::sqrt2, 1e-12);
    eq("opnorm_phi_d2", operator_norm(ocs_product(2)).value, 2.0, 1e-9);
    eq("opnorm_phi_d3", operator_norm(ocs_product(3)).value, std::pow(2.0, 1.5), 1e-9);
    eq("M_phi2_1_norm_a0.3", spectral_norm(build_block(quadratic_family(0.3), 1)).value, 1.3, 1e-10);
    const double gram = std::pow(spectral_norm(build_block(cubic_family(0.4), 1)).value, 2);
    eq("M_phi3_1_gram_b0.4", gram, 1.0 + 2 * 0.4 + 3 * 0.4 * 0.4, 1e-10);
    eq("phi2_threshold_a",
       bisect_threshold([](double a) { return first_block_gap(quadratic_family(a)); }, 0.0, 1.0), 0.5, 1e-9);
    eq("phi3_threshold_b",
       bisect_threshold([](double b) { return first_block_gap(cubic_family(b)); }, 0.0, 1.0),
       std::numbers::sqrt2 - 1.0, 1e-9);
    eq("opnorm_phi2_a1", operator_norm(quadratic_family(1.0)).value, 2.0, 1e-10);

    const Symbol f = quadratic_family(1.0);
    const Symbol phi = quadratic_family(0.5);
    QuadratureSpec grid;
    grid.points_per_dimension = opts.h1_grid;
    const auto witness = dual_bound(f, phi, grid);
    const double h1_exact = 1.0 / 3.0 + 2.0 * sqrt3 / pi;
    const double c2_exact = 5.0 * pi / (pi + 6.0 * sqrt3);
    eq("pairing_thm5", witness.witness->pairing.real(), 2.5, 0.0);
    eq("opnorm_thm5_phi", witness.witness->operator_norm.value, 1.5, 1e-10);
    eq("H1_f", witness.witness->h1.value, h1_exact, 1e-6);
    eq("H1_f_reduced", h1_norm_2hom(f, default_quadrature(2)).value, h1_exact, 1e-10);
    eq("C2_dual_witness", witness.bound_value, c2_exact, 1e-5);
    eq("C2_lower", cd_lower(2).bound_value, c2_exact, 1e-12);
    eq("OCS_lower_d2", ocs_lower(2).bound_value, pi / (2.0 * std::numbers::sqrt2), 1e-12);

    for (double q : {1.0, 1.5}) {
        rows.push_back({"hq_lower_q" + format_double(q), 1.0 / hq_norm_basic(q).value, plower_rhs(q), 1e-8,
                        Comparison::AtLeast, 0.0});
    }
    eq("hq_lower_q2", 1.0 / hq_norm_basic(2.0).value, 1.0, 1e-10);

    eq("cex_h2_K1", h2_norm(cex_truncation(1)), std::sqrt(6.0) / pi, 1e-12);
    eq("cex_gap_K2", classify(cex_truncation(2)).gap, 0.0, 1e-9);
    const auto ratios = cex_ratio_sequence(200, 1.0);
    rows.push_back({"cex_ratio_max_k200_q1", *std::max_element(ratios.begin(), ratios.end()), 1e3, 0.0,
                    Comparison::AtLeast, 0.0});

    const auto search = search_c2(0.5, 0.0, 2.0);
    rows.push_back({"search_c2_best_c", search.best_c, 0.8, 0.0, Comparison::InRange, 0.9});
    rows.push_back({"search_c2_bound", search.report.bound_value, c2_exact, 1e-9, Comparison::AtLeast, 0.0});

    const PsiSeries psi{opts.psi_truncation};
    eq("psi_projection_is_z1+z2", psi_projection(psi) == z1z2 ? 1.0 : 0.0, 1.0, 0.0);
    eq("psi_sup", psi_sup_estimate(opts.psi_truncation, opts.psi_grid).value, pi / 2.0, 2e-3);
    return rows;
}

std::string render_repro_table(std::span<const ReproRow> rows) {
    std::vector<std::vector<std::string>> cells{{"name", "computed", "reference", "cmp", "abs_diff", "tol", "status"}};
    for (const auto& r : rows) {
        std::string ref = format_double(r.reference);
        if (r.comparison == Comparison::InRange) ref = "(" + ref + ", " + format_double(r.reference_hi) + ")";
        cells.push_back({r.name, format_double(r.computed), ref, std::string(to_string(r.comparison)),
                         format_double(r.difference()), format_double(r.tolerance), r.pass() ? "ok" : "FAIL"});
    }
    return aligned(cells);
}

std::string render_repro_json(std::span<const ReproRow> rows) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j{{"name", r.name},
                         {"computed", number(r.computed)},
                         {"reference", number(r.reference)},
                         {"cmp", std::string(to_string(r.comparison))},
                         {"abs_diff", number(r.difference())},
                         {"tol", number(r.tolerance)},
                         {"pass", r.pass()}};
        if (r.comparison == Comparison::InRange) j["reference_hi"] = number(r.reference_hi);
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

} // namespace hankel
