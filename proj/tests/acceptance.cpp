// Acceptance suite: one PASS/FAIL line per criterion, with wall time against its limit.

#include "generators.hpp"

#include "hankel/hankel_matrix.hpp"
#include "hankel/minimal_norm.hpp"
#include "hankel/nehari.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/recipe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace hankel;
using std::numbers::pi;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "failed: ";
            else detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(secs < limit_s, "runtime over limit");
    if (!out.ok) ++failures;
    std::printf("criterion %d %-34s %s  (%.2f s / %.0f s)  %s\n", id, title, out.ok ? "PASS" : "FAIL", secs, limit_s,
                out.detail.str().c_str());
    std::fflush(stdout);
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double grid_l2(const Symbol& s, std::size_t n) {
    const std::size_t d = s.dimension();
    std::vector<double> theta(d);
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= n;
    double sum = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t r = t;
        for (std::size_t j = 0; j < d; ++j, r /= n) theta[j] = 2.0 * pi * static_cast<double>(r % n) / static_cast<double>(n);
        sum += std::norm(evaluate(s, theta));
    }
    return std::sqrt(sum / static_cast<double>(total));
}

Symbol strip_constant(const Symbol& s) {
    return s + scale(Symbol::constant(s.dimension(), 1.0), -s.coefficient(MultiIndex(s.dimension())));
}

void property_suites(Outcome& out) {
    gen::Rng rng(20261019);
    int bad_blockmax = 0, bad_adjoint = 0, bad_mult = 0, bad_sub = 0, bad_sandwich = 0, bad_parseval = 0,
        bad_recipe = 0, bad_d1 = 0;

    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
        const unsigned m = static_cast<unsigned>(rng.integer(1, 4));
        const Symbol s = gen::homogeneous(rng, d, m, rng.integer(1, 5));
        double best = 0.0;
        for (const auto& [k, n] : block_norms(s, 0, m)) best = std::max(best, n);
        if (std::abs(operator_norm(s).value - best) > 1e-10) ++bad_blockmax;
        const std::uint64_t k = static_cast<std::uint64_t>(rng.integer(0, static_cast<int>(m)));
        const double lhs = spectral_norm(build_block(s, k)).value;
        if (std::abs(lhs - spectral_norm(build_block(reflect(s), m - k)).value) > 1e-10) ++bad_adjoint;
    }

    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(2, 4));
        const std::size_t split = static_cast<std::size_t>(rng.integer(1, static_cast<int>(d) - 1));
        const Symbol a = gen::on_variables(rng, d, 0, split, rng.integer(1, 3), 2);
        const Symbol b = gen::on_variables(rng, d, split, d - split, rng.integer(1, 3), 2);
        const double na = operator_norm(a).value, nb = operator_norm(b).value;
        if (std::abs(operator_norm(a * b).value - na * nb) > 1e-9) ++bad_mult;
        const Symbol a0 = strip_constant(a), b0 = strip_constant(b);
        if (!a0.is_zero() && !b0.is_zero()) {
            const double n0a = operator_norm(a0).value, n0b = operator_norm(b0).value;
            if (std::pow(operator_norm(a0 + b0).value, 2) > n0a * n0a + n0b * n0b + 1e-9) ++bad_sub;
        }
    }

    QuadratureSpec sup_spec;
    sup_spec.points_per_dimension = 64;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(1, 2));
        Symbol s = gen::symbol(rng, d, rng.integer(1, 4), 3);
        if (s.is_zero()) s = Symbol::constant(d, 1.0);
        const double op = operator_norm(s).value;
        const auto sup = hp_norm(s, kInfinity, sup_spec);
        if (h2_norm(s) > op + 1e-10 || op > sup.value + sup.error_bound) ++bad_sandwich;
        if (std::abs(grid_l2(s, 8) - h2_norm(s)) > 1e-12 * std::max(1.0, h2_norm(s))) ++bad_parseval;
    }

    for (int i = 0; i < 100; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(1, 8));
        const auto v = classify(build_recipe(gen::recipe(rng, d, 0, d, 3, d <= 4 ? 2 : 1)));
        if (!v.minimal() || v.gap > 1e-9) ++bad_recipe;
    }

    int d1_cases = 0;
    for (int code = 0; code < 729; ++code) {
        std::vector<std::pair<MultiIndex, Complex>> t;
        int c = code;
        for (unsigned e = 0; e <= 5; ++e, c /= 3) t.emplace_back(MultiIndex{e}, static_cast<double>(c % 3 - 1));
        const Symbol s(1, t);
        if (s.is_zero()) continue;
        ++d1_cases;
        if (d1_monomial_test(s) != classify(s, 1e-9).minimal()) ++bad_d1;
    }

    out.require(bad_blockmax == 0, "block-max " + std::to_string(bad_blockmax));
    out.require(bad_adjoint == 0, "adjoint " + std::to_string(bad_adjoint));
    out.require(bad_mult == 0, "multiplicativity " + std::to_string(bad_mult));
    out.require(bad_sub == 0, "subadditivity " + std::to_string(bad_sub));
    out.require(bad_sandwich == 0, "sandwich " + std::to_string(bad_sandwich));
    out.require(bad_parseval == 0, "parseval " + std::to_string(bad_parseval));
    out.require(bad_recipe == 0, "recipe " + std::to_string(bad_recipe));
    out.require(bad_d1 == 0 && d1_cases == 728, "d=1 " + std::to_string(bad_d1));
    if (out.ok) out.detail << "8 suites, 700 random + 728 exhaustive cases, 0 failures";
}

} // namespace

int main() {
    criterion(1, "quadratic family threshold", 1.0, [](Outcome& out) {
        for (double a : {0.0, 0.25, 0.5, 0.51, 0.75, 1.0}) {
            const auto v = classify_homogeneous(quadratic_family(a));
            out.require(v.minimal() == (a <= 0.5), "status at a=" + num(a));
            const double block = spectral_norm(build_block(quadratic_family(a), 1)).value;
            out.require(std::abs(block - (1.0 + a)) <= 1e-10, "block norm at a=" + num(a));
        }
        if (out.ok) out.detail << "flip between 0.5 and 0.51; block norm 1+a";
    });

    criterion(2, "cubic family threshold", 1.0, [](Outcome& out) {
        out.require(classify_homogeneous(cubic_family(0.414)).minimal(), "b=0.414 not minimal");
        out.require(!classify_homogeneous(cubic_family(0.415)).minimal(), "b=0.415 minimal");
        for (double b : {0.0, 0.2, 0.414, 0.415, 0.7, 1.0}) {
            const double gram = std::pow(spectral_norm(build_block(cubic_family(b), 1)).value, 2);
            out.require(std::abs(gram - (1 + 2 * b + 3 * b * b)) <= 1e-10, "Gram norm at b=" + num(b));
        }
        if (out.ok) out.detail << "flip between 0.414 and 0.415; Gram norm 1+2b+3b^2";
    });

    criterion(3, "product symbols 2^{d/2}", 30.0, [](Outcome& out) {
        for (std::size_t d = 1; d <= 3; ++d) {
            const double v = operator_norm(ocs_product(d)).value;
            out.require(std::abs(v - std::pow(2.0, 0.5 * static_cast<double>(d))) <= 1e-9, "d=" + std::to_string(d));
            out.detail << "d=" << d << ":" << num(v) << " ";
        }
    });

    criterion(4, "dual-pairing witness", 5.0, [](Outcome& out) {
        QuadratureSpec spec;
        spec.points_per_dimension = 2048;
        const auto r = dual_bound(quadratic_family(1.0), quadratic_family(0.5), spec);
        const double h1 = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / pi;
        const double c2 = 5.0 * pi / (pi + 6.0 * std::sqrt(3.0));
        out.require(r.witness->pairing == Complex(2.5), "pairing " + num(r.witness->pairing.real()));
        out.require(std::abs(r.witness->operator_norm.value - 1.5) <= 1e-10, "operator norm");
        out.require(std::abs(r.witness->h1.value - h1) <= 1e-6, "H1 " + num(r.witness->h1.value));
        out.require(std::abs(r.bound_value - c2) <= 1e-5, "bound " + num(r.bound_value));
        out.detail << "bound " << num(r.bound_value) << ", H1 diff " << num(std::abs(r.witness->h1.value - h1));
    });

    criterion(5, "closed-form bounds, even d <= 20", 1.0, [](Outcome& out) {
        for (std::size_t d = 2; d <= 20; d += 2) {
            out.require(cd_lower(d).bound_value > ocs_lower(d).bound_value, "d=" + std::to_string(d));
        }
        out.require(std::abs(cd_lower(2).bound_value - 5.0 * pi / (pi + 6.0 * std::sqrt(3.0))) <= 1e-12, "cd_lower(2)");
        out.require(std::abs(ocs_lower(2).bound_value - pi / (2.0 * std::sqrt(2.0))) <= 1e-12, "ocs_lower(2)");
        out.detail << "cd_lower(2)=" << num(cd_lower(2).bound_value) << " ocs_lower(2)=" << num(ocs_lower(2).bound_value);
    });

    criterion(6, "H^q lower estimate, q in [1,2]", 2.0, [](Outcome& out) {
        double worst = 1e300;
        for (int i = 0; i <= 10; ++i) {
            const double q = 1.0 + 0.1 * i;
            const double margin = 1.0 / hq_norm_basic(q).value - plower_rhs(q);
            worst = std::min(worst, margin);
            out.require(margin >= -1e-8, "q=" + num(q));
        }
        out.require(std::abs(1.0 / hq_norm_basic(2.0).value - 1.0) <= 1e-10, "q=2 lhs");
        out.require(std::abs(plower_rhs(2.0) - 1.0) <= 1e-10, "q=2 rhs");
        out.detail << "smallest margin " << num(worst);
    });

    criterion(7, "counterexample truncations", 60.0, [](Outcome& out) {
        double prev = 0.0;
        for (std::size_t K = 1; K <= 12; ++K) {
            double sum = 0.0;
            for (std::size_t k = 1; k <= K; ++k) sum += 1.0 / static_cast<double>(k * k);
            const double h2 = h2_norm(cex_truncation(K));
            out.require(std::abs(h2 - std::sqrt(6.0) / pi * std::sqrt(sum)) <= 1e-12, "h2 at K=" + std::to_string(K));
            out.require(h2 > prev && h2 < 1.0, "monotone at K=" + std::to_string(K));
            prev = h2;
        }
        out.require(std::abs(cex_h2_closed_form(1'000'000) - 1.0) <= 1e-6, "limit 1");
        const auto v = classify(cex_truncation(2));
        out.require(v.minimal() && v.gap <= 1e-9, "K=2 not minimal");
        const auto ratios = cex_ratio_sequence(200, 1.0);
        const auto first = std::find_if(ratios.begin(), ratios.end(), [](double r) { return r > 1e3; });
        out.require(first != ratios.end(), "no R_k > 1e3 for k <= 200");
        if (first != ratios.end()) out.detail << "R_k(1) > 1e3 from k=" << (first - ratios.begin() + 1);
        out.detail << ", gap(K=2)=" << num(v.gap);
    });

    criterion(8, "psi corroboration", 60.0, [](Outcome& out) {
        for (std::size_t K : {1u, 2u, 10u, 10'000u}) {
            const Symbol expect = Symbol::variable(2, 0) + Symbol::variable(2, 1);
            out.require(psi_projection(PsiSeries{K}) == expect, "projection at K=" + std::to_string(K));
        }
        const auto est = psi_sup_estimate(10'000, 512);
        out.require(std::abs(est.value - pi / 2.0) <= 2e-3, "sup " + num(est.value) + " vs pi/2, diff " +
                                                               num(est.value - pi / 2.0) + " > 2e-3");
        out.detail << " (certified lower " << est.metadata.at("certified_lower") << ")";
    });

    criterion(9, "property suites", 120.0, property_suites);

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
