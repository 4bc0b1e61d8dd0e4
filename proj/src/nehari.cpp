#include "hankel/nehari.hpp"

#include "hankel/errors.hpp"
#include "hankel/hankel_matrix.hpp"
#include "hankel/minimal_norm.hpp"
#include "hankel/recipe.hpp"
#include "hankel/symbol_io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hankel {

namespace {

constexpr double kPi = std::numbers::pi;
const double kCexScale = std::sqrt(6.0) / kPi;

void check_even(std::size_t d, const char* who) {
    if (d < 2 || d % 2 != 0) {
        throw ContractViolation(std::string(who) + ": d = " + std::to_string(d) + " must be even and >= 2");
    }
}

Symbol quadratic(double middle) {
    return quadratic_family(middle);
}

// The H^1 quadrature used by the quadratic search; fine enough that the
// objective is smooth in c at the 1e-6 level.
QuadratureSpec search_quadrature() {
    QuadratureSpec spec;
    spec.points_per_dimension = 16;
    return spec;
}

} // namespace

std::string_view to_string(BoundMethod m) {
    switch (m) {
    case BoundMethod::PaperOcs: return "paper-ocs";
    case BoundMethod::PaperCdLower: return "paper-cdlower";
    case BoundMethod::DualPairing: return "dual-pairing";
    case BoundMethod::Search: return "search";
    }
    return "unknown";
}

BoundReport dual_bound(const Symbol& f, const Symbol& phi, const QuadratureSpec& spec) {
    if (f.dimension() != phi.dimension()) throw DimensionError("dual_bound: f and phi live in different dimensions");
    if (f.is_zero() || phi.is_zero()) throw ContractViolation("dual_bound: zero symbol");

    DualWitness w{f, phi, pairing(f, phi), operator_norm(phi), hp_norm(f, 1.0, spec), 0.0};
    w.ratio = std::abs(w.pairing) / (w.operator_norm.value * w.h1.value);

    BoundReport r;
    r.d = f.dimension();
    r.method = BoundMethod::DualPairing;
    r.bound_value = std::max(1.0, w.ratio);
    r.witness = std::move(w);
    return r;
}

BoundReport cd_lower(std::size_t d) {
    check_even(d, "cd_lower");
    BoundReport r;
    r.d = d;
    r.method = BoundMethod::PaperCdLower;
    r.bound_value = std::pow(5.0 * kPi / (kPi + 6.0 * std::numbers::sqrt3), static_cast<double>(d) / 2.0);
    return r;
}

BoundReport ocs_lower(std::size_t d) {
    check_even(d, "ocs_lower");
    BoundReport r;
    r.d = d;
    r.method = BoundMethod::PaperOcs;
    r.bound_value = std::pow(kPi * kPi / 8.0, static_cast<double>(d) / 4.0);
    return r;
}

double quadratic_dual_ratio(double a, double c) {
    const Symbol phi = quadratic(a);
    const Symbol f = quadratic(c);
    const double h1 = h1_norm_2hom(f, search_quadrature()).value;
    return std::abs(pairing(f, phi)) / (operator_norm(phi).value * h1);
}

SearchResult search_c2(double a, double c_lo, double c_hi) {
    if (std::abs(a) > 0.5) {
        throw ContractViolation("search_c2: |a| = " + std::to_string(std::abs(a)) +
                                " > 1/2, phi no longer has minimal norm");
    }
    if (!(c_hi > c_lo)) throw ContractViolation("search_c2: empty c range");

    const Symbol phi = quadratic(a);
    const double h_norm = operator_norm(phi).value;
    const Complex phi_mid = phi.coefficient({1, 1});
    const auto objective = [&](double c) {
        const double h1 = h1_norm_2hom(quadratic(c), search_quadrature()).value;
        return std::abs(Complex(2.0) + c * std::conj(phi_mid)) / (h_norm * h1);
    };

    SearchResult out;
    constexpr int kScan = 101;
    std::size_t best = 0;
    for (int i = 0; i < kScan; ++i) {
        const double c = c_lo + (c_hi - c_lo) * i / (kScan - 1);
        out.scan.emplace_back(c, objective(c));
        if (out.scan.back().second > out.scan[best].second) best = out.scan.size() - 1;
    }
    if (best == 0 || best == kScan - 1) {
        throw ContractViolation("search_c2: scan maximum at the end of [" + std::to_string(c_lo) + ", " +
                                std::to_string(c_hi) + "]; widen the range");
    }

    // Golden-section maximization on the bracket around the scan maximum.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = out.scan[best - 1].first;
    double hi = out.scan[best + 1].first;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-7) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        }
    }
    out.best_c = 0.5 * (lo + hi);

    const Symbol f = quadratic(out.best_c);
    DualWitness w{f, phi, pairing(f, phi), operator_norm(phi), h1_norm_2hom(f, search_quadrature()), 0.0};
    w.ratio = std::abs(w.pairing) / (w.operator_norm.value * w.h1.value);
    out.report.d = 2;
    out.report.method = BoundMethod::Search;
    out.report.bound_value = std::max(1.0, w.ratio);
    out.report.witness = std::move(w);
    return out;
}

Symbol cex_factor(std::size_t k, std::size_t dimension) {
    const std::size_t first = (k - 1) * k / 2 + 1;
    const std::size_t last = k * (k + 1) / 2;
    if (k == 0 || 2 * last > dimension) {
        throw DimensionError("cex_factor: block " + std::to_string(k) + " needs " + std::to_string(2 * last) +
                             " variables");
    }
    const double c = 1.0 / std::numbers::sqrt2;
    Symbol out = Symbol::constant(dimension, 1.0);
    for (std::size_t j = first; j <= last; ++j) {
        out = mul(out, add(scale(Symbol::variable(dimension, 2 * j - 2), c),
                           scale(Symbol::variable(dimension, 2 * j - 1), c)));
    }
    return out;
}

Symbol cex_truncation(std::size_t K) {
    if (K == 0) throw ContractViolation("cex_truncation: K must be positive");
    const std::size_t dimension = K * (K + 1);
    const double c = 1.0 / std::numbers::sqrt2;
    std::vector<RecipeExpr> blocks;
    for (std::size_t k = 1; k <= K; ++k) {
        std::vector<RecipeExpr> pairs;
        for (std::size_t j = (k - 1) * k / 2 + 1; j <= k * (k + 1) / 2; ++j) {
            // The block weight sqrt6/(pi k) rides on the first pair.
            const double w = pairs.empty() ? c * kCexScale / static_cast<double>(k) : c;
            pairs.push_back(RecipeExpr::sum({RecipeExpr::leaf(w, MultiIndex::unit(dimension, 2 * j - 2)),
                                             RecipeExpr::leaf(w, MultiIndex::unit(dimension, 2 * j - 1))}));
        }
        blocks.push_back(RecipeExpr::product(std::move(pairs)));
    }
    return build_recipe(RecipeExpr::sum(std::move(blocks)));
}

double cex_h2_closed_form(std::size_t K) {
    double sum = 0.0;
    for (std::size_t k = 1; k <= K; ++k) sum += 1.0 / (static_cast<double>(k) * static_cast<double>(k));
    return kCexScale * std::sqrt(sum);
}

std::vector<double> cex_ratio_sequence(std::size_t kmax, double q) {
    if (!(q >= 1.0 && q < 2.0)) {
        throw ContractViolation("cex_ratio: q = " + std::to_string(q) +
                                " outside [1, 2); at q = 2 the ratio is (sqrt6/pi)/k and does not diverge");
    }
    const double r = hq_norm_basic(q).value;
    std::vector<double> out;
    out.reserve(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        out.push_back(kCexScale / static_cast<double>(k) * std::pow(r, -static_cast<double>(k)));
    }
    return out;
}

double cex_ratio(std::size_t k, double q) {
    if (k == 0) throw ContractViolation("cex_ratio: k must be positive");
    return cex_ratio_sequence(k, q).back();
}

std::size_t cex_ratio_increasing_from(double q) {
    if (!(q >= 1.0 && q < 2.0)) throw ContractViolation("cex_ratio_increasing_from: q outside [1, 2)");
    const double r = hq_norm_basic(q).value;
    // R_k / R_{k-1} = (k-1) / (k r) > 1  <=>  k > 1 / (1 - r)
    return static_cast<std::size_t>(std::floor(1.0 / (1.0 - r))) + 1;
}

double PsiSeries::coefficient(long k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign / (1.0 - 2.0 * static_cast<double>(k));
}

Complex psi_evaluate(const PsiSeries& ps, double theta1, double theta2) {
    const long K = static_cast<long>(ps.truncation);
    Complex sum{};
    for (long k = -K; k <= K; ++k) {
        sum += PsiSeries::coefficient(k) * std::polar(1.0, (1.0 - k) * theta1 + k * theta2);
    }
    return sum;
}

NormEstimate psi_sup_estimate(std::size_t K, std::size_t N) {
    if (K == 0) throw ContractViolation("psi_sup_estimate: K must be positive");
    if (N < 16) throw ContractViolation("psi_sup_estimate: grid needs N >= 16");

    // psi is 1-homogeneous, so |psi_K(theta1, theta2)| = |sum_k c_k e^{ik(theta2-theta1)}| and
    // the N x N grid only sees the N differences 2 pi r / N. Fold coefficients by k mod N first.
    std::vector<double> folded(N, 0.0);
    const long Kl = static_cast<long>(K);
    const long Nl = static_cast<long>(N);
    for (long k = -Kl; k <= Kl; ++k) folded[static_cast<std::size_t>(((k % Nl) + Nl) % Nl)] += PsiSeries::coefficient(k);

    const double tail_weight = 1.0 / (2.0 * K + 1.0) + 1.0 / (2.0 * K + 3.0);
    double grid_max = 0.0, tail_max = 0.0, certified = 0.0;
    for (std::size_t r = 0; r < N; ++r) {
        Complex v{};
        for (std::size_t m = 0; m < N; ++m) {
            v += folded[m] * std::polar(1.0, 2.0 * kPi * static_cast<double>((m * r) % N) / static_cast<double>(N));
        }
        const double mag = std::abs(v);
        grid_max = std::max(grid_max, mag);
        const double t = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(N);
        const double half_cos = std::abs(std::cos(t / 2.0));
        if (half_cos > 1e-12) {
            // Abel summation: both tails have monotone coefficients times (-e^{it})^k.
            const double tail = tail_weight / half_cos;
            tail_max = std::max(tail_max, tail);
            certified = std::max(certified, mag - tail);
        }
    }

    NormEstimate est;
    est.method = NormMethod::GridQuadrature;
    est.value = grid_max;
    est.error_bound = tail_max;
    est.metadata["truncation"] = std::to_string(K);
    est.metadata["grid"] = std::to_string(N) + "x" + std::to_string(N);
    est.metadata["tail_bound_max"] = format_double(tail_max);
    est.metadata["certified_lower"] = format_double(certified);
    est.metadata["lower_estimate"] = "false";
    est.metadata["note"] = "grid maximum of the symmetric partial sum; Gibbs overshoot near theta2-theta1=pi";
    return est;
}

Symbol psi_projection(const PsiSeries& ps) {
    if (ps.truncation == 0) throw ContractViolation("psi_projection: K must be positive");
    const long K = static_cast<long>(ps.truncation);
    std::vector<std::pair<MultiIndex, Complex>> terms;
    for (long k = -K; k <= K; ++k) {
        if (1 - k >= 0 && k >= 0) {
            terms.emplace_back(MultiIndex{static_cast<std::uint32_t>(1 - k), static_cast<std::uint32_t>(k)},
                               PsiSeries::coefficient(k));
        }
    }
    return Symbol(2, terms);
}

} // namespace hankel
