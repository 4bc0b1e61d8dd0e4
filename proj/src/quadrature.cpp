#include "hankel/quadrature.hpp"

#include "hankel/errors.hpp"
#include "hankel/parallel.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

namespace hankel {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Kahan {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct GridResult {
    double mean_pow = 0.0; // mean of |s|^p, unused for p = inf
    double max_abs = 0.0;
};

double power_of_abs(Complex v, double p) {
    if (p == 1.0) return std::abs(v);
    if (p == 2.0) return std::norm(v);
    return std::pow(std::abs(v), p);
}

// Periodic trapezoid sum of |s|^p (or max |s|) on the uniform N^d grid.
GridResult tensor_grid(const Symbol& s, double p, std::size_t n) {
    const std::size_t d = s.dimension();
    std::vector<Complex> roots(n);
    for (std::size_t k = 0; k < n; ++k) roots[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / n);

    std::vector<Complex> coeffs;
    std::vector<std::vector<std::uint64_t>> exps;
    for (const auto& [alpha, c] : s.terms()) {
        coeffs.push_back(c);
        exps.emplace_back(alpha.exponents().begin(), alpha.exponents().end());
    }
    const std::size_t terms = coeffs.size();
    const bool sup = std::isinf(p);

    // Chunks run over the first angle so the reduction order is fixed.
    const std::size_t chunks = d >= 2 ? n : 1;
    std::vector<Kahan> partial_sums(chunks);
    std::vector<double> partial_max(chunks, 0.0);

    parallel_for(chunks, [&](std::size_t chunk) {
        std::vector<std::size_t> idx(d, 0); // idx[d-1] is the inner loop
        if (d >= 2) idx[0] = chunk;
        std::vector<Complex> head(terms);
        Kahan acc;
        double best = 0.0;
        while (true) {
            for (std::size_t t = 0; t < terms; ++t) {
                Complex h = coeffs[t];
                for (std::size_t j = 0; j + 1 < d; ++j) h *= roots[(exps[t][j] * idx[j]) % n];
                head[t] = h;
            }
            for (std::size_t last = 0; last < n; ++last) {
                Complex v{};
                for (std::size_t t = 0; t < terms; ++t) v += head[t] * roots[(exps[t][d - 1] * last) % n];
                if (sup) {
                    best = std::max(best, std::abs(v));
                } else {
                    acc.add(power_of_abs(v, p));
                }
            }
            // Advance the middle angles 1..d-2; angle 0 is fixed per chunk (d >= 2).
            std::size_t j = d >= 2 ? d - 2 : 0;
            bool done = true;
            while (d >= 3 && j >= 1) {
                if (++idx[j] < n) {
                    done = false;
                    break;
                }
                idx[j] = 0;
                --j;
            }
            if (done) break;
        }
        partial_sums[chunk] = acc;
        partial_max[chunk] = best;
    });

    GridResult r;
    Kahan total;
    for (const auto& k : partial_sums) total.add(k.sum);
    double points = 1.0;
    for (std::size_t j = 0; j < d; ++j) points *= static_cast<double>(n);
    r.mean_pow = total.sum / points;
    r.max_abs = *std::max_element(partial_max.begin(), partial_max.end());
    return r;
}

NormEstimate tensor_norm(const Symbol& s, double p, const QuadratureSpec& spec) {
    if (s.dimension() > 4) {
        throw ContractViolation("tensor-uniform quadrature supports d <= 4; use monte-carlo for d = " +
                                std::to_string(s.dimension()));
    }
    const std::size_t n = spec.points_per_dimension;
    NormEstimate est;
    est.method = NormMethod::GridQuadrature;
    est.metadata["grid"] = std::to_string(n) + "," + std::to_string(2 * n);
    est.metadata["dimension"] = std::to_string(s.dimension());

    if (std::isinf(p)) {
        const auto fine = tensor_grid(s, p, 2 * n);
        est.value = fine.max_abs;
        // Every point of the torus is within pi/(2N) of the 2N grid in each angle.
        est.error_bound = lipschitz_bound(s) * std::numbers::pi / static_cast<double>(2 * n);
        est.metadata["lower_estimate"] = "true";
        return est;
    }
    const auto coarse = tensor_grid(s, p, n);
    const auto fine = tensor_grid(s, p, 2 * n);
    const double coarse_value = std::pow(coarse.mean_pow, 1.0 / p);
    est.value = std::pow(fine.mean_pow, 1.0 / p);
    est.error_bound = std::abs(coarse_value - est.value) + 1e-12 * est.value;
    est.metadata["value_from"] = std::to_string(2 * n) + "-grid";
    return est;
}

NormEstimate monte_carlo_norm(const Symbol& s, double p, const QuadratureSpec& spec) {
    if (std::isinf(p)) throw ContractViolation("monte-carlo does not estimate sup-norms");
    const std::size_t d = s.dimension();
    constexpr std::size_t kChunk = 1 << 16;
    const std::size_t chunks = (spec.samples + kChunk - 1) / kChunk;
    std::vector<double> sums(chunks, 0.0), squares(chunks, 0.0);

    parallel_for(chunks, [&](std::size_t chunk) {
        std::vector<double> angles(d);
        Kahan sum, sq;
        const std::size_t end = std::min(spec.samples, (chunk + 1) * kChunk);
        for (std::size_t i = chunk * kChunk; i < end; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const auto bits = splitmix64_at(spec.seed, static_cast<std::uint64_t>(i) * d + j);
                angles[j] = kTwoPi * static_cast<double>(bits >> 11) * 0x1.0p-53;
            }
            const double x = power_of_abs(evaluate(s, angles), p);
            sum.add(x);
            sq.add(x * x);
        }
        sums[chunk] = sum.sum;
        squares[chunk] = sq.sum;
    });

    Kahan sum, sq;
    for (std::size_t c = 0; c < chunks; ++c) {
        sum.add(sums[c]);
        sq.add(squares[c]);
    }
    const double count = static_cast<double>(spec.samples);
    const double mean = sum.sum / count;
    const double var = std::max(0.0, (sq.sum / count - mean * mean) * count / (count - 1.0));
    const double std_err = std::sqrt(var / count);

    NormEstimate est;
    est.method = NormMethod::MonteCarlo;
    est.value = std::pow(mean, 1.0 / p);
    // d(M^{1/p}) = (1/p) M^{1/p - 1} dM
    est.error_bound = mean > 0.0 ? 3.0 * std_err * est.value / (p * mean) : 0.0;
    est.metadata["generator"] = "splitmix64-counter";
    est.metadata["seed"] = std::to_string(spec.seed);
    est.metadata["samples"] = std::to_string(spec.samples);
    return est;
}

void check_q(double q, const char* who) {
    if (!(q >= 1.0 && q <= 2.0)) {
        throw ContractViolation(std::string(who) + ": q = " + std::to_string(q) + " outside [1, 2]");
    }
}

// Roots of sum_e a_e w^e (ascending coefficients), via the companion matrix.
std::vector<Complex> polynomial_roots(std::vector<Complex> a) {
    while (!a.empty() && a.back() == Complex{}) a.pop_back();
    std::size_t lo = 0;
    while (lo < a.size() && a[lo] == Complex{}) ++lo;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(lo));
    if (a.size() <= 1) return {};
    const auto n = static_cast<Eigen::Index>(a.size() - 1);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -a[static_cast<std::size_t>(i)] / a.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

} // namespace

void QuadratureSpec::validate() const {
    if (points_per_dimension < 4) throw ContractViolation("quadrature needs at least 4 points per dimension");
    if (method == QuadratureMethod::MonteCarlo && samples < 1000) {
        throw ContractViolation("monte-carlo needs at least 1000 samples");
    }
}

QuadratureSpec default_quadrature(std::size_t dimension) {
    QuadratureSpec spec;
    spec.points_per_dimension = dimension <= 2 ? 256 : 64;
    return spec;
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

NormEstimate hp_norm(const Symbol& s, double p, const QuadratureSpec& spec) {
    spec.validate();
    if (s.is_zero()) throw ContractViolation("hp_norm: zero symbol");
    if (!(p >= 1.0)) throw ContractViolation("hp_norm: p must be >= 1");
    auto est = spec.method == QuadratureMethod::TensorUniform ? tensor_norm(s, p, spec)
                                                              : monte_carlo_norm(s, p, spec);
    est.metadata["p"] = std::isinf(p) ? "inf" : std::to_string(p);
    return est;
}

NormEstimate hq_norm_basic(double q) {
    check_q(q, "hq_norm_basic");
    using boost::math::quadrature::gauss_kronrod;
    // ||(z1+z2)/sqrt2||_q^q = 2^{q/2} (2/pi) int_0^{pi/2} cos^q(u) du
    double err = 0.0;
    const double integral = gauss_kronrod<double, 31>::integrate(
        [q](double u) { return std::pow(std::cos(u), q); }, 0.0, std::numbers::pi / 2, 30, 1e-13, &err);
    const double moment = std::pow(2.0, q / 2.0) * (2.0 / std::numbers::pi) * integral;
    const double moment_err = std::pow(2.0, q / 2.0) * (2.0 / std::numbers::pi) * err;

    NormEstimate est;
    est.method = NormMethod::GridQuadrature;
    est.value = std::pow(moment, 1.0 / q);
    est.error_bound = est.value * moment_err / (q * moment) + 4.0 * std::numeric_limits<double>::epsilon() * est.value;
    est.metadata["scheme"] = "adaptive gauss-kronrod 31";
    est.metadata["q"] = std::to_string(q);
    return est;
}

double plower_rhs(double q) {
    check_q(q, "plower_rhs");
    return 1.0 + (2.0 * std::numbers::ln2 - 1.0) / 8.0 * (2.0 - q);
}

double plower_intermediate(double q) {
    check_q(q, "plower_intermediate");
    return std::pow(1.0 + q / 2.0, 1.0 / q) / std::numbers::sqrt2;
}

NormEstimate hp_norm_2hom(const Symbol& s, double p, const QuadratureSpec& spec) {
    spec.validate();
    if (s.is_zero()) throw ContractViolation("hp_norm_2hom: zero symbol");
    if (!(p >= 1.0) || std::isinf(p)) throw ContractViolation("hp_norm_2hom: need finite p >= 1");
    if (!is_homogeneous(s)) throw ContractViolation("hp_norm_2hom: symbol is not homogeneous");
    const auto vars = variable_support(s);
    if (vars.size() > 2) {
        throw ContractViolation("hp_norm_2hom: symbol depends on " + std::to_string(vars.size()) + " variables");
    }

    // |s(theta)| = |g(theta_b - theta_a)|, g(t) = sum_alpha c_alpha e^{i alpha_b t}.
    const std::size_t b = vars.empty() ? 0 : *vars.rbegin();
    std::map<std::uint32_t, Complex> g;
    for (const auto& [alpha, c] : s.terms()) g[alpha[b]] += c;
    std::vector<Complex> ascending(g.rbegin()->first + 1);
    for (const auto& [e, c] : g) ascending[e] = c;

    const auto integrand = [&](double t) {
        Complex v{};
        for (const auto& [e, c] : g) v += c * std::polar(1.0, e * t);
        return power_of_abs(v, p);
    };

    std::vector<double> breaks;
    const std::size_t panels = spec.points_per_dimension;
    for (std::size_t k = 0; k <= panels; ++k) breaks.push_back(kTwoPi * static_cast<double>(k) / panels);
    for (const auto& r : polynomial_roots(ascending)) {
        if (std::abs(std::abs(r) - 1.0) < 1e-6) {
            double t = std::arg(r);
            if (t < 0) t += kTwoPi;
            breaks.push_back(t);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double x, double y) { return y - x < 1e-13; }),
                 breaks.end());

    using boost::math::quadrature::gauss_kronrod;
    Kahan total;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double err = 0.0;
        total.add(gauss_kronrod<double, 15>::integrate(integrand, breaks[i], breaks[i + 1], 15, 1e-12, &err));
        total_err += err;
    }
    const double moment = total.sum / kTwoPi;
    const double moment_err = total_err / kTwoPi;

    NormEstimate est;
    est.method = NormMethod::GridQuadrature;
    est.value = std::pow(moment, 1.0 / p);
    est.error_bound = (moment > 0.0 ? est.value * moment_err / (p * moment) : 0.0) + 1e-13 * est.value;
    est.metadata["scheme"] = "homogeneous 1-D reduction, adaptive gauss-kronrod 15";
    est.metadata["panels"] = std::to_string(breaks.size() - 1);
    est.metadata["p"] = std::to_string(p);
    return est;
}

} // namespace hankel
