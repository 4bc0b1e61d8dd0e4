#pragma once

#include "hankel/norm_estimate.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/symbol.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace hankel {

enum class BoundMethod { PaperOcs, PaperCdLower, DualPairing, Search };

std::string_view to_string(BoundMethod m);

/// Test pair behind a duality lower bound for C_d.
struct DualWitness {
    Symbol f;
    Symbol phi;
    Complex pairing;
    NormEstimate operator_norm; // ||H_phi||
    NormEstimate h1;            // ||f||_{H^1}
    /// |<f, phi>| / (||H_phi|| ||f||_{H^1}); may fall below 1 for poor test pairs.
    double ratio = 0.0;
};

/// A lower bound for the Nehari constant C_d.
struct BoundReport {
    std::size_t d = 0;
    /// max(1, ratio) for dual bounds, since C_d >= 1 always.
    double bound_value = 1.0;
    BoundMethod method = BoundMethod::DualPairing;
    std::optional<DualWitness> witness;
};

/// C_d >= |<f, phi>| / (||H_phi|| ||f||_{H^1}). The pairing is the exact
/// coefficient sum, ||H_phi|| comes from the Hankel matrix and ||f||_{H^1}
/// from hp_norm with the given quadrature.
BoundReport dual_bound(const Symbol& f, const Symbol& phi, const QuadratureSpec& spec);

/// (5 pi / (pi + 6 sqrt 3))^{d/2}, even d >= 2.
BoundReport cd_lower(std::size_t d);
/// (pi^2 / 8)^{d/4}, even d >= 2.
BoundReport ocs_lower(std::size_t d);

struct SearchResult {
    double best_c = 0.0;
    BoundReport report;
    /// The 101-point scan that located the bracket.
    std::vector<std::pair<double, double>> scan;
};

/// Maximizes the dual ratio for phi = z1^2 + a z1 z2 + z2^2 over test functions
/// f = z1^2 + c z1 z2 + z2^2 with c in [c_lo, c_hi]. A 101-point scan picks the
/// bracket, golden-section search refines c to 1e-6. Requires |a| <= 1/2 and
/// an interior scan maximum.
SearchResult search_c2(double a, double c_lo, double c_hi);

/// Dual ratio of the quadratic pair above, with ||f||_{H^1} from the 1-D reduction.
double quadratic_dual_ratio(double a, double c);

/// phi_k = prod_{j=(k-1)k/2+1}^{k(k+1)/2} (z_{2j-1} + z_{2j}) / sqrt 2 in the given dimension.
Symbol cex_factor(std::size_t k, std::size_t dimension);

/// (sqrt 6 / pi) sum_{k=1}^{K} phi_k / k on K(K+1) variables, assembled through the recipe.
Symbol cex_truncation(std::size_t K);

/// (sqrt 6 / pi) sqrt(sum_{k<=K} k^-2), the H^2 norm of cex_truncation(K).
double cex_h2_closed_form(std::size_t K);

/// R_k(q) = (sqrt 6/pi) (1/k) r(q)^{-k}, r(q) = hq_norm_basic(q): the pairing
/// <phi_k, phi> / ||phi_k||_{H^q}. Requires k >= 1 and 1 <= q < 2.
double cex_ratio(std::size_t k, double q);

/// R_1(q), ..., R_kmax(q) sharing one evaluation of r(q).
std::vector<double> cex_ratio_sequence(std::size_t kmax, double q);

/// Smallest k0 with R_k > R_{k-1} for every k >= k0, i.e. k0 = floor(1/(1-r)) + 1.
std::size_t cex_ratio_increasing_from(double q);

/// Symmetric partial sums of psi(z) = sum_k (-1)^k / (1-2k) z1^{1-k} z2^k.
struct PsiSeries {
    std::size_t truncation = 1;

    static double coefficient(long k);
};

Complex psi_evaluate(const PsiSeries& ps, double theta1, double theta2);

/// Maximum of |psi_K| over the uniform N x N grid. Metadata carries the
/// Abel-summation tail bound and the certified lower estimate
/// max_t (|psi_K(t)| - tail(t)) over grid points away from the jump at
/// theta2 - theta1 = pi.
NormEstimate psi_sup_estimate(std::size_t K, std::size_t N);

/// Terms of psi_K with both exponents nonnegative; z1 + z2 for every K >= 1.
Symbol psi_projection(const PsiSeries& ps);

} // namespace hankel
