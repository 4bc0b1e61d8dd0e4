#pragma once

#include "hankel/norm_estimate.hpp"
#include "hankel/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>

namespace hankel {

enum class QuadratureMethod { TensorUniform, MonteCarlo };

struct QuadratureSpec {
    /// Tensor grid: N points per angle (N >= 4). Also the initial panel count
    /// for the one-dimensional reductions.
    std::size_t points_per_dimension = 256;
    QuadratureMethod method = QuadratureMethod::TensorUniform;
    std::uint64_t seed = 0x5eed;
    std::size_t samples = 1'000'000;

    void validate() const;
};

/// N = 256 for d <= 2 and N = 64 above.
QuadratureSpec default_quadrature(std::size_t dimension);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// ||s||_{H^p} on the d-torus.
///
/// Tensor grids use the periodic trapezoid rule on N and 2N points per angle;
/// the 2N value is returned and the N/2N discrepancy is the error bound.
/// |s|^p has kinks at the zeros of s, so convergence is only algebraic for
/// odd p. p = kInfinity returns the grid maximum, which is a lower estimate;
/// its error_bound is the Lipschitz gap to the true supremum.
/// Monte Carlo reports 3 standard errors, pushed through the 1/p power.
NormEstimate hp_norm(const Symbol& s, double p, const QuadratureSpec& spec);

/// ||(z1+z2)/sqrt 2||_{H^q(T^2)} for 1 <= q <= 2, from
/// |1 + e^{i theta}| = 2|cos(theta/2)| and adaptive Gauss-Kronrod quadrature.
NormEstimate hq_norm_basic(double q);

/// 1 + (2 log 2 - 1)(2 - q)/8, a lower bound for 1/hq_norm_basic(q).
double plower_rhs(double q);

/// (1 + q/2)^{1/q} / sqrt 2: the sharper intermediate lower bound for
/// 1/hq_norm_basic(q) from which plower_rhs follows by Taylor expansion at q = 2.
double plower_intermediate(double q);

/// ||s||_{H^p(T^d)} for an m-homogeneous s depending on at most two variables.
///
/// On the torus |s(theta)| only depends on theta_b - theta_a, so the norm is a
/// single integral over the circle. The zeros of s on the circle are located
/// through the companion matrix and used as panel breakpoints, which keeps the
/// kinks of |s|^p out of the panel interiors.
NormEstimate hp_norm_2hom(const Symbol& s, double p, const QuadratureSpec& spec);

inline NormEstimate h1_norm_2hom(const Symbol& s, const QuadratureSpec& spec) {
    return hp_norm_2hom(s, 1.0, spec);
}

/// Counter-based generator: the k-th output is the SplitMix64 finalizer
/// applied to seed + (k + 1) * golden-ratio increment.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter);

} // namespace hankel
