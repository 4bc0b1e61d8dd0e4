#pragma once

#include "hankel/symbol.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

inline constexpr double kDefaultTolerance = 1e-9;

enum class MinimalityStatus { Minimal, NotMinimal };

std::string_view to_string(MinimalityStatus s);

struct MinimalityVerdict {
    MinimalityStatus status = MinimalityStatus::Minimal;
    /// ||H_phi|| - ||phi||_{H^2} (or max block norm - ||phi||_{H^2} on the homogeneous path).
    double gap = 0.0;
    double tolerance = kDefaultTolerance;
    double operator_norm = 0.0;
    double h2_norm = 0.0;
    /// |gap| <= tolerance: an exact-equality case that floating point cannot resolve further.
    bool boundary = false;
    /// Present when the homogeneous reduction was used.
    std::optional<std::vector<std::pair<std::uint64_t, double>>> block_norms;
    std::string note;

    bool minimal() const noexcept { return status == MinimalityStatus::Minimal; }
};

/// Compares the full operator norm against the trivial lower bound ||phi||_{H^2}.
/// Throws ContractViolation for the zero symbol or tol < 1e-12.
MinimalityVerdict classify(const Symbol& s, double tol = kDefaultTolerance);

/// Same verdict for an m-homogeneous symbol, computed from the blocks
/// k = 1..floor(m/2) only. Block 0 has norm ||phi||_{H^2}, and block k
/// has the same norm as block m-k, so no other block can exceed the bound.
MinimalityVerdict classify_homogeneous(const Symbol& s, double tol = kDefaultTolerance);

/// classify_homogeneous when s is homogeneous, classify otherwise.
MinimalityVerdict classify_auto(const Symbol& s, double tol = kDefaultTolerance);

/// One-variable criterion: H_phi has minimal norm iff phi is a constant multiple
/// of an inner function. A one-variable polynomial of constant modulus on the
/// circle is c z^n, so for polynomials this is "exactly one term".
bool d1_monomial_test(const Symbol& s);

/// z1^2 + a z1 z2 + z2^2: minimal norm iff |a| <= 1/2.
Symbol quadratic_family(double a);
/// z1^3 + b z1^2 z2 + b z1 z2^2 + z2^3: minimal norm iff 0 <= b <= sqrt 2 - 1.
Symbol cubic_family(double b);
/// prod_{j=1}^{d} (z_{2j-1} + z_{2j}) on 2d variables, built through the recipe.
Symbol ocs_product(std::size_t d);

} // namespace hankel
