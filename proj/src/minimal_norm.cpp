#include "hankel/minimal_norm.hpp"

#include "hankel/errors.hpp"
#include "hankel/hankel_matrix.hpp"
#include "hankel/recipe.hpp"

#include <algorithm>
#include <cmath>

namespace hankel {

namespace {

void check_inputs(const Symbol& s, double tol) {
    if (s.is_zero()) throw ContractViolation("minimality is undefined for the zero symbol");
    if (!(tol >= 1e-12)) throw ContractViolation("tolerance must be at least 1e-12");
}

void settle(MinimalityVerdict& v) {
    v.gap = v.operator_norm - v.h2_norm;
    v.status = v.gap <= v.tolerance ? MinimalityStatus::Minimal : MinimalityStatus::NotMinimal;
    v.boundary = std::abs(v.gap) <= v.tolerance;
}

} // namespace

std::string_view to_string(MinimalityStatus s) {
    return s == MinimalityStatus::Minimal ? "minimal" : "not-minimal";
}

MinimalityVerdict classify(const Symbol& s, double tol) {
    check_inputs(s, tol);
    MinimalityVerdict v;
    v.tolerance = tol;
    v.h2_norm = h2_norm(s);
    v.operator_norm = operator_norm(s).value;
    settle(v);
    v.note = "full operator";
    return v;
}

MinimalityVerdict classify_homogeneous(const Symbol& s, double tol) {
    check_inputs(s, tol);
    const auto m = is_homogeneous(s);
    if (!m) throw ContractViolation("classify_homogeneous: symbol is not homogeneous");

    MinimalityVerdict v;
    v.tolerance = tol;
    v.h2_norm = h2_norm(s);
    v.block_norms = block_norms(s, 1, *m / 2);
    if (v.block_norms->empty()) {
        // m <= 1: the maximum runs over an empty set.
        v.operator_norm = v.h2_norm;
        v.note = "degree " + std::to_string(*m) + ": no blocks to check";
    } else {
        double top = 0.0;
        for (const auto& [k, norm] : *v.block_norms) top = std::max(top, norm);
        // Block 0 always has norm ||phi||_{H^2}.
        v.operator_norm = std::max(top, v.h2_norm);
        v.note = "blocks 1.." + std::to_string(*m / 2) + " of " + std::to_string(*m) + "-homogeneous symbol";
    }
    settle(v);
    return v;
}

MinimalityVerdict classify_auto(const Symbol& s, double tol) {
    return is_homogeneous(s) ? classify_homogeneous(s, tol) : classify(s, tol);
}

bool d1_monomial_test(const Symbol& s) {
    if (s.dimension() != 1) throw DimensionError("d1_monomial_test needs a one-variable symbol");
    if (s.is_zero()) throw ContractViolation("d1_monomial_test: zero symbol");
    return s.size() == 1;
}

Symbol quadratic_family(double a) {
    return Symbol(2, {{{2, 0}, 1.0}, {{1, 1}, a}, {{0, 2}, 1.0}});
}

Symbol cubic_family(double b) {
    return Symbol(2, {{{3, 0}, 1.0}, {{2, 1}, b}, {{1, 2}, b}, {{0, 3}, 1.0}});
}

Symbol ocs_product(std::size_t d) {
    if (d == 0) throw ContractViolation("ocs_product: d must be positive");
    const std::size_t dim = 2 * d;
    std::vector<RecipeExpr> pairs;
    for (std::size_t j = 0; j < d; ++j) {
        pairs.push_back(RecipeExpr::sum({RecipeExpr::leaf(1.0, MultiIndex::unit(dim, 2 * j)),
                                         RecipeExpr::leaf(1.0, MultiIndex::unit(dim, 2 * j + 1))}));
    }
    return build_recipe(RecipeExpr::product(std::move(pairs)));
}

} // namespace hankel
