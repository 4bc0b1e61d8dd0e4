#pragma once

#include "hankel/symbol.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hankel {

/// Expression tree for building minimal-norm symbols from monomial inner
/// functions: leaves are c z^alpha with degree(alpha) >= 1, internal nodes
/// are sums or products whose children depend on pairwise separate variables.
///
/// Text form: `(sum E ...)`, `(prod E ...)`, `(mono <re> <im> : <e1> ... <ed>)`.
struct RecipeExpr {
    enum class Kind { Leaf, Sum, Product };

    Kind kind = Kind::Leaf;
    Complex coefficient{1.0, 0.0};
    MultiIndex monomial;
    std::vector<RecipeExpr> children;

    static RecipeExpr leaf(Complex c, MultiIndex alpha);
    static RecipeExpr sum(std::vector<RecipeExpr> children);
    static RecipeExpr product(std::vector<RecipeExpr> children);

    std::string to_string() const;
};

/// Checks leaf degrees, nonzero constants, a common dimension, and disjoint
/// variable supports among siblings. Throws RecipeViolation naming the node path
/// (e.g. `root/1/0`).
void validate_recipe(const RecipeExpr& expr);

/// Evaluates the tree after validating it. The result has minimal norm.
Symbol build_recipe(const RecipeExpr& expr);

RecipeExpr parse_recipe(std::string_view text);

} // namespace hankel
