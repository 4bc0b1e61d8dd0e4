#include <doctest.h>

#include "generators.hpp"

#include "hankel/errors.hpp"
#include "hankel/hankel_matrix.hpp"
#include "hankel/minimal_norm.hpp"
#include "hankel/recipe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace hankel;

namespace {

Symbol permute(const Symbol& s, const std::vector<std::size_t>& perm) {
    std::vector<std::pair<MultiIndex, Complex>> t;
    for (const auto& [alpha, c] : s.terms()) {
        MultiIndex b(s.dimension());
        for (std::size_t j = 0; j < s.dimension(); ++j) b[perm[j]] = alpha[j];
        t.emplace_back(b, c);
    }
    return Symbol(s.dimension(), t);
}

} // namespace

TEST_CASE("classify examples") {
    const Symbol z = Symbol::variable(2, 0) + Symbol::variable(2, 1);
    const auto v = classify(z);
    CHECK(v.minimal());
    CHECK(std::abs(v.gap) <= 1e-14);
    CHECK(v.boundary);

    const auto q = classify(quadratic_family(1.0));
    CHECK_FALSE(q.minimal());
    CHECK(q.operator_norm == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(q.h2_norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

    CHECK(classify(Symbol::monomial(MultiIndex{3, 1, 4}, Complex(2, -1))).minimal());
    CHECK_THROWS_AS(classify(Symbol(2)), ContractViolation);
    CHECK_THROWS_AS(classify(z, 1e-13), ContractViolation);
}

TEST_CASE("homogeneous path examples") {
    const auto half = classify_homogeneous(quadratic_family(0.5));
    CHECK(half.minimal());
    CHECK(half.boundary);
    REQUIRE(half.block_norms.has_value());
    CHECK(half.h2_norm == doctest::Approx(1.5).epsilon(1e-14));

    const auto edge = classify_homogeneous(cubic_family(std::sqrt(2.0) - 1.0));
    CHECK(edge.minimal());
    CHECK(edge.boundary);

    const Symbol linear(3, {{MultiIndex{1, 0, 0}, Complex(2, 1)}, {MultiIndex{0, 0, 1}, -7.0}});
    CHECK(classify_homogeneous(linear).minimal());

    for (double a : {0.0, 0.25, 0.5}) CHECK(classify_homogeneous(quadratic_family(a)).minimal());
    for (double a : {0.51, 0.75, 1.0}) CHECK_FALSE(classify_homogeneous(quadratic_family(a)).minimal());
    CHECK(classify_homogeneous(cubic_family(0.414)).minimal());
    CHECK_FALSE(classify_homogeneous(cubic_family(0.415)).minimal());

    CHECK_THROWS_AS(classify_homogeneous(quadratic_family(0.1) + Symbol::constant(2, 1.0)), ContractViolation);
    CHECK(classify_auto(quadratic_family(0.1) + Symbol::constant(2, 1.0)).block_norms == std::nullopt);
}

TEST_CASE("threshold scans flip once") {
    for (int i = 0; i <= 10; ++i) {
        const double a = 0.1 * i;
        CHECK(classify_homogeneous(quadratic_family(a)).minimal() == (a <= 0.5 + 1e-12));
        const double b = 0.1 * i;
        CHECK(classify_homogeneous(cubic_family(b)).minimal() == (b <= std::sqrt(2.0) - 1.0));
    }
}

TEST_CASE("d = 1 monomial test") {
    CHECK(d1_monomial_test(Symbol::monomial(MultiIndex{3}, 3.0)));
    const Symbol one_plus_z(1, {{MultiIndex{0}, 1.0}, {MultiIndex{1}, 1.0}});
    CHECK_FALSE(d1_monomial_test(one_plus_z));
    CHECK(operator_norm(one_plus_z).value == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-14));
    const Symbol z_z2(1, {{MultiIndex{1}, 1.0}, {MultiIndex{2}, 1.0}});
    CHECK_FALSE(classify(z_z2).minimal());
}

TEST_CASE("property: d = 1 equivalence, exhaustive") {
    int checked = 0;
    for (int code = 0; code < 729; ++code) {
        std::vector<std::pair<MultiIndex, Complex>> t;
        int c = code;
        for (unsigned e = 0; e <= 5; ++e, c /= 3) t.emplace_back(MultiIndex{e}, static_cast<double>(c % 3 - 1));
        const Symbol s(1, t);
        if (s.is_zero()) continue;
        CHECK(d1_monomial_test(s) == classify(s, 1e-9).minimal());
        ++checked;
    }
    CHECK(checked == 728);
}

TEST_CASE("property: homogeneous and full classification agree") {
    gen::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
        const unsigned m = static_cast<unsigned>(rng.integer(1, 4));
        std::vector<std::pair<MultiIndex, Complex>> t;
        const int terms = rng.integer(1, 5);
        for (int i = 0; i < terms; ++i) t.emplace_back(gen::index_of_degree(rng, d, m), rng.real(-2.0, 2.0));
        const Symbol s(d, t);
        if (s.is_zero()) continue;
        const auto full = classify(s);
        const auto fast = classify_homogeneous(s);
        CHECK(full.status == fast.status);
        CHECK(std::abs(full.gap - fast.gap) <= 1e-10);
        CHECK(fast.gap >= -fast.tolerance);
    }
}

TEST_CASE("property: recipe output has minimal norm") {
    gen::Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(1, 8));
        const auto expr = gen::recipe(rng, d, 0, d, 3, d <= 4 ? 2 : 1);
        const Symbol s = build_recipe(expr);
        const auto v = classify(s);
        CHECK(v.minimal());
        CHECK(v.gap <= 1e-9);
        CHECK(parse_recipe(expr.to_string()).to_string() == expr.to_string());
    }
}

TEST_CASE("property: status invariant under scaling and permutation") {
    gen::Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
        Symbol s = gen::symbol(rng, d, rng.integer(1, 4), 2);
        if (trial % 2 == 0) s = build_recipe(gen::recipe(rng, d, 0, d, 2, 2));
        std::vector<std::size_t> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.engine);
        Complex c = rng.complex();
        if (c == Complex{}) c = 1.0;
        const auto base = classify(s).status;
        CHECK(classify(scale(s, c)).status == base);
        CHECK(classify(permute(s, perm)).status == base);
    }
}

TEST_CASE("recipe construction and errors") {
    const auto z1 = RecipeExpr::leaf(1.0, MultiIndex{1, 0, 0, 0});
    const auto z2 = RecipeExpr::leaf(1.0, MultiIndex{0, 1, 0, 0});
    const auto z3 = RecipeExpr::leaf(1.0, MultiIndex{0, 0, 1, 0});
    const auto z4 = RecipeExpr::leaf(1.0, MultiIndex{0, 0, 0, 1});
    const Symbol prod = build_recipe(RecipeExpr::product({RecipeExpr::sum({z1, z2}), RecipeExpr::sum({z3, z4})}));
    CHECK(prod.size() == 4);
    CHECK(operator_norm(prod).value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ocs_product(2).size() == 4);

    const auto reused = RecipeExpr::sum({z1, RecipeExpr::sum({z2, z3}), RecipeExpr::product({z2, z4})});
    try {
        validate_recipe(reused);
        FAIL("expected RecipeViolation");
    } catch (const RecipeViolation& e) {
        CHECK(std::string(e.what()).find("root") != std::string::npos);
        CHECK(std::string(e.what()).find("z2") != std::string::npos);
    }
    CHECK_THROWS_AS(build_recipe(RecipeExpr::leaf(1.0, MultiIndex{0, 0})), RecipeViolation);
    CHECK_THROWS_AS(build_recipe(RecipeExpr::leaf(0.0, MultiIndex{1, 0})), RecipeViolation);
    CHECK_THROWS_AS(build_recipe(RecipeExpr::sum({})), RecipeViolation);
    CHECK_THROWS_AS(build_recipe(RecipeExpr::sum({z1, RecipeExpr::leaf(1.0, MultiIndex{0, 1})})), RecipeViolation);
}
