#include "hankel/symbol.hpp"

#include "hankel/errors.hpp"

#include <cmath>
#include <string>

namespace hankel {

namespace {

void require_same_dimension(const Symbol& a, const Symbol& b, const char* op) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError(std::string(op) + ": dimensions " + std::to_string(a.dimension()) +
                             " and " + std::to_string(b.dimension()) + " differ");
    }
}

void accumulate(Symbol::Terms& terms, const MultiIndex& alpha, Complex c) {
    auto [it, inserted] = terms.try_emplace(alpha, c);
    if (!inserted) it->second += c;
}

void drop_zeros(Symbol::Terms& terms) {
    std::erase_if(terms, [](const auto& kv) { return kv.second == Complex{}; });
}

} // namespace

Symbol::Symbol(std::size_t dimension) : dim_(dimension) {
    if (dimension == 0) throw DimensionError("symbol dimension must be positive");
}

Symbol::Symbol(std::size_t dimension, std::span<const std::pair<MultiIndex, Complex>> terms)
    : Symbol(dimension) {
    for (const auto& [alpha, c] : terms) {
        if (alpha.dimension() != dimension) {
            throw DimensionError("index " + alpha.to_string() + " has length " +
                                 std::to_string(alpha.dimension()) + ", expected " +
                                 std::to_string(dimension));
        }
        accumulate(terms_, alpha, c);
    }
    drop_zeros(terms_);
}

Symbol::Symbol(std::size_t dimension, std::initializer_list<std::pair<MultiIndex, Complex>> terms)
    : Symbol(dimension, std::span<const std::pair<MultiIndex, Complex>>(terms.begin(), terms.size())) {}

Symbol Symbol::monomial(const MultiIndex& alpha, Complex coefficient) {
    return Symbol(alpha.dimension(), {{alpha, coefficient}});
}

Symbol Symbol::constant(std::size_t dimension, Complex value) {
    return monomial(MultiIndex(dimension), value);
}

Symbol Symbol::variable(std::size_t dimension, std::size_t j) {
    return monomial(MultiIndex::unit(dimension, j));
}

Complex Symbol::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Complex{} : it->second;
}

std::uint64_t Symbol::max_degree() const noexcept {
    // Graded order: the last key has the largest degree.
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Symbol Symbol::embed(std::size_t new_dimension) const {
    Symbol out(new_dimension);
    for (const auto& [alpha, c] : terms_) {
        out.terms_.emplace(alpha.embedded(new_dimension), c);
    }
    return out;
}

Symbol make_symbol(std::size_t dimension, std::span<const std::pair<MultiIndex, Complex>> terms) {
    return Symbol(dimension, terms);
}

Symbol add(const Symbol& a, const Symbol& b) {
    require_same_dimension(a, b, "add");
    std::vector<std::pair<MultiIndex, Complex>> all(a.terms().begin(), a.terms().end());
    all.insert(all.end(), b.terms().begin(), b.terms().end());
    return Symbol(a.dimension(), all);
}

Symbol mul(const Symbol& a, const Symbol& b) {
    require_same_dimension(a, b, "mul");
    std::vector<std::pair<MultiIndex, Complex>> all;
    all.reserve(a.size() * b.size());
    for (const auto& [alpha, ca] : a.terms()) {
        for (const auto& [beta, cb] : b.terms()) {
            all.emplace_back(alpha + beta, ca * cb);
        }
    }
    return Symbol(a.dimension(), all);
}

Symbol scale(const Symbol& s, Complex c) {
    std::vector<std::pair<MultiIndex, Complex>> all;
    all.reserve(s.size());
    for (const auto& [alpha, coeff] : s.terms()) all.emplace_back(alpha, coeff * c);
    return Symbol(s.dimension(), all);
}

double h2_norm(const Symbol& s) {
    double sum = 0.0;
    for (const auto& [alpha, c] : s.terms()) sum += std::norm(c);
    return std::sqrt(sum);
}

std::set<std::size_t> variable_support(const Symbol& s) {
    std::set<std::size_t> vars;
    for (const auto& [alpha, c] : s.terms()) {
        for (std::size_t j = 0; j < alpha.dimension(); ++j) {
            if (alpha[j] > 0) vars.insert(j);
        }
    }
    return vars;
}

bool separate_variables(const Symbol& a, const Symbol& b) {
    require_same_dimension(a, b, "separate_variables");
    const auto va = variable_support(a);
    for (std::size_t j : variable_support(b)) {
        if (va.contains(j)) return false;
    }
    return true;
}

Symbol homogeneous_part(const Symbol& s, std::uint64_t m) {
    std::vector<std::pair<MultiIndex, Complex>> part;
    for (const auto& [alpha, c] : s.terms()) {
        if (alpha.degree() == m) part.emplace_back(alpha, c);
    }
    return Symbol(s.dimension(), part);
}

std::optional<std::uint64_t> is_homogeneous(const Symbol& s) {
    if (s.is_zero()) return 0;
    const auto m = s.terms().begin()->first.degree();
    if (s.max_degree() != m) return std::nullopt;
    return m;
}

Symbol reflect(const Symbol& s) {
    std::vector<std::pair<MultiIndex, Complex>> all;
    all.reserve(s.size());
    for (const auto& [alpha, c] : s.terms()) all.emplace_back(alpha, std::conj(c));
    return Symbol(s.dimension(), all);
}

Complex evaluate(const Symbol& s, std::span<const double> angles) {
    if (angles.size() != s.dimension()) {
        throw DimensionError("evaluate: got " + std::to_string(angles.size()) + " angles for dimension " +
                             std::to_string(s.dimension()));
    }
    Complex sum{};
    for (const auto& [alpha, c] : s.terms()) {
        double phase = 0.0;
        for (std::size_t j = 0; j < angles.size(); ++j) phase += alpha[j] * angles[j];
        sum += c * std::polar(1.0, phase);
    }
    return sum;
}

Complex pairing(const Symbol& a, const Symbol& b) {
    require_same_dimension(a, b, "pairing");
    Complex sum{};
    for (const auto& [alpha, ca] : a.terms()) sum += ca * std::conj(b.coefficient(alpha));
    return sum;
}

double lipschitz_bound(const Symbol& s) {
    double sum = 0.0;
    for (const auto& [alpha, c] : s.terms()) sum += std::abs(c) * static_cast<double>(alpha.degree());
    return sum;
}

} // namespace hankel
