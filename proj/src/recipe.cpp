#include "hankel/recipe.hpp"

#include "hankel/errors.hpp"
#include "hankel/symbol_io.hpp"

#include <charconv>
#include <optional>
#include <set>

namespace hankel {

RecipeExpr RecipeExpr::leaf(Complex c, MultiIndex alpha) {
    RecipeExpr e;
    e.kind = Kind::Leaf;
    e.coefficient = c;
    e.monomial = std::move(alpha);
    return e;
}

RecipeExpr RecipeExpr::sum(std::vector<RecipeExpr> children) {
    RecipeExpr e;
    e.kind = Kind::Sum;
    e.children = std::move(children);
    return e;
}

RecipeExpr RecipeExpr::product(std::vector<RecipeExpr> children) {
    RecipeExpr e;
    e.kind = Kind::Product;
    e.children = std::move(children);
    return e;
}

std::string RecipeExpr::to_string() const {
    if (kind == Kind::Leaf) {
        std::string s = "(mono " + format_double(coefficient.real()) + " " + format_double(coefficient.imag()) + " :";
        for (auto e : monomial.exponents()) s += " " + std::to_string(e);
        return s + ")";
    }
    std::string s = kind == Kind::Sum ? "(sum" : "(prod";
    for (const auto& c : children) s += " " + c.to_string();
    return s + ")";
}

namespace {

struct Scan {
    std::set<std::size_t> vars;
    std::size_t dimension = 0;
};

Scan validate_node(const RecipeExpr& e, const std::string& path, std::optional<std::size_t>& dim) {
    if (e.kind == RecipeExpr::Kind::Leaf) {
        if (dim && *dim != e.monomial.dimension()) {
            throw RecipeViolation(path + ": leaf has " + std::to_string(e.monomial.dimension()) +
                                  " exponents, expected " + std::to_string(*dim));
        }
        if (e.monomial.dimension() == 0) throw RecipeViolation(path + ": leaf without exponents");
        dim = e.monomial.dimension();
        if (e.monomial.degree() == 0) {
            throw RecipeViolation(path + ": leaf " + e.to_string() + " has degree 0 (must vanish at the origin)");
        }
        if (e.coefficient == Complex{}) throw RecipeViolation(path + ": leaf has zero coefficient");
        Scan out;
        for (std::size_t j = 0; j < e.monomial.dimension(); ++j) {
            if (e.monomial[j] > 0) out.vars.insert(j);
        }
        return out;
    }
    if (e.children.empty()) throw RecipeViolation(path + ": empty " + (e.kind == RecipeExpr::Kind::Sum ? "sum" : "prod"));

    Scan out;
    for (std::size_t i = 0; i < e.children.size(); ++i) {
        const auto child = validate_node(e.children[i], path + "/" + std::to_string(i), dim);
        for (std::size_t j : child.vars) {
            if (!out.vars.insert(j).second) {
                throw RecipeViolation(path + ": variable z" + std::to_string(j + 1) +
                                      " is shared between children of " + e.to_string());
            }
        }
    }
    return out;
}

Symbol evaluate_node(const RecipeExpr& e) {
    switch (e.kind) {
    case RecipeExpr::Kind::Leaf:
        return Symbol::monomial(e.monomial, e.coefficient);
    case RecipeExpr::Kind::Sum: {
        Symbol acc = evaluate_node(e.children.front());
        for (std::size_t i = 1; i < e.children.size(); ++i) acc = add(acc, evaluate_node(e.children[i]));
        return acc;
    }
    case RecipeExpr::Kind::Product: {
        Symbol acc = evaluate_node(e.children.front());
        for (std::size_t i = 1; i < e.children.size(); ++i) acc = mul(acc, evaluate_node(e.children[i]));
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

// Tokens: "(", ")", ":" and bare atoms.
struct Token {
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (ch == '#' || ch == ';') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
        } else if (ch == '(' || ch == ')' || ch == ':') {
            out.push_back({std::string(1, ch), line});
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && std::string_view(" \t\r\n():").find(text[j]) == std::string_view::npos) ++j;
            out.push_back({std::string(text.substr(i, j - i)), line});
            i = j;
        }
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    RecipeExpr parse_all() {
        RecipeExpr e = parse_expr();
        if (pos_ != toks_.size()) throw ParseError(toks_[pos_].line, "trailing input '" + toks_[pos_].text + "'");
        return e;
    }

private:
    const Token& peek() {
        if (pos_ >= toks_.size()) {
            throw ParseError(toks_.empty() ? 1 : toks_.back().line, "unexpected end of recipe");
        }
        return toks_[pos_];
    }

    const Token& next() {
        const Token& t = peek();
        ++pos_;
        return t;
    }

    void expect(const char* text) {
        const Token& t = next();
        if (t.text != text) throw ParseError(t.line, std::string("expected '") + text + "', got '" + t.text + "'");
    }

    RecipeExpr parse_expr() {
        expect("(");
        const Token& head = next();
        if (head.text == "sum" || head.text == "prod") {
            std::vector<RecipeExpr> children;
            while (peek().text != ")") children.push_back(parse_expr());
            expect(")");
            return head.text == "sum" ? RecipeExpr::sum(std::move(children))
                                      : RecipeExpr::product(std::move(children));
        }
        if (head.text != "mono") throw ParseError(head.line, "unknown recipe node '" + head.text + "'");
        const Token& re = next();
        const double real = parse_double(re.text, re.line);
        const Token& im = next();
        const double imag = parse_double(im.text, im.line);
        expect(":");
        std::vector<MultiIndex::exponent_type> exps;
        while (peek().text != ")") {
            const Token& t = next();
            MultiIndex::exponent_type v{};
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
                throw ParseError(t.line, "bad exponent '" + t.text + "'");
            }
            exps.push_back(v);
        }
        expect(")");
        return RecipeExpr::leaf(Complex(real, imag), MultiIndex(std::move(exps)));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

void validate_recipe(const RecipeExpr& expr) {
    std::optional<std::size_t> dim;
    validate_node(expr, "root", dim);
}

Symbol build_recipe(const RecipeExpr& expr) {
    validate_recipe(expr);
    return evaluate_node(expr);
}

RecipeExpr parse_recipe(std::string_view text) {
    return Parser(tokenize(text)).parse_all();
}

} // namespace hankel
