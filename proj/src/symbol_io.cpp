#include "hankel/symbol_io.hpp"

#include "hankel/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hankel {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
T parse_unsigned(std::string_view token, std::size_t line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

double parse_double(std::string_view token, std::size_t line) {
    double value = 0.0;
    // from_chars rejects a leading '+', which is harmless to accept.
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "bad real '" + std::string(token) + "'");
    }
    return value;
}

Symbol parse_symbol(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t dim = 0;
    std::vector<std::pair<MultiIndex, Complex>> terms;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        line = line.substr(0, line.find('#'));
        pos = eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty()) {
            if (eol == text.size()) break;
            continue;
        }

        if (dim == 0) {
            if (tokens.size() != 2 || tokens[0] != "dim") {
                throw ParseError(line_no, "expected header 'dim <d>'");
            }
            dim = parse_unsigned<std::size_t>(tokens[1], line_no, "dimension");
            if (dim == 0) throw ParseError(line_no, "dimension must be positive");
        } else {
            if (tokens.size() != dim + 3 || tokens[2] != ":") {
                throw ParseError(line_no, "expected '<re> <im> : <e1> ... <e" + std::to_string(dim) + ">'");
            }
            const double re = parse_double(tokens[0], line_no);
            const double im = parse_double(tokens[1], line_no);
            std::vector<MultiIndex::exponent_type> exps(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                exps[j] = parse_unsigned<MultiIndex::exponent_type>(tokens[3 + j], line_no, "exponent");
            }
            terms.emplace_back(MultiIndex(std::move(exps)), Complex(re, im));
        }
        if (eol == text.size()) break;
    }
    if (dim == 0) throw ParseError(line_no, "missing 'dim' header");
    return Symbol(dim, terms);
}

Symbol read_symbol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_symbol(buf.str());
}

std::string write_symbol(const Symbol& s) {
    std::string out = "dim " + std::to_string(s.dimension()) + "\n";
    for (const auto& [alpha, c] : s.terms()) {
        out += format_double(c.real());
        out += ' ';
        out += format_double(c.imag());
        out += " :";
        for (auto e : alpha.exponents()) {
            out += ' ';
            out += std::to_string(e);
        }
        out += '\n';
    }
    return out;
}

} // namespace hankel
