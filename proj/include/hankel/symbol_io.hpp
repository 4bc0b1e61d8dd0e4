#pragma once

#include "hankel/symbol.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace hankel {

// Line-oriented text format:
//
//   # comment (also allowed after a term)
//   dim 2
//   1 0 : 2 0
//   0.5 0 : 1 1
//
// Each term line is `<re> <im> : <e1> ... <ed>`. Reals are written in
// shortest round-trip form, so write -> parse reproduces every double.

Symbol parse_symbol(std::string_view text);
Symbol read_symbol_file(const std::string& path);

std::string write_symbol(const Symbol& s);

/// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

/// Strict decimal parse of a whole token; throws ParseError(line, ...) on failure.
double parse_double(std::string_view token, std::size_t line);

} // namespace hankel
