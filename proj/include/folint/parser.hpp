#pragma once

#include "folint/ratfunc2.hpp"
#include <string>
#include <vector>

namespace folint {

struct ParseError : std::runtime_error {
    size_t offset;
    std::vector<std::string> expected;
    ParseError(size_t off, std::vector<std::string> exp, const std::string& msg)
        : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

// Grammar (no implicit multiplication):
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' uint)?
//   base     := 'x' | 'y' | rational | '(' expr ')'
//   rational := int ('/' posint)?
QRat2 parse_expression(const std::string& text);

} // namespace folint
