#pragma once

#include "tancat/polynomial.hpp"

#include <cstddef>
#include <string>

namespace tancat {

struct ParseError : TancatError {
    ParseError(const std::string& msg, size_t pos)
        : TancatError("parse error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
    size_t position;
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' natural)?
//   atom     := rational | variable | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//   variable := letter (letter|digit|'_')*
// '-' (binary or in a literal) is rejected when the rig is N; '/' literals
// are rejected outside Q. Whitespace between tokens is ignored.
Polynomial parse_poly(const std::string& text, Rig rig);

RigScalar parse_scalar(const std::string& text, Rig rig);

}  // namespace tancat
