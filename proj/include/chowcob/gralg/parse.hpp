#pragma once

#include <map>
#include <string>

#include "chowcob/gralg/algebra.hpp"

namespace chowcob {

struct ParseError : MathError {
  ParseError(const std::string& msg, std::size_t pos)
      : MathError(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

using Definitions = std::map<std::string, Polynomial>;

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := coeff? ('*'? factor)*
// factor := (ident | '(' expr ')') ('^' nat)?
// coeff  := integer ('/' integer)?
// identifiers resolve to generators first, then to definitions
Polynomial parse_poly(const std::string& text, const AlgebraPtr& A, const Definitions* defs = nullptr);

}  // namespace chowcob
