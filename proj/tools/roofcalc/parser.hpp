#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "roofcalc/bundles.hpp"
#include "roofcalc/errors.hpp"

namespace roofcalc::cli {

/// Error(Parse) carrying the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar:
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := 'Sym^' INT '(' expr ')' | 'Wedge^' INT '(' expr ')'
///           | 'Dual(' expr ')' | '(' expr ')' | atom
///   atom   := 'U' | 'UD' | 'Q' | 'QD' | 'O(' INT ')' | 'S[' INTS ']' block
///           | '0'
///   block  := 'U' | 'UD' | 'Q' | 'QD'
/// Blanks between tokens are ignored. Sym/Wedge of anything but twisted
/// single-box atoms rethrows PlethysmRequired naming the subexpression.
BundleExpr parse_bundle(std::string_view text, Ambient ambient);

/// "1,0,-2" -> {1, 0, -2}; an empty string gives an empty list.
std::vector<int> parse_int_list(std::string_view text);

/// "a,b|c,d,e" -> DoubleWeight.
DoubleWeight parse_double_weight(std::string_view text);

}  // namespace roofcalc::cli
