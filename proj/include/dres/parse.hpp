#ifndef DRES_PARSE_HPP
#define DRES_PARSE_HPP

#include "dres/diffpoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dres {

enum class ParseErrorKind {
  Syntax,
  Nonlinearity,
  UnknownSymbol,
  NonContiguousIndices,
  EmptyColumn,
  ConstantEquation,
};
std::string to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int col, const std::string& what);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int col_;
};

/// One equation `x<i> = expr` per line; `#` starts a comment. The right-hand
/// side is linear in u-derivatives (`u2''` or `d(u2,2)`) with coefficients
/// built from integers, `t`, + - * / ^ and parentheses.
DppeSystem parse_system(std::string_view source);

/// Inverse of parse_system: parse_system(print_system(s)) == s.
std::string print_system(const DppeSystem& sys);

/// An element of Q(t), e.g. `(t^2+1)/(t-1)`.
RatFunc parse_ratfunc(std::string_view text);
/// An operator in Q(t)[d], e.g. `t*d^2+(t+1)*d+1`; products follow the
/// Ore rule, so `d*t` is `t*d+1`.
OreOp parse_oreop(std::string_view text);
/// A linear differential polynomial in x- and u-derivatives.
LinDiffPoly parse_diffpoly(std::string_view text);

}  // namespace dres

#endif  // DRES_PARSE_HPP
