#include "dres/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace dres {

std::string to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::Nonlinearity: return "nonlinearity";
    case ParseErrorKind::UnknownSymbol: return "unknown symbol";
    case ParseErrorKind::NonContiguousIndices: return "non-contiguous indices";
    case ParseErrorKind::EmptyColumn: return "empty column";
    case ParseErrorKind::ConstantEquation: return "constant equation";
  }
  return "error";
}

ParseError::ParseError(ParseErrorKind kind, int line, int col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         to_string(kind) + ": " + what),
      kind_(kind),
      line_(line),
      col_(col) {}

namespace {

enum class Tok { Int, Ident, Sym, Newline, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;

  bool is(char c) const { return type == Tok::Sym && text.size() == 1 && text[0] == c; }
};

[[noreturn]] void fail(ParseErrorKind kind, const Token& at, const std::string& what) {
  throw ParseError(kind, at.line, at.col, what);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    Token tok{Tok::Sym, "", line, col};
    if (c == '\n') {
      tok.type = Tok::Newline;
      advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.type = Tok::Int;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        tok.text += src[i];
        advance();
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      tok.type = Tok::Ident;
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) {
        tok.text += src[i];
        advance();
      }
    } else if (std::string_view("+-*/^()=,'").find(c) != std::string_view::npos) {
      tok.text = std::string(1, c);
      advance();
    } else {
      fail(ParseErrorKind::Syntax, tok, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

// x12 -> (X, 12); nullopt when the name is not an indexed x/u.
std::optional<std::pair<VarKind, int>> indexed_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'u')) return std::nullopt;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
  }
  if (name.size() > 8) return std::nullopt;
  return std::make_pair(name[0] == 'x' ? VarKind::X : VarKind::U, std::stoi(name.substr(1)));
}

RatFunc power(const RatFunc& base, int k) {
  RatFunc r(1);
  for (int s = 0; s < k; ++s) r *= base;
  return r;
}

// Semantics for Q(t) and for linear differential polynomials.
struct LinSem {
  using Value = LinDiffPoly;
  bool allow_x = true;
  bool allow_u = true;
  std::map<int, Token>* u_seen = nullptr;

  Value number(const Integer& v) const { return LinDiffPoly(RatFunc(Rational(v))); }

  Value variable(const Token& tok, int order) const {
    if (tok.text == "t") {
      if (order > 0) fail(ParseErrorKind::Syntax, tok, "derivative marks apply to x- and u-variables only");
      return LinDiffPoly(RatFunc::t());
    }
    auto iv = indexed_name(tok.text);
    const bool ok = iv && ((iv->first == VarKind::X && allow_x) || (iv->first == VarKind::U && allow_u));
    if (!ok) fail(ParseErrorKind::UnknownSymbol, tok, "'" + tok.text + "'");
    if (iv->second < 1) fail(ParseErrorKind::NonContiguousIndices, tok, "indices start at 1");
    if (iv->first == VarKind::U && u_seen) u_seen->try_emplace(iv->second, tok);
    return LinDiffPoly::var(Derivative{iv->first, iv->second, order});
  }

  Value prime(const Value& v, const Token& tok) const {
    if (v.terms().size() != 1 || !v.constant().is_zero() || !v.terms().begin()->second.is_one()) {
      fail(ParseErrorKind::Syntax, tok, "derivative marks apply to x- and u-variables only");
    }
    Derivative d = v.terms().begin()->first;
    ++d.order;
    return LinDiffPoly::var(d);
  }

  Value mul(const Value& a, const Value& b, const Token& tok) const {
    if (!a.terms().empty() && !b.terms().empty()) {
      fail(ParseErrorKind::Nonlinearity, tok, "product of two differential variables");
    }
    return a.terms().empty() ? b.scaled(a.constant()) : a.scaled(b.constant());
  }

  Value div(const Value& a, const Value& b, const Token& tok) const {
    if (!b.terms().empty()) fail(ParseErrorKind::Nonlinearity, tok, "division by a differential variable");
    if (b.constant().is_zero()) fail(ParseErrorKind::Syntax, tok, "division by zero");
    return a.scaled(b.constant().inverse());
  }

  Value pow(const Value& a, int k, const Token& tok) const {
    if (!a.terms().empty()) fail(ParseErrorKind::Nonlinearity, tok, "power of a differential variable");
    return LinDiffPoly(power(a.constant(), k));
  }

  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
};

struct OreSem {
  using Value = OreOp;
  std::map<int, Token>* u_seen = nullptr;

  Value number(const Integer& v) const { return OreOp(RatFunc(Rational(v))); }

  Value variable(const Token& tok, int order) const {
    if (order > 0) fail(ParseErrorKind::Syntax, tok, "derivative marks are not allowed in operators");
    if (tok.text == "t") return OreOp(RatFunc::t());
    if (tok.text == "d") return OreOp::d();
    fail(ParseErrorKind::UnknownSymbol, tok, "'" + tok.text + "'");
  }

  Value prime(const Value&, const Token& tok) const {
    fail(ParseErrorKind::Syntax, tok, "derivative marks are not allowed in operators");
  }

  Value mul(const Value& a, const Value& b, const Token&) const { return a * b; }

  Value div(const Value& a, const Value& b, const Token& tok) const {
    if (b.degree() > 0) fail(ParseErrorKind::Syntax, tok, "division by an operator");
    if (b.is_zero()) fail(ParseErrorKind::Syntax, tok, "division by zero");
    return a * OreOp(b.coeff(0).inverse());
  }

  Value pow(const Value& a, int k, const Token&) const {
    OreOp r(1);
    for (int s = 0; s < k; ++s) r = r * a;
    return r;
  }

  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
};

template <class Sem>
class Parser {
 public:
  using Value = typename Sem::Value;

  Parser(const std::vector<Token>& toks, std::size_t& pos, const Sem& sem, bool allow_dcall)
      : toks_(toks), pos_(pos), sem_(sem), allow_dcall_(allow_dcall) {}

  Value expr() {
    Value v = term();
    while (peek().is('+') || peek().is('-')) {
      const bool plus = next().is('+');
      Value rhs = term();
      v = plus ? sem_.add(v, rhs) : sem_.sub(v, rhs);
    }
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect(char c) {
    if (!peek().is(c)) fail(ParseErrorKind::Syntax, peek(), std::string("expected '") + c + "'" + found());
    ++pos_;
  }

  std::string found() const {
    const Token& t = peek();
    if (t.type == Tok::End) return ", found end of input";
    if (t.type == Tok::Newline) return ", found end of line";
    return ", found '" + t.text + "'";
  }

  int small_int() {
    const Token& t = peek();
    if (t.type != Tok::Int || t.text.size() > 6) fail(ParseErrorKind::Syntax, t, "expected a small integer" + found());
    ++pos_;
    return std::stoi(t.text);
  }

  Value term() {
    Value v = unary();
    while (peek().is('*') || peek().is('/')) {
      const Token& op = next();
      Value rhs = unary();
      v = op.is('*') ? sem_.mul(v, rhs, op) : sem_.div(v, rhs, op);
    }
    return v;
  }

  Value unary() {
    if (peek().is('-')) {
      ++pos_;
      return sem_.neg(unary());
    }
    if (peek().is('+')) {
      ++pos_;
      return unary();
    }
    return powered();
  }

  Value powered() {
    Value v = postfix();
    if (peek().is('^')) {
      const Token& op = next();
      v = sem_.pow(v, small_int(), op);
    }
    return v;
  }

  Value postfix() {
    Value v = primary();
    while (peek().is('\'')) v = sem_.prime(v, next());
    return v;
  }

  Value primary() {
    const Token& tok = peek();
    if (tok.type == Tok::Int) {
      ++pos_;
      return sem_.number(Integer(tok.text));
    }
    if (tok.is('(')) {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (tok.type == Tok::Ident) {
      ++pos_;
      if (tok.text == "d" && allow_dcall_) {
        expect('(');
        const Token& var = peek();
        if (var.type != Tok::Ident) fail(ParseErrorKind::Syntax, var, "expected a variable in d(...)" + found());
        ++pos_;
        int order = 1;
        if (peek().is(',')) {
          ++pos_;
          order = small_int();
        }
        expect(')');
        if (var.text == "t") fail(ParseErrorKind::Syntax, var, "d(...) applies to x- and u-variables only");
        return sem_.variable(var, order);
      }
      return sem_.variable(tok, 0);
    }
    fail(ParseErrorKind::Syntax, tok, "expected a term" + found());
  }

  const std::vector<Token>& toks_;
  std::size_t& pos_;
  const Sem& sem_;
  bool allow_dcall_;
};

template <class Sem>
typename Sem::Value parse_whole(std::string_view text, const Sem& sem, bool allow_dcall) {
  std::vector<Token> toks = lex(text);
  std::erase_if(toks, [](const Token& t) { return t.type == Tok::Newline; });
  std::size_t pos = 0;
  Parser<Sem> p(toks, pos, sem, allow_dcall);
  auto v = p.expr();
  if (toks[pos].type != Tok::End) fail(ParseErrorKind::Syntax, toks[pos], "unexpected '" + toks[pos].text + "'");
  return v;
}

struct Equation {
  Token lhs;
  LinDiffPoly rhs;
};

}  // namespace

DppeSystem parse_system(std::string_view source) {
  const std::vector<Token> toks = lex(source);
  std::map<int, Token> u_seen;
  LinSem sem;
  sem.allow_x = false;
  sem.u_seen = &u_seen;

  std::map<int, Equation> eqs;
  std::size_t pos = 0;
  for (;;) {
    while (toks[pos].type == Tok::Newline) ++pos;
    if (toks[pos].type == Tok::End) break;
    const Token& lhs = toks[pos];
    auto iv = lhs.type == Tok::Ident ? indexed_name(lhs.text) : std::nullopt;
    if (!iv || iv->first != VarKind::X) fail(ParseErrorKind::Syntax, lhs, "expected an equation x<i> = ...");
    if (iv->second < 1) fail(ParseErrorKind::NonContiguousIndices, lhs, "indices start at 1");
    ++pos;
    if (!toks[pos].is('=')) fail(ParseErrorKind::Syntax, toks[pos], "expected '=' after " + lhs.text);
    ++pos;
    Parser<LinSem> p(toks, pos, sem, true);
    LinDiffPoly rhs = p.expr();
    if (toks[pos].type != Tok::Newline && toks[pos].type != Tok::End) {
      fail(ParseErrorKind::Syntax, toks[pos], "unexpected '" + toks[pos].text + "'");
    }
    if (!eqs.try_emplace(iv->second, Equation{lhs, std::move(rhs)}).second) {
      fail(ParseErrorKind::NonContiguousIndices, lhs, lhs.text + " is defined twice");
    }
  }

  const int n = static_cast<int>(eqs.size());
  const Token origin{Tok::End, "", 1, 1};
  if (n < 2) fail(ParseErrorKind::Syntax, eqs.empty() ? origin : eqs.begin()->second.lhs,
                  "a system needs at least two equations");
  for (const auto& [i, eq] : eqs) {
    if (i > n) fail(ParseErrorKind::NonContiguousIndices, eq.lhs, eq.lhs.text + " but only " + std::to_string(n) + " equations");
  }
  for (const auto& [j, tok] : u_seen) {
    if (j > n - 1) {
      fail(ParseErrorKind::NonContiguousIndices, tok,
           tok.text + " exceeds the " + std::to_string(n - 1) + " parameters of " + std::to_string(n) + " equations");
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    bool present = false;
    for (const auto& [i, eq] : eqs) {
      for (const auto& [d, c] : eq.rhs.terms()) present = present || (d.kind == VarKind::U && d.index == j);
    }
    if (!present) {
      fail(ParseErrorKind::EmptyColumn, eqs.rbegin()->second.lhs, "u" + std::to_string(j) + " does not occur");
    }
  }

  std::vector<RatFunc> a;
  std::vector<std::vector<OreOp>> ops;
  for (const auto& [i, eq] : eqs) {
    std::vector<std::vector<RatFunc>> coeffs(static_cast<std::size_t>(n - 1));
    for (const auto& [d, c] : eq.rhs.terms()) {
      auto& col = coeffs[static_cast<std::size_t>(d.index - 1)];
      if (col.size() <= static_cast<std::size_t>(d.order)) col.resize(static_cast<std::size_t>(d.order) + 1);
      col[static_cast<std::size_t>(d.order)] = -c;
    }
    if (eq.rhs.terms().empty()) fail(ParseErrorKind::ConstantEquation, eq.lhs, eq.lhs.text + " has no parameter");
    std::vector<OreOp> row;
    for (auto& col : coeffs) row.emplace_back(std::move(col));
    ops.push_back(std::move(row));
    a.push_back(eq.rhs.constant());
  }
  return DppeSystem(std::move(a), std::move(ops));
}

std::string print_system(const DppeSystem& sys) {
  std::ostringstream out;
  for (int i = 0; i < sys.n(); ++i) {
    LinDiffPoly rhs(sys.a(i));
    for (int j = 0; j < sys.params(); ++j) rhs -= apply(sys.op(i, j), j + 1);
    out << "x" << i + 1 << " = " << rhs.to_string() << "\n";
  }
  return out.str();
}

RatFunc parse_ratfunc(std::string_view text) {
  LinSem sem;
  sem.allow_x = false;
  sem.allow_u = false;
  return parse_whole(text, sem, false).constant();
}

OreOp parse_oreop(std::string_view text) { return parse_whole(text, OreSem{}, false); }

LinDiffPoly parse_diffpoly(std::string_view text) { return parse_whole(text, LinSem{}, true); }

}  // namespace dres
