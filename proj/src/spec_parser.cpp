#include "levifol/spec_parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <set>

namespace levifol {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> lex(const std::string& src, std::size_t line0 = 1, std::size_t col0 = 1) {
  std::vector<Token> out;
  std::size_t line = line0, col = col0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, src.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::string("+-*/^(),:;").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

/// A polynomial or a vector field, as produced while evaluating an expression.
struct Value {
  bool is_field = false;
  Polynomial poly;
  PolyVectorField field;
};

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, std::size_t pos, const std::vector<std::string>& vars)
      : toks_(toks), pos_(pos), vars_(vars), n_(vars.size()) {}

  Value parse_expr() {
    Value acc = parse_term();
    while (is_symbol("+") || is_symbol("-")) {
      const Token& op = toks_[pos_++];
      Value rhs = parse_term();
      acc = combine_additive(acc, rhs, op);
    }
    return acc;
  }

  std::size_t position() const { return pos_; }

 private:
  bool is_symbol(const char* s) const {
    return toks_[pos_].kind == Tok::Symbol && toks_[pos_].text == s;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  Value combine_additive(const Value& a, const Value& b, const Token& op) {
    if (a.is_field != b.is_field) fail(op, "cannot add a function and a vector field");
    Value out = a;
    if (a.is_field) {
      out.field = op.text == "+" ? a.field + b.field : a.field - b.field;
    } else {
      out.poly = op.text == "+" ? a.poly + b.poly : a.poly - b.poly;
    }
    return out;
  }

  Value parse_term() {
    Value acc = parse_unary();
    while (is_symbol("*") || is_symbol("/")) {
      const Token& op = toks_[pos_++];
      const Token& rhs_tok = toks_[pos_];
      Value rhs = parse_unary();
      if (op.text == "*") {
        if (acc.is_field && rhs.is_field) fail(op, "cannot multiply two vector fields");
        if (acc.is_field) acc.field = rhs.poly * acc.field;
        else if (rhs.is_field) acc = Value{true, Polynomial(n_), acc.poly * rhs.field};
        else acc.poly = acc.poly * rhs.poly;
      } else {
        if (rhs.is_field || rhs.poly.degree() != Degree(0))
          fail(rhs_tok, "division is only allowed by a nonzero constant");
        Rational inv = 1 / rhs.poly.constant_term();
        if (acc.is_field) acc.field *= inv;
        else acc.poly *= inv;
      }
    }
    return acc;
  }

  Value parse_unary() {
    if (is_symbol("-")) {
      ++pos_;
      Value v = parse_unary();
      if (v.is_field) v.field = -v.field;
      else v.poly = -v.poly;
      return v;
    }
    if (is_symbol("+")) {
      ++pos_;
      return parse_unary();
    }
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_primary();
    if (!is_symbol("^")) return base;
    const Token& op = toks_[pos_++];
    const Token& e = toks_[pos_];
    if (e.kind != Tok::Number) fail(e, "expected a non-negative integer exponent");
    ++pos_;
    if (base.is_field) fail(op, "cannot raise a vector field to a power");
    if (e.text.size() > 4) fail(e, "exponent too large");
    int k = std::stoi(e.text);
    Polynomial r = Polynomial::constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * base.poly;
    base.poly = r;
    return base;
  }

  Value parse_primary() {
    const Token& t = toks_[pos_];
    if (t.kind == Tok::Number) {
      ++pos_;
      return Value{false, Polynomial::constant(n_, Rational(mpz_class(t.text))), PolyVectorField()};
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      auto it = std::find(vars_.begin(), vars_.end(), t.text);
      if (it != vars_.end())
        return Value{false, Polynomial::variable(n_, static_cast<std::size_t>(it - vars_.begin())),
                     PolyVectorField()};
      if (t.text.size() > 1 && t.text[0] == 'd') {
        auto jt = std::find(vars_.begin(), vars_.end(), t.text.substr(1));
        if (jt != vars_.end())
          return Value{true, Polynomial(n_),
                       PolyVectorField::coordinate(n_, static_cast<std::size_t>(jt - vars_.begin()))};
      }
      fail(t, "undeclared variable '" + t.text + "'");
    }
    if (is_symbol("(")) {
      ++pos_;
      Value v = parse_expr();
      if (!is_symbol(")")) fail(toks_[pos_], "expected ')'");
      ++pos_;
      return v;
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  const std::vector<std::string>& vars_;
  std::size_t n_;
};

void check_variables(const std::vector<std::string>& vars) {
  if (vars.empty()) throw InputError("at least one variable is required");
  static const std::regex name_re("[a-zA-Z][a-zA-Z0-9_]*");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!std::regex_match(v, name_re)) throw InputError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("variable '" + v + "' declared twice");
  }
}

Value parse_whole(const std::string& expr, const std::vector<std::string>& vars) {
  check_variables(vars);
  auto toks = lex(expr);
  ExprParser p(toks, 0, vars);
  Value v = p.parse_expr();
  const Token& t = toks[p.position()];
  if (t.kind != Tok::End) throw ParseError(t.line, t.column, "unexpected '" + t.text + "'");
  return v;
}

}  // namespace

PolyVectorField parse_field(const std::string& expr, const std::vector<std::string>& vars) {
  Value v = parse_whole(expr, vars);
  if (!v.is_field) {
    if (v.poly.is_zero()) return PolyVectorField(vars.size());
    throw InputError("expression is a function, not a vector field");
  }
  return v.field;
}

Polynomial parse_polynomial(const std::string& expr, const std::vector<std::string>& vars) {
  Value v = parse_whole(expr, vars);
  if (v.is_field) throw InputError("expression is a vector field, not a function");
  return v.poly;
}

FoliationSpec parse_spec(const std::string& source) {
  auto toks = lex(source);
  FoliationSpec spec;
  std::size_t pos = 0;
  auto expect = [&](const char* sym) {
    const Token& t = toks[pos];
    if (t.kind != Tok::Symbol || t.text != sym)
      throw ParseError(t.line, t.column, std::string("expected '") + sym + "'");
    ++pos;
  };
  bool have_vars = false;
  while (toks[pos].kind != Tok::End) {
    const Token& key = toks[pos];
    if (key.kind != Tok::Ident) throw ParseError(key.line, key.column, "expected a statement keyword");
    ++pos;
    expect(":");
    if (key.text == "vars") {
      if (have_vars) throw ParseError(key.line, key.column, "variables declared twice");
      while (true) {
        const Token& v = toks[pos];
        if (v.kind != Tok::Ident) throw ParseError(v.line, v.column, "expected a variable name");
        if (std::find(spec.variables.begin(), spec.variables.end(), v.text) != spec.variables.end())
          throw ParseError(v.line, v.column, "variable '" + v.text + "' declared twice");
        spec.variables.push_back(v.text);
        ++pos;
        if (toks[pos].kind == Tok::Symbol && toks[pos].text == ",") {
          ++pos;
          continue;
        }
        break;
      }
      expect(";");
      have_vars = true;
    } else if (key.text == "gen") {
      if (!have_vars) throw ParseError(key.line, key.column, "generator before the vars declaration");
      std::size_t start = pos;
      ExprParser p(toks, pos, spec.variables);
      Value v = p.parse_expr();
      pos = p.position();
      const Token& end = toks[pos];
      if (end.kind != Tok::Symbol || end.text != ";")
        throw ParseError(end.line, end.column, end.kind == Tok::End ? "expected ';'" : "unexpected '" + end.text + "'");
      std::string text;
      for (std::size_t k = start; k < pos; ++k) text += toks[k].text;
      ++pos;
      std::size_t index = spec.generators.size() + 1;
      if (!v.is_field && !v.poly.is_zero())
        throw ParseError(toks[start].line, toks[start].column,
                         "generator " + std::to_string(index) + " is a function, not a vector field");
      PolyVectorField f = v.is_field ? v.field : PolyVectorField(spec.variables.size());
      if (!f.vanishes_at_origin())
        throw ParseError(toks[start].line, toks[start].column,
                         "generator " + std::to_string(index) +
                             " does not vanish at the origin: constant term " +
                             f.homogeneous_part(0).to_string(spec.variables));
      spec.generators.push_back(std::move(f));
      spec.generator_sources.push_back(std::move(text));
    } else if (key.text == "order" || key.text == "max_degree") {
      const Token& v = toks[pos];
      if (v.kind != Tok::Number || v.text.size() > 6)
        throw ParseError(v.line, v.column, "expected a non-negative integer");
      spec.options[key.text] = std::stoi(v.text);
      ++pos;
      expect(";");
    } else {
      throw ParseError(key.line, key.column, "unknown statement '" + key.text + "'");
    }
  }
  if (!have_vars) throw ParseError(toks[pos].line, toks[pos].column, "missing vars declaration");
  if (spec.generators.empty()) throw ParseError(toks[pos].line, toks[pos].column, "no generators");
  return spec;
}

std::string render_spec(const FoliationSpec& spec) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) {
    if (i) out += ", ";
    out += spec.variables[i];
  }
  out += ";\n";
  for (const auto& g : spec.generators) out += "gen: " + g.to_string(spec.variables) + ";\n";
  for (const auto& [k, v] : spec.options) out += k + ": " + std::to_string(v) + ";\n";
  return out;
}

}  // namespace levifol
