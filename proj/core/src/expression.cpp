#include "tambara/expression.hpp"

#include <cctype>

namespace tambara {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::any:
      return "any";
    case Level::fixed:
      return "fixed";
    case Level::underlying:
      return "underlying";
  }
  return "";
}

Level parse_level(std::string_view name) {
  if (name == "fixed") {
    return Level::fixed;
  }
  if (name == "underlying") {
    return Level::underlying;
  }
  throw InputError("unknown level '" + std::string(name) + "'");
}

std::string_view op_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::integer:
      return "integer";
    case Expr::Op::x:
      return "x";
    case Expr::Op::n:
      return "n";
    case Expr::Op::t:
      return "t";
    case Expr::Op::t_index:
      return "t_i";
    case Expr::Op::add:
      return "+";
    case Expr::Op::sub:
    case Expr::Op::neg:
      return "-";
    case Expr::Op::mul:
      return "*";
    case Expr::Op::pow:
      return "^";
    case Expr::Op::res:
      return "res";
    case Expr::Op::tr:
      return "tr";
    case Expr::Op::norm:
      return "N";
    case Expr::Op::conj:
      return "conj";
  }
  return "";
}

namespace {

Expr node(Expr::Op op, std::size_t offset, std::vector<Expr> args = {}) {
  Expr e;
  e.op = op;
  e.offset = offset;
  e.args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail();
    }
    return e;
  }

 private:
  Expr expr() {
    skip_space();
    Expr left;
    if (peek() == '-') {
      const std::size_t at = pos_++;
      left = node(Expr::Op::neg, at, {term()});
    } else {
      left = term();
    }
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') {
        return left;
      }
      const std::size_t at = pos_++;
      left = node(c == '+' ? Expr::Op::add : Expr::Op::sub, at, {std::move(left), term()});
    }
  }

  Expr term() {
    Expr left = factor();
    while (true) {
      skip_space();
      if (peek() != '*') {
        return left;
      }
      const std::size_t at = pos_++;
      left = node(Expr::Op::mul, at, {std::move(left), factor()});
    }
  }

  Expr factor() {
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos_;
      Expr literal = node(Expr::Op::integer, at);
      literal.value = Integer(digits());
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(') {
        return node(Expr::Op::mul, at, {std::move(literal), powers(atom())});
      }
      return powers(std::move(literal));
    }
    return powers(atom());
  }

  Expr powers(Expr base) {
    while (true) {
      skip_space();
      if (peek() != '^') {
        return base;
      }
      const std::size_t at = pos_++;
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected an exponent");
      }
      const std::size_t digits_at = pos_;
      const std::string exponent = digits();
      if (exponent.size() > 6) {
        throw SyntaxError("exponent too large", digits_at);
      }
      Expr e = node(Expr::Op::pow, at, {std::move(base)});
      e.i = static_cast<unsigned>(std::stoul(exponent));
      base = std::move(e);
    }
  }

  Expr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (peek() == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      fail();
    }
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) {
      name += text_[pos_++];
    }
    if (name == "x") {
      return node(Expr::Op::x, at);
    }
    if (name == "n") {
      return node(Expr::Op::n, at);
    }
    if (name == "t") {
      return peek() == '_' ? indexed_t(at) : node(Expr::Op::t, at);
    }
    const Expr::Op op = name == "res"    ? Expr::Op::res
                        : name == "tr"   ? Expr::Op::tr
                        : name == "N"    ? Expr::Op::norm
                        : name == "conj" ? Expr::Op::conj
                                         : Expr::Op::integer;
    if (op == Expr::Op::integer) {
      throw SyntaxError("unknown name '" + name + "'", at);
    }
    skip_space();
    expect('(');
    Expr argument = expr();
    expect(')');
    return node(op, at, {std::move(argument)});
  }

  // After "t": "_" UINT or "_{" UINT "," UINT "}".
  Expr indexed_t(std::size_t at) {
    ++pos_;
    Expr e = node(Expr::Op::t_index, at);
    if (peek() == '{') {
      ++pos_;
      e.i = index();
      skip_space();
      expect(',');
      skip_space();
      e.j = index();
      skip_space();
      expect('}');
    } else {
      e.i = index();
    }
    return e;
  }

  unsigned index() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an index");
    }
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) {
      throw SyntaxError("index too large", at);
    }
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out += text_[pos_++];
    }
    return out;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what = "") const {
    std::string message = pos_ < text_.size()
                              ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                              : "unexpected end of input";
    if (!what.empty()) {
      message += ", " + what;
    }
    throw SyntaxError(message, pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Expr restricted(Expr e) {
  const std::size_t at = e.offset;
  Expr out = node(Expr::Op::res, at, {std::move(e)});
  out.level = Level::underlying;
  return out;
}

// Brings a child to the underlying level; integer-only subtrees stay as they are.
Expr to_underlying(Expr e) {
  return e.level == Level::fixed ? restricted(std::move(e)) : std::move(e);
}

Expr resolve(Expr e, GeneratorLevel generator) {
  for (auto& arg : e.args) {
    arg = resolve(std::move(arg), generator);
  }
  switch (e.op) {
    case Expr::Op::integer:
      e.level = Level::any;
      break;
    case Expr::Op::x:
      e.level = generator == GeneratorLevel::fixed ? Level::fixed : Level::underlying;
      break;
    case Expr::Op::n:
    case Expr::Op::t:
    case Expr::Op::t_index:
      e.level = Level::fixed;
      break;
    case Expr::Op::add:
    case Expr::Op::sub:
    case Expr::Op::mul: {
      const Level a = e.args[0].level;
      const Level b = e.args[1].level;
      if (a == Level::underlying || b == Level::underlying) {
        e.args[0] = to_underlying(std::move(e.args[0]));
        e.args[1] = to_underlying(std::move(e.args[1]));
        e.level = Level::underlying;
      } else {
        e.level = a == Level::any ? b : a;
      }
      break;
    }
    case Expr::Op::neg:
    case Expr::Op::pow:
    case Expr::Op::conj:
      e.level = e.args[0].level;
      break;
    case Expr::Op::res:
      if (e.args[0].level == Level::underlying) {
        throw LevelError("res expects a fixed-level argument (offset " +
                         std::to_string(e.offset) + ")");
      }
      e.level = Level::underlying;
      break;
    case Expr::Op::tr:
    case Expr::Op::norm:
      e.args[0] = to_underlying(std::move(e.args[0]));
      e.level = Level::fixed;
      break;
  }
  return e;
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

Expr resolve_levels(Expr expr, GeneratorLevel generator, Level result) {
  Expr e = resolve(std::move(expr), generator);
  if (result == Level::fixed && e.level == Level::underlying) {
    throw LevelError(std::string(op_name(e.op)) +
                     " gives an underlying-level value but the fixed level was requested");
  }
  if (result == Level::underlying && e.level == Level::fixed) {
    return restricted(std::move(e));
  }
  return e;
}

}  // namespace tambara
