#pragma once

// Element expressions over a single generator x.
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := INT [atom] | atom ("^" UINT)*
//   atom   := VAR | FUNC "(" expr ")" | "(" expr ")"
//   FUNC   := "res" | "tr" | "N" | "conj"
//   VAR    := "x" | "n" | "t" | "t_" UINT | "t_{" UINT "," UINT "}"
//
// An integer directly followed by an atom multiplies it ("2n", "3t_2"), so
// printed normal forms parse back. x lives at the generator's level; n, t,
// t_i and t_{i,j} are fixed-level and stand for N(ξ), tr(1), tr(ξ^i) and
// tr(ξ^i·conj(ξ)^j), where ξ is x or res(x). Integer literals take whatever
// level their context needs. A fixed-level value used where an underlying one
// is needed is restricted implicitly; conj of a fixed-level value is itself.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/free_functors.hpp"
#include "tambara/functor.hpp"
#include "tambara/integer.hpp"

namespace tambara {

enum class Level { any, fixed, underlying };

std::string_view to_string(Level level);
Level parse_level(std::string_view name);  // "fixed" | "underlying", throws InputError

struct Expr {
  enum class Op { integer, x, n, t, t_index, add, sub, neg, mul, pow, res, tr, norm, conj };

  Op op = Op::integer;
  Integer value;           // integer
  unsigned i = 0;          // t_index, or the exponent of pow
  std::optional<unsigned> j;  // second index of t_{i,j}
  std::vector<Expr> args;
  std::size_t offset = 0;  // byte offset of the node in the source text
  Level level = Level::any;  // set by resolve_levels
};

// Throws SyntaxError carrying the byte offset of the first bad token.
Expr parse_expression(std::string_view text);

// Annotates levels given the generator's level and the requested level of the
// result, inserting implicit restrictions. Throws LevelError naming the
// offending operator.
Expr resolve_levels(Expr expr, GeneratorLevel generator, Level result);

// The operator name used in messages: "+", "res", "x", ...
std::string_view op_name(Expr::Op op);

// x at the generator's level; only one member is used.
template <GreenFunctor F>
struct Binding {
  GeneratorLevel generator = GeneratorLevel::fixed;
  std::optional<FixedOf<F>> fixed;
  std::optional<UnderlyingOf<F>> underlying;
};

namespace detail {

template <GreenFunctor F>
class ExpressionEvaluator {
 public:
  ExpressionEvaluator(const F& f, const Binding<F>& x) : f_(f), x_(x) {}

  FixedOf<F> fixed(const Expr& e) const {
    const auto& r = f_.fixed();
    switch (e.op) {
      case Expr::Op::integer:
        return from_integer(r, e.value);
      case Expr::Op::x:
        return *bound_fixed();
      case Expr::Op::n:
        return checked_norm(f_, xi());
      case Expr::Op::t:
        return f_.tr(f_.underlying().one());
      case Expr::Op::t_index: {
        const auto& ru = f_.underlying();
        auto m = power(ru, xi(), e.i);
        if (e.j) {
          m = ru.mul(m, power(ru, f_.conj(xi()), *e.j));
        }
        return f_.tr(m);
      }
      case Expr::Op::add:
        return r.add(fixed(e.args[0]), fixed(e.args[1]));
      case Expr::Op::sub:
        return sub(r, fixed(e.args[0]), fixed(e.args[1]));
      case Expr::Op::neg:
        return r.neg(fixed(e.args[0]));
      case Expr::Op::mul:
        return r.mul(fixed(e.args[0]), fixed(e.args[1]));
      case Expr::Op::pow:
        return power(r, fixed(e.args[0]), e.i);
      case Expr::Op::tr:
        return f_.tr(underlying(e.args[0]));
      case Expr::Op::norm:
        return checked_norm(f_, underlying(e.args[0]));
      case Expr::Op::conj:
        return fixed(e.args[0]);
      case Expr::Op::res:
        break;
    }
    throw LevelError(std::string(op_name(e.op)) + " does not produce a fixed-level value");
  }

  UnderlyingOf<F> underlying(const Expr& e) const {
    const auto& r = f_.underlying();
    switch (e.op) {
      case Expr::Op::integer:
        return from_integer(r, e.value);
      case Expr::Op::x:
        return xi();
      case Expr::Op::add:
        return r.add(underlying(e.args[0]), underlying(e.args[1]));
      case Expr::Op::sub:
        return sub(r, underlying(e.args[0]), underlying(e.args[1]));
      case Expr::Op::neg:
        return r.neg(underlying(e.args[0]));
      case Expr::Op::mul:
        return r.mul(underlying(e.args[0]), underlying(e.args[1]));
      case Expr::Op::pow:
        return power(r, underlying(e.args[0]), e.i);
      case Expr::Op::res:
        return f_.res(fixed(e.args[0]));
      case Expr::Op::conj:
        return f_.conj(underlying(e.args[0]));
      default:
        break;
    }
    throw LevelError(std::string(op_name(e.op)) + " does not produce an underlying-level value");
  }

 private:
  const std::optional<FixedOf<F>>& bound_fixed() const {
    if (x_.generator != GeneratorLevel::fixed || !x_.fixed) {
      throw InputError("x is not bound at the fixed level");
    }
    return x_.fixed;
  }

  // x, or res(x) for a fixed-level generator.
  UnderlyingOf<F> xi() const {
    if (x_.generator == GeneratorLevel::fixed) {
      return f_.res(*bound_fixed());
    }
    if (!x_.underlying) {
      throw InputError("x is not bound at the underlying level");
    }
    return *x_.underlying;
  }

  const F& f_;
  const Binding<F>& x_;
};

}  // namespace detail

// Evaluates a resolved expression at its annotated level.
template <GreenFunctor F>
FixedOf<F> evaluate_fixed(const Expr& e, const F& f, const Binding<F>& x) {
  return detail::ExpressionEvaluator<F>(f, x).fixed(e);
}

template <GreenFunctor F>
UnderlyingOf<F> evaluate_underlying(const Expr& e, const F& f, const Binding<F>& x) {
  return detail::ExpressionEvaluator<F>(f, x).underlying(e);
}

// Parses, resolves and evaluates `text` at `result`, rendering with the
// functor's own format.
template <GreenFunctor F>
std::string evaluate_expression(std::string_view text, const F& f, const Binding<F>& x,
                                Level result) {
  const Expr e = resolve_levels(parse_expression(text), x.generator, result);
  if (result == Level::fixed) {
    return f.fixed().format(evaluate_fixed(e, f, x));
  }
  return f.underlying().format(evaluate_underlying(e, f, x));
}

}  // namespace tambara
