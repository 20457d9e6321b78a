#pragma once

// Functor arguments on the command line: a JSON table file, builtin:burnside,
// builtin:burnside-mod:<n> or one of the four free builtins.

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "tambara/burnside.hpp"
#include "tambara/expression.hpp"
#include "tambara/finite_functor.hpp"
#include "tambara/free_functors.hpp"
#include "tambara/gset.hpp"

namespace tambara::cli {

using AnyFunctor = std::variant<Burnside, FreeGreenFixed, FreeGreenUnderlying, FreeTambaraFixed,
                                FreeTambaraUnderlying, FiniteFunctor>;

// Throws InputError for unknown builtins and unreadable or malformed files.
AnyFunctor load_functor(std::string_view source);

// The free builtin matching a generator level and indexing system.
AnyFunctor free_functor(GeneratorLevel generator, IndexingSystem system);

template <class F>
constexpr bool is_free =
    std::is_same_v<F, FreeGreenFixed> || std::is_same_v<F, FreeGreenUnderlying> ||
    std::is_same_v<F, FreeTambaraFixed> || std::is_same_v<F, FreeTambaraUnderlying>;

// Free functors bind x to their generator; other functors start unbound at
// the requested generator level.
template <GreenFunctor F>
Binding<F> initial_binding(const F& f, GeneratorLevel generator) {
  Binding<F> x;
  if constexpr (is_free<F>) {
    x.generator = F::generator_level;
    if constexpr (F::generator_level == GeneratorLevel::fixed) {
      x.fixed = f.generator();
    } else {
      x.underlying = f.generator();
    }
  } else {
    x.generator = generator;
  }
  return x;
}

// Table functors take element names; the others take expressions, with x
// bound as in `x`.
template <GreenFunctor F>
FixedOf<F> parse_fixed(const F& f, const Binding<F>& x, const std::string& text) {
  if constexpr (std::is_same_v<F, FiniteFunctor>) {
    if (const auto e = f.fixed().find(text)) {
      return *e;
    }
    throw InputError("unknown fixed-level element '" + text + "'");
  } else {
    return evaluate_fixed(resolve_levels(parse_expression(text), x.generator, Level::fixed), f, x);
  }
}

template <GreenFunctor F>
UnderlyingOf<F> parse_underlying(const F& f, const Binding<F>& x, const std::string& text) {
  if constexpr (std::is_same_v<F, FiniteFunctor>) {
    if (const auto e = f.underlying().find(text)) {
      return *e;
    }
    throw InputError("unknown underlying-level element '" + text + "'");
  } else {
    return evaluate_underlying(
        resolve_levels(parse_expression(text), x.generator, Level::underlying), f, x);
  }
}

// Applies "x=<value>" to a binding. Values are parsed at the generator level
// with x itself unbound.
template <GreenFunctor F>
void apply_binding(const F& f, Binding<F>& x, std::string_view assignment) {
  if constexpr (is_free<F>) {
    throw InputError("free functors bind x to their generator");
  } else {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || assignment.substr(0, eq) != "x") {
      throw InputError("bindings have the form x=<element>");
    }
    const std::string value(assignment.substr(eq + 1));
    const Binding<F> unbound{x.generator, std::nullopt, std::nullopt};
    if (x.generator == GeneratorLevel::fixed) {
      x.fixed = parse_fixed(f, unbound, value);
    } else {
      x.underlying = parse_underlying(f, unbound, value);
    }
  }
}

}  // namespace tambara::cli
