#pragma once

// Two-level functors over C2.
//
// A Green functor exposes a commutative ring at the fixed level C2/C2 and at
// the underlying level C2/e, the Weyl conjugation on the underlying ring, the
// restriction res: fixed -> underlying and the transfer tr: underlying ->
// fixed. A Tambara functor adds the norm N: underlying -> fixed.

#include <concepts>
#include <random>
#include <string>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/integer.hpp"

namespace tambara {

template <class R>
concept Ring = requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
  typename R::Element;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.format(a) } -> std::convertible_to<std::string>;
};

template <class F>
using FixedOf = typename F::FixedRing::Element;
template <class F>
using UnderlyingOf = typename F::UnderlyingRing::Element;

template <class F>
concept GreenFunctor =
    Ring<typename F::FixedRing> && Ring<typename F::UnderlyingRing> &&
    requires(const F& f, const FixedOf<F>& a, const UnderlyingOf<F>& u) {
      { f.fixed() } -> std::same_as<const typename F::FixedRing&>;
      { f.underlying() } -> std::same_as<const typename F::UnderlyingRing&>;
      { f.conj(u) } -> std::same_as<UnderlyingOf<F>>;
      { f.res(a) } -> std::same_as<UnderlyingOf<F>>;
      { f.tr(u) } -> std::same_as<FixedOf<F>>;
    };

template <class F>
concept TambaraFunctor = GreenFunctor<F> && requires(const F& f, const UnderlyingOf<F>& u) {
  { f.norm(u) } -> std::same_as<FixedOf<F>>;
};

// Functors with finite carriers listed in a fixed order.
template <class F>
concept EnumerableFunctor = GreenFunctor<F> && requires(const F& f) {
  { f.fixed_elements() } -> std::convertible_to<std::vector<FixedOf<F>>>;
  { f.underlying_elements() } -> std::convertible_to<std::vector<UnderlyingOf<F>>>;
};

// Symbolic functors that can draw bounded random elements.
template <class F>
concept SamplableFunctor = GreenFunctor<F> && requires(const F& f, std::mt19937_64& rng) {
  { f.sample_fixed(rng) } -> std::convertible_to<FixedOf<F>>;
  { f.sample_underlying(rng) } -> std::convertible_to<UnderlyingOf<F>>;
};

// Table-backed functors decide at runtime whether a norm table is present.
template <class F>
bool has_norm(const F& f) {
  if constexpr (requires { { f.has_norm() } -> std::convertible_to<bool>; }) {
    return f.has_norm();
  } else {
    return TambaraFunctor<F>;
  }
}

template <Ring R>
typename R::Element sub(const R& r, const typename R::Element& a, const typename R::Element& b) {
  return r.add(a, r.neg(b));
}

// k·1, by double-and-add.
template <Ring R>
typename R::Element from_integer(const R& r, const Integer& k) {
  Integer m = k < 0 ? Integer(-k) : k;
  typename R::Element result = r.zero();
  typename R::Element step = r.one();
  while (m != 0) {
    if ((m & 1) != 0) {
      result = r.add(result, step);
    }
    m >>= 1;
    if (m != 0) {
      step = r.add(step, step);
    }
  }
  return k < 0 ? r.neg(result) : result;
}

template <Ring R>
typename R::Element scale(const R& r, const Integer& k, const typename R::Element& a) {
  if (k == 1) {
    return a;
  }
  return r.mul(from_integer(r, k), a);
}

template <Ring R>
typename R::Element power(const R& r, typename R::Element base, unsigned long long exponent) {
  typename R::Element result = r.one();
  while (exponent != 0) {
    if (exponent & 1ULL) {
      result = r.mul(result, base);
    }
    exponent >>= 1;
    if (exponent != 0) {
      base = r.mul(base, base);
    }
  }
  return result;
}

// The Burnside module action t·a = tr(res(a)).
template <GreenFunctor F>
FixedOf<F> times_t(const F& f, const FixedOf<F>& a) {
  return f.tr(f.res(a));
}

template <class F>
FixedOf<F> checked_norm([[maybe_unused]] const F& f, [[maybe_unused]] const UnderlyingOf<F>& u) {
  if constexpr (TambaraFunctor<F>) {
    if (has_norm(f)) {
      return f.norm(u);
    }
  }
  throw CapabilityError("functor has no norm");
}

}  // namespace tambara
