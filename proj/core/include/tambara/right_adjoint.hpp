#pragma once

// The right adjoint F to the forgetful functor from C2-Tambara functors to
// C2-Green functors. For a Green functor R,
//
//   F(R)(C2/C2) = {(n, x) in R(C2/C2)² : res n = (res x)²}
//   F(R)(C2/e)  = {(n, x) in R(C2/C2) × R(C2/e) : res n = x·conj(x)}
//
// with coordinatewise multiplication and
//
//   fixed add       (n, x) + (n', x') = (n + n' + t·x·x', x + x')
//   underlying add  (n, x) + (n', x') = (n + n' + tr(x·conj x'), x + x')
//   conj            (n, x) ↦ (n, conj x)
//   res             (n, x) ↦ (n, res x)
//   tr              (n, x) ↦ (2n + tr(x²), tr x)
//   N               (n, x) ↦ (n², n)
//
// where t·a = tr(res a).

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/functor.hpp"

namespace tambara {

template <class N, class X>
struct AdjointPair {
  N n;
  X x;

  friend bool operator==(const AdjointPair&, const AdjointPair&) = default;
};

template <GreenFunctor R>
class RightAdjoint {
 public:
  using Fixed = AdjointPair<FixedOf<R>, FixedOf<R>>;
  using Underlying = AdjointPair<FixedOf<R>, UnderlyingOf<R>>;

  class FixedRing {
   public:
    using Element = Fixed;
    FixedRing(const R* r, bool check) : r_(r), check_(check) {}

    Element zero() const { return {r_->fixed().zero(), r_->fixed().zero()}; }
    Element one() const { return {r_->fixed().one(), r_->fixed().one()}; }
    Element add(const Element& a, const Element& b) const {
      require(a);
      require(b);
      const auto& rf = r_->fixed();
      return {rf.add(rf.add(a.n, b.n), times_t(*r_, rf.mul(a.x, b.x))), rf.add(a.x, b.x)};
    }
    Element neg(const Element& a) const {
      require(a);
      const auto& rf = r_->fixed();
      return {sub(rf, times_t(*r_, rf.mul(a.x, a.x)), a.n), rf.neg(a.x)};
    }
    Element mul(const Element& a, const Element& b) const {
      require(a);
      require(b);
      return {r_->fixed().mul(a.n, b.n), r_->fixed().mul(a.x, b.x)};
    }
    bool equal(const Element& a, const Element& b) const {
      return r_->fixed().equal(a.n, b.n) && r_->fixed().equal(a.x, b.x);
    }
    std::string format(const Element& a) const {
      return "(" + r_->fixed().format(a.n) + ", " + r_->fixed().format(a.x) + ")";
    }

    // res n = (res x)².
    bool contains(const Element& a) const {
      const auto rx = r_->res(a.x);
      return r_->underlying().equal(r_->res(a.n), r_->underlying().mul(rx, rx));
    }
    void require(const Element& a) const {
      if (check_ && !contains(a)) {
        throw MembershipError("fixed pair " + format(a) + " violates res n = (res x)^2");
      }
    }

   private:
    const R* r_;
    bool check_;
  };

  class UnderlyingRing {
   public:
    using Element = Underlying;
    UnderlyingRing(const R* r, bool check) : r_(r), check_(check) {}

    Element zero() const { return {r_->fixed().zero(), r_->underlying().zero()}; }
    Element one() const { return {r_->fixed().one(), r_->underlying().one()}; }
    Element add(const Element& a, const Element& b) const {
      require(a);
      require(b);
      const auto& rf = r_->fixed();
      const auto& ru = r_->underlying();
      return {rf.add(rf.add(a.n, b.n), r_->tr(ru.mul(a.x, r_->conj(b.x)))), ru.add(a.x, b.x)};
    }
    Element neg(const Element& a) const {
      require(a);
      return {sub(r_->fixed(), r_->tr(r_->underlying().mul(a.x, r_->conj(a.x))), a.n),
              r_->underlying().neg(a.x)};
    }
    Element mul(const Element& a, const Element& b) const {
      require(a);
      require(b);
      return {r_->fixed().mul(a.n, b.n), r_->underlying().mul(a.x, b.x)};
    }
    bool equal(const Element& a, const Element& b) const {
      return r_->fixed().equal(a.n, b.n) && r_->underlying().equal(a.x, b.x);
    }
    std::string format(const Element& a) const {
      return "(" + r_->fixed().format(a.n) + ", " + r_->underlying().format(a.x) + ")";
    }

    // res n = x·conj(x).
    bool contains(const Element& a) const {
      return r_->underlying().equal(r_->res(a.n), r_->underlying().mul(a.x, r_->conj(a.x)));
    }
    void require(const Element& a) const {
      if (check_ && !contains(a)) {
        throw MembershipError("underlying pair " + format(a) + " violates res n = x*conj(x)");
      }
    }

   private:
    const R* r_;
    bool check_;
  };

  // R must outlive the adjoint. With check_membership set, every operation
  // rejects arguments outside the carriers with MembershipError.
  explicit RightAdjoint(const R& r, bool check_membership = true)
      : r_(&r), fixed_(&r, check_membership), underlying_(&r, check_membership) {}
  explicit RightAdjoint(const R&& r, bool check_membership = true) = delete;

  const R& base() const { return *r_; }
  const FixedRing& fixed() const { return fixed_; }
  const UnderlyingRing& underlying() const { return underlying_; }

  Underlying conj(const Underlying& a) const {
    underlying_.require(a);
    return {a.n, r_->conj(a.x)};
  }
  Underlying res(const Fixed& a) const {
    fixed_.require(a);
    return {a.n, r_->res(a.x)};
  }
  Fixed tr(const Underlying& a) const {
    underlying_.require(a);
    const auto& rf = r_->fixed();
    return {rf.add(rf.add(a.n, a.n), r_->tr(r_->underlying().mul(a.x, a.x))), r_->tr(a.x)};
  }
  Fixed norm(const Underlying& a) const {
    underlying_.require(a);
    return {r_->fixed().mul(a.n, a.n), a.n};
  }

  // All member pairs, ordered by n and then by x.
  std::vector<Fixed> fixed_elements() const
    requires EnumerableFunctor<R>
  {
    std::vector<Fixed> out;
    const auto elements = r_->fixed_elements();
    for (const auto& n : elements) {
      for (const auto& x : elements) {
        if (fixed_.contains({n, x})) {
          out.push_back({n, x});
        }
      }
    }
    return out;
  }
  std::vector<Underlying> underlying_elements() const
    requires EnumerableFunctor<R>
  {
    std::vector<Underlying> out;
    for (const auto& n : r_->fixed_elements()) {
      for (const auto& x : r_->underlying_elements()) {
        if (underlying_.contains({n, x})) {
          out.push_back({n, x});
        }
      }
    }
    return out;
  }

  // Draws x from R and then n from the res-preimage of (res x)² or x·conj(x).
  Fixed sample_fixed(std::mt19937_64& rng) const
    requires requires(const R& b, std::mt19937_64& g, const UnderlyingOf<R>& m) {
      { b.sample_fixed(g) } -> std::convertible_to<FixedOf<R>>;
      { b.sample_res_preimage(g, m) } -> std::convertible_to<FixedOf<R>>;
    }
  {
    auto x = r_->sample_fixed(rng);
    const auto rx = r_->res(x);
    return {r_->sample_res_preimage(rng, r_->underlying().mul(rx, rx)), std::move(x)};
  }
  Underlying sample_underlying(std::mt19937_64& rng) const
    requires requires(const R& b, std::mt19937_64& g, const UnderlyingOf<R>& m) {
      { b.sample_underlying(g) } -> std::convertible_to<UnderlyingOf<R>>;
      { b.sample_res_preimage(g, m) } -> std::convertible_to<FixedOf<R>>;
    }
  {
    auto x = r_->sample_underlying(rng);
    return {r_->sample_res_preimage(rng, r_->underlying().mul(x, r_->conj(x))), std::move(x)};
  }

  // The counit i F(R) -> R: (n, x) ↦ x at both levels.
  FixedOf<R> counit_fixed(const Fixed& a) const { return a.x; }
  UnderlyingOf<R> counit_underlying(const Underlying& a) const { return a.x; }

 private:
  const R* r_;
  FixedRing fixed_;
  UnderlyingRing underlying_;
};

// A level-wise map between two functors.
template <class S, class T>
struct FunctorHom {
  std::function<FixedOf<T>(const FixedOf<S>&)> fixed;
  std::function<UnderlyingOf<T>(const UnderlyingOf<S>&)> underlying;
};

// The unit S -> F(iS): fixed s ↦ (N(res s), s), underlying u ↦ (N(u), u).
template <TambaraFunctor S>
typename RightAdjoint<S>::Fixed unit_fixed(const S& s, const FixedOf<S>& a) {
  return {s.norm(s.res(a)), a};
}
template <TambaraFunctor S>
typename RightAdjoint<S>::Underlying unit_underlying(const S& s, const UnderlyingOf<S>& u) {
  return {s.norm(u), u};
}

// transpose(φ): fixed s ↦ (φ(N(res s)), φ(s)), underlying u ↦ (φ(N u), φ(u)).
template <TambaraFunctor S, GreenFunctor R>
FunctorHom<S, RightAdjoint<R>> transpose(const S& s, const FunctorHom<S, R>& phi) {
  return {[&s, phi](const FixedOf<S>& a) -> typename RightAdjoint<R>::Fixed {
            return {phi.fixed(s.norm(s.res(a))), phi.fixed(a)};
          },
          [&s, phi](const UnderlyingOf<S>& u) -> typename RightAdjoint<R>::Underlying {
            return {phi.fixed(s.norm(u)), phi.underlying(u)};
          }};
}

// untranspose(ψ) = counit ∘ ψ.
template <class S, GreenFunctor R>
FunctorHom<S, R> untranspose(const FunctorHom<S, RightAdjoint<R>>& psi) {
  return {[psi](const FixedOf<S>& a) { return psi.fixed(a).x; },
          [psi](const UnderlyingOf<S>& u) { return psi.underlying(u).x; }};
}

// F on maps: (n, x) ↦ (ρ(n), ρ(x)).
template <GreenFunctor R, GreenFunctor Q>
FunctorHom<RightAdjoint<R>, RightAdjoint<Q>> adjoint_map(const FunctorHom<R, Q>& rho) {
  return {[rho](const typename RightAdjoint<R>::Fixed& a) -> typename RightAdjoint<Q>::Fixed {
            return {rho.fixed(a.n), rho.fixed(a.x)};
          },
          [rho](const typename RightAdjoint<R>::Underlying& a) ->
          typename RightAdjoint<Q>::Underlying { return {rho.fixed(a.n), rho.underlying(a.x)}; }};
}

}  // namespace tambara
