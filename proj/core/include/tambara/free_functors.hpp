#pragma once

// Normal forms for the free Green and free Tambara functors of C2 on a single
// generator x, placed either at the fixed level (C2/C2) or at the underlying
// level (C2/e). The Tambara variants also accept several generators, which is
// how the targets of the co-addition maps are built.
//
//   FreeGreenFixed        fixed  p(x) + t·q(x),              underlying Z[x]
//   FreeGreenUnderlying   fixed  Z{1} + Z{t_{i,j} : i >= j}, underlying Z[x, conj(x)]
//   FreeTambaraFixed      fixed  Z{x^a n^b} + Z{t·x^e n^b},  underlying Z[x]
//   FreeTambaraUnderlying fixed  Z{n^a} + Z{n^a t_i},        underlying Z[x, conj(x)]
//
// Throughout t = tr(1) and t² = 2t. Terms print in descending degree with
// x of degree 1, n of degree 2 and t_i, t_{i,j} of degree i, i + j.

#include <compare>
#include <random>
#include <string>
#include <vector>

#include "tambara/functor.hpp"
#include "tambara/polynomial.hpp"

namespace tambara {

enum class GeneratorLevel { fixed, underlying };

std::string_view to_string(GeneratorLevel level);
GeneratorLevel parse_generator_level(std::string_view name);  // throws InputError

// Random elements have up to four terms of degree <= 6 with coefficients in
// [-9, 9] unless other bounds are given.
struct SampleBounds {
  unsigned max_degree = 6;
  unsigned max_coefficient = 9;
  unsigned max_terms = 4;
};

// ---------------------------------------------------------------------------

struct GreenFixedKey {
  bool transfer = false;  // t·x^degree when set
  unsigned degree = 0;

  auto operator<=>(const GreenFixedKey&) const = default;
};

class FreeGreenFixed {
 public:
  using FixedKey = GreenFixedKey;
  static constexpr GeneratorLevel generator_level = GeneratorLevel::fixed;
  static constexpr bool has_norm_generators = false;

  class FixedRing {
   public:
    using Element = LinearCombination<FixedKey>;
    Element zero() const { return {}; }
    Element one() const { return Element(FixedKey{}); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return a.negated(); }
    Element mul(const Element& a, const Element& b) const;
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const;
  };
  using UnderlyingRing = PolynomialRing;
  using Fixed = FixedRing::Element;
  using Underlying = UnderlyingRing::Element;

  FreeGreenFixed() : underlying_({"x"}, false) {}

  const FixedRing& fixed() const { return fixed_; }
  const UnderlyingRing& underlying() const { return underlying_; }
  std::size_t generator_count() const { return 1; }

  Underlying conj(const Underlying& u) const { return u; }
  Underlying res(const Fixed& a) const;
  Fixed tr(const Underlying& u) const;

  Fixed generator() const { return Fixed(FixedKey{false, 1}); }
  Fixed t() const { return Fixed(FixedKey{true, 0}); }

  Fixed sample_fixed(std::mt19937_64& rng) const { return sample_fixed(rng, {}); }
  Underlying sample_underlying(std::mt19937_64& rng) const { return sample_underlying(rng, {}); }
  Fixed sample_fixed(std::mt19937_64& rng, const SampleBounds& bounds) const;
  Underlying sample_underlying(std::mt19937_64& rng, const SampleBounds& bounds) const;

  std::vector<FixedKey> fixed_basis(unsigned degree_bound) const;
  std::vector<Monomial> underlying_basis(unsigned degree_bound) const {
    return underlying_.monomials_up_to(degree_bound);
  }
  static unsigned degree(const FixedKey& key) { return key.degree; }

 private:
  FixedRing fixed_;
  PolynomialRing underlying_;
};

// ---------------------------------------------------------------------------

struct GreenUnderlyingKey {
  bool transfer = false;  // t_{i,j} when set, 1 otherwise
  unsigned i = 0;
  unsigned j = 0;

  auto operator<=>(const GreenUnderlyingKey&) const = default;
};

class FreeGreenUnderlying {
 public:
  using FixedKey = GreenUnderlyingKey;
  static constexpr GeneratorLevel generator_level = GeneratorLevel::underlying;
  static constexpr bool has_norm_generators = false;

  class FixedRing {
   public:
    using Element = LinearCombination<FixedKey>;
    Element zero() const { return {}; }
    Element one() const { return Element(FixedKey{}); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return a.negated(); }
    Element mul(const Element& a, const Element& b) const;
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const;
  };
  using UnderlyingRing = PolynomialRing;
  using Fixed = FixedRing::Element;
  using Underlying = UnderlyingRing::Element;

  FreeGreenUnderlying() : underlying_({"x"}, true) {}

  const FixedRing& fixed() const { return fixed_; }
  const UnderlyingRing& underlying() const { return underlying_; }
  std::size_t generator_count() const { return 1; }

  Underlying conj(const Underlying& u) const { return underlying_.conjugate(u); }
  Underlying res(const Fixed& a) const;
  Fixed tr(const Underlying& u) const;

  Underlying generator() const { return underlying_.variable(0); }
  Fixed t() const { return t_ij(0, 0); }
  // Symmetric in (i, j).
  static Fixed t_ij(unsigned i, unsigned j);

  Fixed sample_fixed(std::mt19937_64& rng) const { return sample_fixed(rng, {}); }
  Underlying sample_underlying(std::mt19937_64& rng) const { return sample_underlying(rng, {}); }
  Fixed sample_fixed(std::mt19937_64& rng, const SampleBounds& bounds) const;
  Underlying sample_underlying(std::mt19937_64& rng, const SampleBounds& bounds) const;

  std::vector<FixedKey> fixed_basis(unsigned degree_bound) const;
  std::vector<Monomial> underlying_basis(unsigned degree_bound) const {
    return underlying_.monomials_up_to(degree_bound);
  }
  static unsigned degree(const FixedKey& key) { return key.i + key.j; }

 private:
  FixedRing fixed_;
  PolynomialRing underlying_;
};

// ---------------------------------------------------------------------------

// x^x n^n, or t·x^x n^n with every x-exponent at most 1.
struct TambaraFixedKey {
  bool transfer = false;
  Monomial x;
  Monomial n;

  auto operator<=>(const TambaraFixedKey&) const = default;
};

class FreeTambaraFixed {
 public:
  using FixedKey = TambaraFixedKey;
  static constexpr GeneratorLevel generator_level = GeneratorLevel::fixed;
  static constexpr bool has_norm_generators = true;

  class FixedRing {
   public:
    using Element = LinearCombination<FixedKey>;
    explicit FixedRing(std::vector<std::string> generators);
    Element zero() const { return {}; }
    Element one() const { return Element(FixedKey{false, Monomial(k_, 0), Monomial(k_, 0)}); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return a.negated(); }
    Element mul(const Element& a, const Element& b) const;
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const;

    // Applies t·x_i² -> t·n_i until every x-exponent of a t-term is <= 1.
    static FixedKey reduce(FixedKey key);

   private:
    std::size_t k_;
    std::vector<std::string> generators_;
  };
  using UnderlyingRing = PolynomialRing;
  using Fixed = FixedRing::Element;
  using Underlying = UnderlyingRing::Element;

  explicit FreeTambaraFixed(std::vector<std::string> generators = {"x"});

  const FixedRing& fixed() const { return fixed_; }
  const UnderlyingRing& underlying() const { return underlying_; }
  std::size_t generator_count() const { return underlying_.variable_count(); }

  Underlying conj(const Underlying& u) const { return u; }
  Underlying res(const Fixed& a) const;
  Fixed tr(const Underlying& u) const;
  Fixed norm(const Underlying& u) const;

  Fixed generator(std::size_t i = 0) const;
  Fixed norm_generator(std::size_t i = 0) const;  // n_i = N(res x_i)
  Fixed t() const;
  // c + C(c, 2)·t, the norm of an integer.
  Fixed integer_norm(const Integer& c) const;

  Fixed sample_fixed(std::mt19937_64& rng) const { return sample_fixed(rng, {}); }
  Underlying sample_underlying(std::mt19937_64& rng) const { return sample_underlying(rng, {}); }
  Fixed sample_fixed(std::mt19937_64& rng, const SampleBounds& bounds) const;
  Underlying sample_underlying(std::mt19937_64& rng, const SampleBounds& bounds) const;

  std::vector<FixedKey> fixed_basis(unsigned degree_bound) const;
  std::vector<Monomial> underlying_basis(unsigned degree_bound) const {
    return underlying_.monomials_up_to(degree_bound);
  }
  static unsigned degree(const FixedKey& key);

 private:
  FixedRing fixed_;
  PolynomialRing underlying_;
};

// ---------------------------------------------------------------------------

// n^n, or n^n·τ(d) where τ(d) = tr(m_d) for the monomial m_d having x_i^{d_i}
// when d_i > 0 and conj(x_i)^{-d_i} when d_i < 0. Since tr(conj m) = tr(m),
// d is kept with its first non-zero entry positive. With one generator τ(i)
// is written t_i and τ(0) = t.
struct TambaraUnderlyingKey {
  Monomial n;
  bool transfer = false;
  std::vector<int> d;

  auto operator<=>(const TambaraUnderlyingKey&) const = default;
};

class FreeTambaraUnderlying {
 public:
  using FixedKey = TambaraUnderlyingKey;
  static constexpr GeneratorLevel generator_level = GeneratorLevel::underlying;
  static constexpr bool has_norm_generators = true;

  class FixedRing {
   public:
    using Element = LinearCombination<FixedKey>;
    explicit FixedRing(std::vector<std::string> generators);
    Element zero() const { return {}; }
    Element one() const { return Element(FixedKey{Monomial(k_, 0), false, std::vector<int>(k_, 0)}); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return a.negated(); }
    Element mul(const Element& a, const Element& b) const;
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const;

    // τ(d)·τ(e) = n^{c(d,e)} τ(d+e) + n^{c(d,-e)} τ(d-e), where c_i counts the
    // x_i·conj(x_i) pairs that cancel in m_d·m_e.
    Element multiply_keys(const FixedKey& a, const FixedKey& b) const;

   private:
    std::size_t k_;
    std::vector<std::string> generators_;
  };
  using UnderlyingRing = PolynomialRing;
  using Fixed = FixedRing::Element;
  using Underlying = UnderlyingRing::Element;

  explicit FreeTambaraUnderlying(std::vector<std::string> generators = {"x"});

  const FixedRing& fixed() const { return fixed_; }
  const UnderlyingRing& underlying() const { return underlying_; }
  std::size_t generator_count() const { return underlying_.variable_count(); }

  Underlying conj(const Underlying& u) const { return underlying_.conjugate(u); }
  Underlying res(const Fixed& a) const;
  Fixed tr(const Underlying& u) const;
  Fixed norm(const Underlying& u) const;

  Underlying generator(std::size_t i = 0) const { return underlying_.variable(i); }
  Fixed norm_generator(std::size_t i = 0) const;  // n_i = N(x_i)
  Fixed t() const;
  // t_i = tr(x^i), single generator only.
  Fixed t_i(unsigned i) const;
  Fixed integer_norm(const Integer& c) const;

  Fixed sample_fixed(std::mt19937_64& rng) const { return sample_fixed(rng, {}); }
  Underlying sample_underlying(std::mt19937_64& rng) const { return sample_underlying(rng, {}); }
  Fixed sample_fixed(std::mt19937_64& rng, const SampleBounds& bounds) const;
  Underlying sample_underlying(std::mt19937_64& rng, const SampleBounds& bounds) const;

  std::vector<FixedKey> fixed_basis(unsigned degree_bound) const;
  std::vector<Monomial> underlying_basis(unsigned degree_bound) const {
    return underlying_.monomials_up_to(degree_bound);
  }
  static unsigned degree(const FixedKey& key);
  // m_d as an exponent vector of the underlying ring.
  static Monomial tau_monomial(const std::vector<int>& d);
  // Flips d so that its first non-zero entry is positive.
  static std::vector<int> canonical_direction(std::vector<int> d);

 private:
  FixedRing fixed_;
  PolynomialRing underlying_;
};

static_assert(GreenFunctor<FreeGreenFixed>);
static_assert(GreenFunctor<FreeGreenUnderlying>);
static_assert(TambaraFunctor<FreeTambaraFixed>);
static_assert(TambaraFunctor<FreeTambaraUnderlying>);
static_assert(SamplableFunctor<FreeTambaraUnderlying>);

}  // namespace tambara
