#pragma once

#include <random>
#include <string>

#include "tambara/functor.hpp"
#include "tambara/integer.hpp"

namespace tambara {

// units·1 + orbits·t, on the basis of orbit classes {*, C2}.
struct BurnsideElement {
  Integer units;
  Integer orbits;

  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
};

std::string format_burnside(const BurnsideElement& a);

// The Burnside Tambara functor of C2: A(C2/C2) = Z{1, t} with t² = 2t and
// A(C2/e) = Z. Restriction counts points, transfer induces, the norm is
// coinduction: N(m) = m + C(m, 2)·t, valid for all integers m.
class Burnside {
 public:
  class FixedRing {
   public:
    using Element = BurnsideElement;
    Element zero() const { return {0, 0}; }
    Element one() const { return {1, 0}; }
    Element add(const Element& a, const Element& b) const {
      return {a.units + b.units, a.orbits + b.orbits};
    }
    Element neg(const Element& a) const { return {-a.units, -a.orbits}; }
    Element mul(const Element& a, const Element& b) const {
      return {a.units * b.units,
              a.units * b.orbits + a.orbits * b.units + 2 * a.orbits * b.orbits};
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const { return format_burnside(a); }
  };

  class UnderlyingRing {
   public:
    using Element = Integer;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string format(const Element& a) const { return a.str(); }
  };

  const FixedRing& fixed() const { return fixed_; }
  const UnderlyingRing& underlying() const { return underlying_; }

  Integer conj(const Integer& m) const { return m; }
  Integer res(const BurnsideElement& a) const { return a.units + 2 * a.orbits; }
  BurnsideElement tr(const Integer& m) const { return {0, m}; }
  BurnsideElement norm(const Integer& m) const { return {m, choose_two(m)}; }

  static BurnsideElement t() { return {0, 1}; }

  // Coefficients drawn as (rng() % 19) - 9, units first.
  BurnsideElement sample_fixed(std::mt19937_64& rng) const;
  Integer sample_underlying(std::mt19937_64& rng) const;
  // A random a with res(a) = m: (m - 2b)·1 + b·t for a small random b.
  BurnsideElement sample_res_preimage(std::mt19937_64& rng, const Integer& m) const;

 private:
  FixedRing fixed_;
  UnderlyingRing underlying_;
};

inline Burnside burnside() { return {}; }

}  // namespace tambara
