#pragma once

// Sparse integer linear combinations and the commutative polynomial rings
// that serve as underlying levels of the free functors.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tambara/integer.hpp"

namespace tambara {

// A finitely supported map Key -> Integer with no zero coefficients.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Integer>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, const Integer& coefficient = 1) {
    add_term(key, coefficient);
  }

  void add_term(const Key& key, const Integer& coefficient) {
    if (coefficient == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  void add(const LinearCombination& other, const Integer& factor = 1) {
    for (const auto& [key, coefficient] : other.terms_) {
      add_term(key, coefficient * factor);
    }
  }

  LinearCombination negated() const {
    LinearCombination out = *this;
    for (auto& entry : out.terms_) {
      entry.second = -entry.second;
    }
    return out;
  }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Terms terms_;
};

template <class Key>
LinearCombination<Key> operator+(LinearCombination<Key> a, const LinearCombination<Key>& b) {
  a.add(b);
  return a;
}

template <class Key>
LinearCombination<Key> operator-(LinearCombination<Key> a, const LinearCombination<Key>& b) {
  a.add(b, -1);
  return a;
}

// Joins rendered terms as "a + b - c". Each entry pairs a coefficient with a
// monomial string; an empty monomial stands for 1. Coefficients ±1 are
// omitted in front of a non-empty monomial, others are juxtaposed ("2n").
std::string format_terms(const std::vector<std::pair<Integer, std::string>>& terms);

// Renders name^e, or name for e = 1, or "" for e = 0.
std::string format_power(const std::string& name, unsigned exponent);

// Joins non-empty factors with "*".
std::string join_factors(const std::vector<std::string>& factors);

using Monomial = std::vector<unsigned>;

// Z[v_1, ..., v_k], or Z[v_1, conj(v_1), ..., v_k, conj(v_k)] when built with
// conjugates. In the latter case exponent slot 2i belongs to v_i and slot
// 2i+1 to conj(v_i).
class PolynomialRing {
 public:
  using Element = LinearCombination<Monomial>;

  PolynomialRing() : PolynomialRing({"x"}, false) {}
  PolynomialRing(std::vector<std::string> variables, bool with_conjugates);

  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::size_t slot_count() const noexcept { return slots_; }
  bool has_conjugates() const noexcept { return with_conjugates_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }

  Element zero() const { return {}; }
  Element one() const { return Element(Monomial(slots_, 0)); }
  Element constant(const Integer& c) const { return Element(Monomial(slots_, 0), c); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return a.negated(); }
  Element mul(const Element& a, const Element& b) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const;

  Element variable(std::size_t i) const;
  // conj(v_i); requires conjugates.
  Element conjugate_variable(std::size_t i) const;
  Element monomial(const Monomial& m, const Integer& coefficient = 1) const {
    return Element(m, coefficient);
  }
  // Swaps v_i and conj(v_i); the identity without conjugates.
  Element conjugate(const Element& a) const;
  Monomial conjugate(const Monomial& m) const;

  static unsigned degree(const Monomial& m);
  std::string format_monomial(const Monomial& m) const;

  // Up to `max_terms` terms of total degree <= max_degree with coefficients
  // drawn as (rng() % (2·max_coefficient + 1)) - max_coefficient.
  Element sample(std::mt19937_64& rng, unsigned max_degree, unsigned max_coefficient,
                 unsigned max_terms = 4) const;

  // All monomials of total degree <= bound, in ascending degree.
  std::vector<Monomial> monomials_up_to(unsigned bound) const;

 private:
  std::vector<std::string> variables_;
  bool with_conjugates_ = false;
  std::size_t slots_ = 1;
};

Monomial add_exponents(const Monomial& a, const Monomial& b);

// Draws an integer in [-bound, bound] as (rng() % (2·bound + 1)) - bound.
Integer sample_coefficient(std::mt19937_64& rng, unsigned bound);

// Draws a random composition with total <= bound across `parts` slots, each
// slot weighted by `weights` (1 when empty).
Monomial sample_exponents(std::mt19937_64& rng, std::size_t parts, unsigned bound,
                          const std::vector<unsigned>& weights = {});

}  // namespace tambara
