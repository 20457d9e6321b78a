#include "tambara/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "tambara/errors.hpp"

namespace tambara {

std::string format_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
  if (terms.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [coefficient, monomial] : terms) {
    const bool negative = coefficient < 0;
    const Integer magnitude = negative ? Integer(-coefficient) : coefficient;
    std::string body;
    if (monomial.empty()) {
      body = magnitude.str();
    } else if (magnitude == 1) {
      body = monomial;
    } else {
      body = magnitude.str() + monomial;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string format_power(const std::string& name, unsigned exponent) {
  if (exponent == 0) {
    return "";
  }
  if (exponent == 1) {
    return name;
  }
  return name + "^" + std::to_string(exponent);
}

std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& factor : factors) {
    if (factor.empty()) {
      continue;
    }
    if (!out.empty()) {
      out += "*";
    }
    out += factor;
  }
  return out;
}

Monomial add_exponents(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] += b[i];
  }
  return out;
}

Integer sample_coefficient(std::mt19937_64& rng, unsigned bound) {
  return Integer(static_cast<long long>(rng() % (2 * bound + 1))) - bound;
}

Monomial sample_exponents(std::mt19937_64& rng, std::size_t parts, unsigned bound,
                          const std::vector<unsigned>& weights) {
  Monomial out(parts, 0);
  if (parts == 0) {
    return out;
  }
  unsigned remaining = static_cast<unsigned>(rng() % (bound + 1));
  const std::size_t start = rng() % parts;
  for (std::size_t step = 0; step < parts; ++step) {
    const std::size_t i = (start + step) % parts;
    const unsigned weight = weights.empty() ? 1 : weights[i];
    const unsigned e = static_cast<unsigned>(rng() % (remaining / weight + 1));
    out[i] = e;
    remaining -= e * weight;
  }
  return out;
}

PolynomialRing::PolynomialRing(std::vector<std::string> variables, bool with_conjugates)
    : variables_(std::move(variables)),
      with_conjugates_(with_conjugates),
      slots_(variables_.size() * (with_conjugates ? 2 : 1)) {
  if (variables_.empty()) {
    throw InputError("polynomial ring needs at least one variable");
  }
}

PolynomialRing::Element PolynomialRing::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) {
      out.add_term(add_exponents(m1, m2), c1 * c2);
    }
  }
  return out;
}

PolynomialRing::Element PolynomialRing::variable(std::size_t i) const {
  Monomial m(slots_, 0);
  m.at(with_conjugates_ ? 2 * i : i) = 1;
  return Element(m);
}

PolynomialRing::Element PolynomialRing::conjugate_variable(std::size_t i) const {
  if (!with_conjugates_) {
    return variable(i);
  }
  Monomial m(slots_, 0);
  m.at(2 * i + 1) = 1;
  return Element(m);
}

Monomial PolynomialRing::conjugate(const Monomial& m) const {
  if (!with_conjugates_) {
    return m;
  }
  Monomial out(m);
  for (std::size_t i = 0; i + 1 < out.size(); i += 2) {
    std::swap(out[i], out[i + 1]);
  }
  return out;
}

PolynomialRing::Element PolynomialRing::conjugate(const Element& a) const {
  if (!with_conjugates_) {
    return a;
  }
  Element out;
  for (const auto& [m, c] : a) {
    out.add_term(conjugate(m), c);
  }
  return out;
}

unsigned PolynomialRing::degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0U);
}

std::string PolynomialRing::format_monomial(const Monomial& m) const {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (with_conjugates_) {
      factors.push_back(format_power(variables_[i], m[2 * i]));
      factors.push_back(format_power("conj(" + variables_[i] + ")", m[2 * i + 1]));
    } else {
      factors.push_back(format_power(variables_[i], m[i]));
    }
  }
  return join_factors(factors);
}

std::string PolynomialRing::format(const Element& a) const {
  std::vector<std::pair<const Monomial*, const Integer*>> order;
  for (const auto& [m, c] : a) {
    order.emplace_back(&m, &c);
  }
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    const unsigned dl = degree(*l.first);
    const unsigned dr = degree(*r.first);
    return dl != dr ? dl > dr : *l.first > *r.first;
  });
  std::vector<std::pair<Integer, std::string>> terms;
  for (const auto& [m, c] : order) {
    terms.emplace_back(*c, format_monomial(*m));
  }
  return format_terms(terms);
}

PolynomialRing::Element PolynomialRing::sample(std::mt19937_64& rng, unsigned max_degree,
                                               unsigned max_coefficient,
                                               unsigned max_terms) const {
  Element out;
  const unsigned count = 1 + static_cast<unsigned>(rng() % max_terms);
  for (unsigned i = 0; i < count; ++i) {
    Monomial m = sample_exponents(rng, slots_, max_degree);
    out.add_term(m, sample_coefficient(rng, max_coefficient));
  }
  return out;
}

std::vector<Monomial> PolynomialRing::monomials_up_to(unsigned bound) const {
  std::vector<Monomial> out;
  Monomial current(slots_, 0);
  // Odometer over all exponent vectors with entries <= bound, filtered.
  while (true) {
    if (degree(current) <= bound) {
      out.push_back(current);
    }
    std::size_t i = 0;
    while (i < slots_ && current[i] == bound) {
      current[i] = 0;
      ++i;
    }
    if (i == slots_) {
      break;
    }
    ++current[i];
  }
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return degree(a) < degree(b);
  });
  return out;
}

}  // namespace tambara
