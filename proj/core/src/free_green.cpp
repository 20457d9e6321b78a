#include "format_sorted.hpp"
#include "tambara/errors.hpp"
#include "tambara/free_functors.hpp"

namespace tambara {

std::string_view to_string(GeneratorLevel level) {
  return level == GeneratorLevel::fixed ? "fixed" : "underlying";
}

GeneratorLevel parse_generator_level(std::string_view name) {
  if (name == "fixed") {
    return GeneratorLevel::fixed;
  }
  if (name == "underlying") {
    return GeneratorLevel::underlying;
  }
  throw InputError("unknown level '" + std::string(name) + "'");
}

// FreeGreenFixed

FreeGreenFixed::Fixed FreeGreenFixed::FixedRing::mul(const Fixed& a, const Fixed& b) const {
  Fixed out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      const bool both = k1.transfer && k2.transfer;
      out.add_term({k1.transfer || k2.transfer, k1.degree + k2.degree},
                   (both ? 2 : 1) * c1 * c2);
    }
  }
  return out;
}

std::string FreeGreenFixed::FixedRing::format(const Fixed& a) const {
  return detail::format_sorted(a, &FreeGreenFixed::degree, [](const FixedKey& key) {
    return join_factors({key.transfer ? "t" : "", format_power("x", key.degree)});
  });
}

FreeGreenFixed::Underlying FreeGreenFixed::res(const Fixed& a) const {
  Underlying out;
  for (const auto& [key, c] : a) {
    out.add_term(Monomial{key.degree}, (key.transfer ? 2 : 1) * c);
  }
  return out;
}

FreeGreenFixed::Fixed FreeGreenFixed::tr(const Underlying& u) const {
  Fixed out;
  for (const auto& [m, c] : u) {
    out.add_term({true, m[0]}, c);
  }
  return out;
}

FreeGreenFixed::Fixed FreeGreenFixed::sample_fixed(std::mt19937_64& rng,
                                                   const SampleBounds& bounds) const {
  Fixed out;
  const unsigned count = 1 + static_cast<unsigned>(rng() % bounds.max_terms);
  for (unsigned i = 0; i < count; ++i) {
    const bool transfer = rng() % 2 == 1;
    const auto degree = static_cast<unsigned>(rng() % (bounds.max_degree + 1));
    out.add_term({transfer, degree}, sample_coefficient(rng, bounds.max_coefficient));
  }
  return out;
}

FreeGreenFixed::Underlying FreeGreenFixed::sample_underlying(std::mt19937_64& rng,
                                                             const SampleBounds& bounds) const {
  return underlying_.sample(rng, bounds.max_degree, bounds.max_coefficient, bounds.max_terms);
}

std::vector<GreenFixedKey> FreeGreenFixed::fixed_basis(unsigned degree_bound) const {
  std::vector<FixedKey> out;
  for (unsigned d = 0; d <= degree_bound; ++d) {
    out.push_back({false, d});
    out.push_back({true, d});
  }
  return out;
}

// FreeGreenUnderlying

FreeGreenUnderlying::Fixed FreeGreenUnderlying::t_ij(unsigned i, unsigned j) {
  return Fixed(FixedKey{true, std::max(i, j), std::min(i, j)});
}

FreeGreenUnderlying::Fixed FreeGreenUnderlying::FixedRing::mul(const Fixed& a,
                                                               const Fixed& b) const {
  Fixed out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      const Integer c = c1 * c2;
      if (!k1.transfer) {
        out.add_term(k2, c);
      } else if (!k2.transfer) {
        out.add_term(k1, c);
      } else {
        out.add(t_ij(k1.i + k2.i, k1.j + k2.j), c);
        out.add(t_ij(k1.i + k2.j, k1.j + k2.i), c);
      }
    }
  }
  return out;
}

std::string FreeGreenUnderlying::FixedRing::format(const Fixed& a) const {
  auto render = [](const FixedKey& key) -> std::string {
    if (!key.transfer) {
      return "";
    }
    if (key.i == 0 && key.j == 0) {
      return "t";
    }
    return "t_{" + std::to_string(key.i) + "," + std::to_string(key.j) + "}";
  };
  return detail::format_sorted(a, &FreeGreenUnderlying::degree, render);
}

FreeGreenUnderlying::Underlying FreeGreenUnderlying::res(const Fixed& a) const {
  Underlying out;
  for (const auto& [key, c] : a) {
    if (!key.transfer) {
      out.add_term(Monomial{0, 0}, c);
    } else {
      out.add_term(Monomial{key.i, key.j}, c);
      out.add_term(Monomial{key.j, key.i}, c);
    }
  }
  return out;
}

FreeGreenUnderlying::Fixed FreeGreenUnderlying::tr(const Underlying& u) const {
  Fixed out;
  for (const auto& [m, c] : u) {
    out.add(t_ij(m[0], m[1]), c);
  }
  return out;
}

FreeGreenUnderlying::Fixed FreeGreenUnderlying::sample_fixed(std::mt19937_64& rng,
                                                             const SampleBounds& bounds) const {
  Fixed out;
  const unsigned count = 1 + static_cast<unsigned>(rng() % bounds.max_terms);
  for (unsigned n = 0; n < count; ++n) {
    const Integer c = sample_coefficient(rng, bounds.max_coefficient);
    // One draw in four is the unit, the rest are transfers.
    if (rng() % 4 == 0) {
      out.add_term(FixedKey{}, c);
    } else {
      const Monomial e = sample_exponents(rng, 2, bounds.max_degree);
      out.add(t_ij(e[0], e[1]), c);
    }
  }
  return out;
}

FreeGreenUnderlying::Underlying FreeGreenUnderlying::sample_underlying(
    std::mt19937_64& rng, const SampleBounds& bounds) const {
  return underlying_.sample(rng, bounds.max_degree, bounds.max_coefficient, bounds.max_terms);
}

std::vector<GreenUnderlyingKey> FreeGreenUnderlying::fixed_basis(unsigned degree_bound) const {
  std::vector<FixedKey> out{FixedKey{}};
  for (unsigned d = 0; d <= degree_bound; ++d) {
    for (unsigned j = 0; 2 * j <= d; ++j) {
      out.push_back({true, d - j, j});
    }
  }
  return out;
}

}  // namespace tambara
