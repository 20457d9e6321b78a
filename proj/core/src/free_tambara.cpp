#include <cstdlib>
#include <numeric>
#include <set>

#include "format_sorted.hpp"
#include "tambara/errors.hpp"
#include "tambara/free_functors.hpp"

namespace tambara {

namespace {

std::string norm_name(const std::vector<std::string>& generators, std::size_t i) {
  return generators.size() == 1 ? "n" : "n_" + generators[i];
}

Monomial unit_vector(std::size_t size, std::size_t i) {
  Monomial m(size, 0);
  m.at(i) = 1;
  return m;
}

unsigned sum(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

// Every exponent vector of the given length whose weighted sum is <= bound.
std::vector<Monomial> weighted_vectors(std::size_t size, const std::vector<unsigned>& weights,
                                       unsigned bound) {
  std::vector<Monomial> out;
  Monomial current(size, 0);
  auto weight_of = [&](const Monomial& m) {
    unsigned total = 0;
    for (std::size_t i = 0; i < size; ++i) {
      total += m[i] * weights[i];
    }
    return total;
  };
  while (true) {
    if (weight_of(current) <= bound) {
      out.push_back(current);
    }
    std::size_t i = 0;
    while (i < size && current[i] == bound) {
      current[i] = 0;
      ++i;
    }
    if (i == size) {
      break;
    }
    ++current[i];
  }
  return out;
}

}  // namespace

// FreeTambaraFixed

FreeTambaraFixed::FixedRing::FixedRing(std::vector<std::string> generators)
    : k_(generators.size()), generators_(std::move(generators)) {}

TambaraFixedKey FreeTambaraFixed::FixedRing::reduce(FixedKey key) {
  if (key.transfer) {
    for (std::size_t i = 0; i < key.x.size(); ++i) {
      key.n[i] += key.x[i] / 2;
      key.x[i] %= 2;
    }
  }
  return key;
}

FreeTambaraFixed::Fixed FreeTambaraFixed::FixedRing::mul(const Fixed& a, const Fixed& b) const {
  Fixed out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      FixedKey key{k1.transfer || k2.transfer, add_exponents(k1.x, k2.x), add_exponents(k1.n, k2.n)};
      const bool both = k1.transfer && k2.transfer;
      out.add_term(reduce(std::move(key)), (both ? 2 : 1) * c1 * c2);
    }
  }
  return out;
}

std::string FreeTambaraFixed::FixedRing::format(const Fixed& a) const {
  auto render = [this](const FixedKey& key) {
    std::vector<std::string> factors{key.transfer ? "t" : ""};
    for (std::size_t i = 0; i < k_; ++i) {
      factors.push_back(format_power(generators_[i], key.x[i]));
    }
    for (std::size_t i = 0; i < k_; ++i) {
      factors.push_back(format_power(norm_name(generators_, i), key.n[i]));
    }
    return join_factors(factors);
  };
  return detail::format_sorted(a, &FreeTambaraFixed::degree, render);
}

FreeTambaraFixed::FreeTambaraFixed(std::vector<std::string> generators)
    : fixed_(generators), underlying_(generators, false) {}

unsigned FreeTambaraFixed::degree(const FixedKey& key) { return sum(key.x) + 2 * sum(key.n); }

FreeTambaraFixed::Underlying FreeTambaraFixed::res(const Fixed& a) const {
  Underlying out;
  for (const auto& [key, c] : a) {
    Monomial m(key.x);
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] += 2 * key.n[i];
    }
    out.add_term(m, (key.transfer ? 2 : 1) * c);
  }
  return out;
}

FreeTambaraFixed::Fixed FreeTambaraFixed::tr(const Underlying& u) const {
  Fixed out;
  const std::size_t k = generator_count();
  for (const auto& [m, c] : u) {
    out.add_term(FixedRing::reduce({true, m, Monomial(k, 0)}), c);
  }
  return out;
}

FreeTambaraFixed::Fixed FreeTambaraFixed::t() const {
  const std::size_t k = generator_count();
  return Fixed(FixedKey{true, Monomial(k, 0), Monomial(k, 0)});
}

FreeTambaraFixed::Fixed FreeTambaraFixed::generator(std::size_t i) const {
  const std::size_t k = generator_count();
  return Fixed(FixedKey{false, unit_vector(k, i), Monomial(k, 0)});
}

FreeTambaraFixed::Fixed FreeTambaraFixed::norm_generator(std::size_t i) const {
  const std::size_t k = generator_count();
  return Fixed(FixedKey{false, Monomial(k, 0), unit_vector(k, i)});
}

FreeTambaraFixed::Fixed FreeTambaraFixed::integer_norm(const Integer& c) const {
  Fixed out(fixed_.one().begin()->first, c);
  out.add(t(), choose_two(c));
  return out;
}

// Term by term: N(p + c·m) = N(p) + N(c)·N(m) + tr(p·c·m), where N(m) replaces
// every x_i by n_i.
FreeTambaraFixed::Fixed FreeTambaraFixed::norm(const Underlying& u) const {
  const std::size_t k = generator_count();
  // Visit terms from the highest degree down.
  std::vector<std::pair<Monomial, Integer>> terms(u.begin(), u.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    return PolynomialRing::degree(l.first) > PolynomialRing::degree(r.first);
  });
  Fixed result;
  Underlying partial;
  for (const auto& [m, c] : terms) {
    const Fixed term_norm =
        fixed_.mul(integer_norm(c), Fixed(FixedKey{false, Monomial(k, 0), m}));
    result = result + term_norm + tr(underlying_.mul(partial, underlying_.monomial(m, c)));
    partial.add_term(m, c);
  }
  return result;
}

FreeTambaraFixed::Fixed FreeTambaraFixed::sample_fixed(std::mt19937_64& rng,
                                                       const SampleBounds& bounds) const {
  const std::size_t k = generator_count();
  std::vector<unsigned> weights(2 * k, 1);
  std::fill(weights.begin() + static_cast<std::ptrdiff_t>(k), weights.end(), 2U);
  Fixed out;
  const unsigned count = 1 + static_cast<unsigned>(rng() % bounds.max_terms);
  for (unsigned i = 0; i < count; ++i) {
    const bool transfer = rng() % 2 == 1;
    const Integer c = sample_coefficient(rng, bounds.max_coefficient);
    if (transfer) {
      const Monomial m = sample_exponents(rng, k, bounds.max_degree);
      out.add_term(FixedRing::reduce({true, m, Monomial(k, 0)}), c);
    } else {
      const Monomial e = sample_exponents(rng, 2 * k, bounds.max_degree, weights);
      out.add_term({false, Monomial(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)),
                    Monomial(e.begin() + static_cast<std::ptrdiff_t>(k), e.end())},
                   c);
    }
  }
  return out;
}

FreeTambaraFixed::Underlying FreeTambaraFixed::sample_underlying(std::mt19937_64& rng,
                                                                 const SampleBounds& bounds) const {
  return underlying_.sample(rng, bounds.max_degree, bounds.max_coefficient, bounds.max_terms);
}

std::vector<TambaraFixedKey> FreeTambaraFixed::fixed_basis(unsigned degree_bound) const {
  const std::size_t k = generator_count();
  std::vector<unsigned> weights(2 * k, 1);
  std::fill(weights.begin() + static_cast<std::ptrdiff_t>(k), weights.end(), 2U);
  std::vector<FixedKey> out;
  for (const Monomial& e : weighted_vectors(2 * k, weights, degree_bound)) {
    out.push_back({false, Monomial(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k)),
                   Monomial(e.begin() + static_cast<std::ptrdiff_t>(k), e.end())});
  }
  for (const Monomial& m : underlying_.monomials_up_to(degree_bound)) {
    out.push_back(FixedRing::reduce({true, m, Monomial(k, 0)}));
  }
  return out;
}

// FreeTambaraUnderlying

namespace {

// Number of x·conj(x) pairs cancelling when x^a (a > 0) or conj(x)^-a (a < 0)
// meets the same for b.
unsigned cancelled(int a, int b) {
  if ((a > 0 && b < 0) || (a < 0 && b > 0)) {
    return static_cast<unsigned>(std::min(std::abs(a), std::abs(b)));
  }
  return 0;
}

}  // namespace

FreeTambaraUnderlying::FixedRing::FixedRing(std::vector<std::string> generators)
    : k_(generators.size()), generators_(std::move(generators)) {}

std::vector<int> FreeTambaraUnderlying::canonical_direction(std::vector<int> d) {
  for (int entry : d) {
    if (entry != 0) {
      if (entry < 0) {
        for (int& e : d) {
          e = -e;
        }
      }
      break;
    }
  }
  return d;
}

Monomial FreeTambaraUnderlying::tau_monomial(const std::vector<int>& d) {
  Monomial m(2 * d.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0) {
      m[2 * i] = static_cast<unsigned>(d[i]);
    } else {
      m[2 * i + 1] = static_cast<unsigned>(-d[i]);
    }
  }
  return m;
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::FixedRing::multiply_keys(
    const FixedKey& a, const FixedKey& b) const {
  const Monomial n = add_exponents(a.n, b.n);
  if (!a.transfer || !b.transfer) {
    const FixedKey& carrier = a.transfer ? a : b;
    return Fixed(FixedKey{n, carrier.transfer, carrier.d});
  }
  Fixed out;
  std::vector<int> sum_d(k_);
  std::vector<int> diff_d(k_);
  Monomial n_sum = n;
  Monomial n_diff = n;
  for (std::size_t i = 0; i < k_; ++i) {
    sum_d[i] = a.d[i] + b.d[i];
    diff_d[i] = a.d[i] - b.d[i];
    n_sum[i] += cancelled(a.d[i], b.d[i]);
    n_diff[i] += cancelled(a.d[i], -b.d[i]);
  }
  out.add_term(FixedKey{n_sum, true, canonical_direction(sum_d)}, 1);
  out.add_term(FixedKey{n_diff, true, canonical_direction(diff_d)}, 1);
  return out;
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::FixedRing::mul(const Fixed& a,
                                                                   const Fixed& b) const {
  Fixed out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) {
      out.add(multiply_keys(k1, k2), c1 * c2);
    }
  }
  return out;
}

std::string FreeTambaraUnderlying::FixedRing::format(const Fixed& a) const {
  const PolynomialRing monomials(generators_, true);
  auto render = [&](const FixedKey& key) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < k_; ++i) {
      factors.push_back(format_power(norm_name(generators_, i), key.n[i]));
    }
    if (key.transfer) {
      const bool trivial = std::all_of(key.d.begin(), key.d.end(), [](int e) { return e == 0; });
      if (trivial) {
        factors.emplace_back("t");
      } else if (k_ == 1) {
        factors.push_back("t_" + std::to_string(key.d[0]));
      } else {
        factors.push_back("tr(" + monomials.format_monomial(tau_monomial(key.d)) + ")");
      }
    }
    return join_factors(factors);
  };
  return detail::format_sorted(a, &FreeTambaraUnderlying::degree, render);
}

FreeTambaraUnderlying::FreeTambaraUnderlying(std::vector<std::string> generators)
    : fixed_(generators), underlying_(generators, true) {}

unsigned FreeTambaraUnderlying::degree(const FixedKey& key) {
  unsigned total = 2 * sum(key.n);
  if (key.transfer) {
    for (int e : key.d) {
      total += static_cast<unsigned>(std::abs(e));
    }
  }
  return total;
}

FreeTambaraUnderlying::Underlying FreeTambaraUnderlying::res(const Fixed& a) const {
  Underlying out;
  for (const auto& [key, c] : a) {
    Monomial base(2 * key.n.size(), 0);
    for (std::size_t i = 0; i < key.n.size(); ++i) {
      base[2 * i] = key.n[i];
      base[2 * i + 1] = key.n[i];
    }
    if (!key.transfer) {
      out.add_term(base, c);
      continue;
    }
    const Monomial m = tau_monomial(key.d);
    out.add_term(add_exponents(base, m), c);
    out.add_term(add_exponents(base, underlying_.conjugate(m)), c);
  }
  return out;
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::tr(const Underlying& u) const {
  Fixed out;
  const std::size_t k = generator_count();
  for (const auto& [m, c] : u) {
    Monomial n(k, 0);
    std::vector<int> d(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      n[i] = std::min(m[2 * i], m[2 * i + 1]);
      d[i] = static_cast<int>(m[2 * i]) - static_cast<int>(m[2 * i + 1]);
    }
    out.add_term(FixedKey{n, true, canonical_direction(d)}, c);
  }
  return out;
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::t() const {
  const std::size_t k = generator_count();
  return Fixed(FixedKey{Monomial(k, 0), true, std::vector<int>(k, 0)});
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::t_i(unsigned i) const {
  if (generator_count() != 1) {
    throw InputError("t_i needs a single generator");
  }
  return Fixed(FixedKey{Monomial{0}, true, {static_cast<int>(i)}});
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::norm_generator(std::size_t i) const {
  const std::size_t k = generator_count();
  return Fixed(FixedKey{unit_vector(k, i), false, std::vector<int>(k, 0)});
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::integer_norm(const Integer& c) const {
  Fixed out(fixed_.one().begin()->first, c);
  out.add(t(), choose_two(c));
  return out;
}

// N(Σ u_k) = Σ N(u_k) + Σ_{k<l} tr(u_k·conj(u_l)), with
// N(c·x^a conj(x)^b) = N(c)·n^{a+b}.
FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::norm(const Underlying& u) const {
  const std::size_t k = generator_count();
  Fixed result;
  Underlying partial;
  for (const auto& [m, c] : u) {
    Monomial n(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      n[i] = m[2 * i] + m[2 * i + 1];
    }
    const Fixed term_norm =
        fixed_.mul(integer_norm(c), Fixed(FixedKey{n, false, std::vector<int>(k, 0)}));
    const Underlying term = underlying_.monomial(m, c);
    result = result + term_norm + tr(underlying_.mul(partial, underlying_.conjugate(term)));
    partial.add_term(m, c);
  }
  return result;
}

FreeTambaraUnderlying::Fixed FreeTambaraUnderlying::sample_fixed(
    std::mt19937_64& rng, const SampleBounds& bounds) const {
  const std::size_t k = generator_count();
  Fixed out;
  const unsigned count = 1 + static_cast<unsigned>(rng() % bounds.max_terms);
  for (unsigned i = 0; i < count; ++i) {
    const bool transfer = rng() % 2 == 1;
    const Integer c = sample_coefficient(rng, bounds.max_coefficient);
    if (transfer) {
      const Monomial m = sample_exponents(rng, 2 * k, bounds.max_degree);
      out.add(tr(underlying_.monomial(m)), c);
    } else {
      const Monomial n = sample_exponents(rng, k, bounds.max_degree, std::vector<unsigned>(k, 2));
      out.add_term(FixedKey{n, false, std::vector<int>(k, 0)}, c);
    }
  }
  return out;
}

FreeTambaraUnderlying::Underlying FreeTambaraUnderlying::sample_underlying(
    std::mt19937_64& rng, const SampleBounds& bounds) const {
  return underlying_.sample(rng, bounds.max_degree, bounds.max_coefficient, bounds.max_terms);
}

std::vector<TambaraUnderlyingKey> FreeTambaraUnderlying::fixed_basis(unsigned degree_bound) const {
  const std::size_t k = generator_count();
  std::vector<FixedKey> out;
  for (const Monomial& n : weighted_vectors(k, std::vector<unsigned>(k, 2), degree_bound)) {
    out.push_back({n, false, std::vector<int>(k, 0)});
  }
  std::set<FixedKey> seen;
  for (const Monomial& m : underlying_.monomials_up_to(degree_bound)) {
    const FixedKey key = tr(underlying_.monomial(m)).begin()->first;
    if (seen.insert(key).second) {
      out.push_back(key);
    }
  }
  return out;
}

}  // namespace tambara
