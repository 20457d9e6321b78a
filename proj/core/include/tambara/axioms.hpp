#pragma once

// Identity checker for Green and Tambara functors over C2.
//
// Exhaustive mode ranges over every tuple drawn from the enumerated carriers.
// Sampled mode draws `count` tuples per identity from a mt19937_64 seeded with
// `seed`: enumerable carriers are indexed by rng() % size, symbolic ones use
// the functor's own bounded sampler.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tambara/functor.hpp"
#include "tambara/report.hpp"

namespace tambara {

struct CheckOptions {
  enum class Mode { exhaustive, sampled };

  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  std::size_t max_witnesses = 3;

  static CheckOptions exhaustive() { return {}; }
  static CheckOptions sampled(std::uint64_t seed, std::size_t count) {
    return {Mode::sampled, seed, count};
  }
};

namespace detail {

template <class T>
struct Domain {
  std::vector<T> elements;
  std::function<T(std::mt19937_64&)> sampler;

  T draw(std::mt19937_64& rng) const {
    if (!elements.empty()) {
      return elements[rng() % elements.size()];
    }
    return sampler(rng);
  }
};

template <class F>
Domain<FixedOf<F>> fixed_domain(const F& f, const CheckOptions& options) {
  Domain<FixedOf<F>> domain;
  if constexpr (EnumerableFunctor<F>) {
    domain.elements = f.fixed_elements();
    return domain;
  } else if constexpr (SamplableFunctor<F>) {
    if (options.mode == CheckOptions::Mode::sampled) {
      domain.sampler = [&f](std::mt19937_64& rng) { return f.sample_fixed(rng); };
      return domain;
    }
  }
  throw CapabilityError("exhaustive checking needs enumerable carriers");
}

template <class F>
Domain<UnderlyingOf<F>> underlying_domain(const F& f, const CheckOptions& options) {
  Domain<UnderlyingOf<F>> domain;
  if constexpr (EnumerableFunctor<F>) {
    domain.elements = f.underlying_elements();
    return domain;
  } else if constexpr (SamplableFunctor<F>) {
    if (options.mode == CheckOptions::Mode::sampled) {
      domain.sampler = [&f](std::mt19937_64& rng) { return f.sample_underlying(rng); };
      return domain;
    }
  }
  throw CapabilityError("exhaustive checking needs enumerable carriers");
}

class Quantifier {
 public:
  explicit Quantifier(const CheckOptions& options) : options_(options), rng_(options.seed) {}

  template <class A, class Fn>
  void for_all(const Domain<A>& a, Fn&& fn) {
    if (exhaustive()) {
      for (const auto& x : a.elements) {
        fn(x);
      }
      return;
    }
    for (std::size_t i = 0; i < options_.count; ++i) {
      fn(a.draw(rng_));
    }
  }

  template <class A, class B, class Fn>
  void for_all(const Domain<A>& a, const Domain<B>& b, Fn&& fn) {
    if (exhaustive()) {
      for (const auto& x : a.elements) {
        for (const auto& y : b.elements) {
          fn(x, y);
        }
      }
      return;
    }
    for (std::size_t i = 0; i < options_.count; ++i) {
      auto x = a.draw(rng_);
      auto y = b.draw(rng_);
      fn(x, y);
    }
  }

  template <class A, class Fn>
  void for_all(const Domain<A>& a, const Domain<A>& b, const Domain<A>& c, Fn&& fn) {
    if (exhaustive()) {
      for (const auto& x : a.elements) {
        for (const auto& y : b.elements) {
          for (const auto& z : c.elements) {
            fn(x, y, z);
          }
        }
      }
      return;
    }
    for (std::size_t i = 0; i < options_.count; ++i) {
      auto x = a.draw(rng_);
      auto y = b.draw(rng_);
      auto z = c.draw(rng_);
      fn(x, y, z);
    }
  }

 private:
  bool exhaustive() const { return options_.mode == CheckOptions::Mode::exhaustive; }

  CheckOptions options_;
  std::mt19937_64 rng_;
};

template <Ring R>
void check_ring(Report& report, const std::string& level, const R& r,
                const Domain<typename R::Element>& d, Quantifier& q) {
  using E = typename R::Element;
  auto show = [&r](std::initializer_list<std::pair<const char*, const E*>> named) {
    std::string out;
    for (const auto& [name, value] : named) {
      out += (out.empty() ? "" : ", ") + std::string(name) + " = " + r.format(*value);
    }
    return out;
  };
  q.for_all(d, d, d, [&](const E& a, const E& b, const E& c) {
    report.record(level + ".add.associative",
                  r.equal(r.add(r.add(a, b), c), r.add(a, r.add(b, c))),
                  [&] { return show({{"a", &a}, {"b", &b}, {"c", &c}}); });
    report.record(level + ".mul.associative",
                  r.equal(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))),
                  [&] { return show({{"a", &a}, {"b", &b}, {"c", &c}}); });
    report.record(level + ".distributive",
                  r.equal(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))),
                  [&] { return show({{"a", &a}, {"b", &b}, {"c", &c}}); });
  });
  q.for_all(d, d, [&](const E& a, const E& b) {
    report.record(level + ".add.commutative", r.equal(r.add(a, b), r.add(b, a)),
                  [&] { return show({{"a", &a}, {"b", &b}}); });
    report.record(level + ".mul.commutative", r.equal(r.mul(a, b), r.mul(b, a)),
                  [&] { return show({{"a", &a}, {"b", &b}}); });
  });
  q.for_all(d, [&](const E& a) {
    report.record(level + ".add.identity", r.equal(r.add(a, r.zero()), a),
                  [&] { return show({{"a", &a}}); });
    report.record(level + ".add.inverse", r.equal(r.add(a, r.neg(a)), r.zero()),
                  [&] { return show({{"a", &a}}); });
    report.record(level + ".mul.identity", r.equal(r.mul(a, r.one()), a),
                  [&] { return show({{"a", &a}}); });
  });
}

template <GreenFunctor F>
void check_green(Report& report, const F& f, const Domain<FixedOf<F>>& fixed,
                 const Domain<UnderlyingOf<F>>& under, Quantifier& q) {
  using A = FixedOf<F>;
  using U = UnderlyingOf<F>;
  const auto& rf = f.fixed();
  const auto& ru = f.underlying();
  check_ring(report, "fixed", rf, fixed, q);
  check_ring(report, "underlying", ru, under, q);

  auto fa = [&rf](const A& a) { return "a = " + rf.format(a); };
  auto fu = [&ru](const char* name, const U& u) { return std::string(name) + " = " + ru.format(u); };

  report.record("conj.unital", ru.equal(f.conj(ru.one()), ru.one()), [] { return "conj(1)"; });
  report.record("res.unital", ru.equal(f.res(rf.one()), ru.one()), [] { return "res(1)"; });

  q.for_all(under, [&](const U& u) {
    report.record("conj.involution", ru.equal(f.conj(f.conj(u)), u), [&] { return fu("u", u); });
    report.record("tr.conj_invariant", rf.equal(f.tr(f.conj(u)), f.tr(u)),
                  [&] { return fu("u", u); });
    report.record("res_tr", ru.equal(f.res(f.tr(u)), ru.add(u, f.conj(u))),
                  [&] { return fu("u", u); });
  });
  q.for_all(under, under, [&](const U& u, const U& v) {
    auto witness = [&] { return fu("u", u) + ", " + fu("v", v); };
    report.record("conj.additive", ru.equal(f.conj(ru.add(u, v)), ru.add(f.conj(u), f.conj(v))),
                  witness);
    report.record("conj.multiplicative",
                  ru.equal(f.conj(ru.mul(u, v)), ru.mul(f.conj(u), f.conj(v))), witness);
    report.record("tr.additive", rf.equal(f.tr(ru.add(u, v)), rf.add(f.tr(u), f.tr(v))),
                  witness);
  });
  q.for_all(fixed, [&](const A& a) {
    report.record("res.conj_invariant", ru.equal(f.conj(f.res(a)), f.res(a)),
                  [&] { return fa(a); });
  });
  q.for_all(fixed, fixed, [&](const A& a, const A& b) {
    auto witness = [&] { return fa(a) + ", b = " + rf.format(b); };
    report.record("res.additive", ru.equal(f.res(rf.add(a, b)), ru.add(f.res(a), f.res(b))),
                  witness);
    report.record("res.multiplicative",
                  ru.equal(f.res(rf.mul(a, b)), ru.mul(f.res(a), f.res(b))), witness);
  });
  q.for_all(fixed, under, [&](const A& a, const U& u) {
    report.record("frobenius", rf.equal(rf.mul(a, f.tr(u)), f.tr(ru.mul(f.res(a), u))),
                  [&] { return fa(a) + ", " + fu("u", u); });
  });
}

template <GreenFunctor F>
void check_norm(Report& report, const F& f, const Domain<UnderlyingOf<F>>& under, Quantifier& q) {
  using U = UnderlyingOf<F>;
  const auto& rf = f.fixed();
  const auto& ru = f.underlying();
  auto norm = [&f](const U& u) { return checked_norm(f, u); };
  auto fu = [&ru](const char* name, const U& u) { return std::string(name) + " = " + ru.format(u); };

  report.record("norm.unital", rf.equal(norm(ru.one()), rf.one()), [] { return "N(1)"; });
  q.for_all(under, [&](const U& u) {
    report.record("norm.conj_invariant", rf.equal(norm(f.conj(u)), norm(u)),
                  [&] { return fu("u", u); });
    report.record("res_norm", ru.equal(f.res(norm(u)), ru.mul(u, f.conj(u))),
                  [&] { return fu("u", u); });
  });
  q.for_all(under, under, [&](const U& u, const U& v) {
    auto witness = [&] { return fu("u", u) + ", " + fu("v", v); };
    report.record("norm.multiplicative", rf.equal(norm(ru.mul(u, v)), rf.mul(norm(u), norm(v))),
                  witness);
    const auto expanded = rf.add(rf.add(norm(u), norm(v)), f.tr(ru.mul(u, f.conj(v))));
    report.record("norm_of_sum", rf.equal(norm(ru.add(u, v)), expanded), witness);
  });
}

}  // namespace detail

template <GreenFunctor F>
Report check_green_axioms(const F& f, const CheckOptions& options = {}) {
  Report report(options.max_witnesses);
  auto fixed = detail::fixed_domain(f, options);
  auto under = detail::underlying_domain(f, options);
  detail::Quantifier q(options);
  detail::check_green(report, f, fixed, under, q);
  return report;
}

// Throws CapabilityError when f carries no norm.
template <GreenFunctor F>
Report check_tambara_axioms(const F& f, const CheckOptions& options = {}) {
  if (!has_norm(f)) {
    throw CapabilityError("functor has no norm");
  }
  Report report(options.max_witnesses);
  auto fixed = detail::fixed_domain(f, options);
  auto under = detail::underlying_domain(f, options);
  detail::Quantifier q(options);
  detail::check_green(report, f, fixed, under, q);
  detail::check_norm(report, f, under, q);
  return report;
}

}  // namespace tambara
