#pragma once

// Maps out of the free functors: extension of generator images to Green
// functor maps, the Yoneda consistency check, representing bispans of basis
// elements and the generator images of the co-structure maps.

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "tambara/bispan.hpp"
#include "tambara/errors.hpp"
#include "tambara/free_functors.hpp"
#include "tambara/report.hpp"

namespace tambara {

// The Green functor map out of a free functor determined by x_i ↦ ξ_i and, for
// the Tambara sources, n_i ↦ ν_i. Basis elements go to the evident monomials
// in ξ and ν, with t·m ↦ tr(res(image of m)), t_i ↦ tr(ξ^i) and
// t_{i,j} ↦ tr(ξ^i·conj(ξ)^j).
template <class Source, GreenFunctor Target>
class GreenHomExtension {
 public:
  static constexpr bool fixed_generators = Source::generator_level == GeneratorLevel::fixed;
  using Xi = std::conditional_t<fixed_generators, FixedOf<Target>, UnderlyingOf<Target>>;

  // Throws InputError on a wrong number of images and MembershipError when
  // res(ν_i) differs from res(ξ_i)² (fixed generators) or ξ_i·conj(ξ_i)
  // (underlying generators).
  GreenHomExtension(const Source& source, const Target& target, std::vector<Xi> xi,
                    std::vector<FixedOf<Target>> nu = {})
      : source_(&source), target_(&target), xi_(std::move(xi)), nu_(std::move(nu)) {
    const std::size_t k = source.generator_count();
    if (xi_.size() != k) {
      throw InputError("green_hom_extend: expected " + std::to_string(k) + " generator images");
    }
    if (Source::has_norm_generators ? nu_.size() != k : !nu_.empty()) {
      throw InputError(Source::has_norm_generators
                           ? "green_hom_extend: every n needs an image"
                           : "green_hom_extend: free Green functors have no n generator");
    }
    const auto& ru = target.underlying();
    for (std::size_t i = 0; i < k; ++i) {
      if constexpr (fixed_generators) {
        base_.push_back(target.res(xi_[i]));
      } else {
        base_.push_back(xi_[i]);
      }
      base_conj_.push_back(target.conj(base_.back()));
      if constexpr (Source::has_norm_generators) {
        const auto expected = ru.mul(base_[i], fixed_generators ? base_[i] : base_conj_[i]);
        if (!ru.equal(target.res(nu_[i]), expected)) {
          throw MembershipError("green_hom_extend: res of the image of n is " +
                                ru.format(target.res(nu_[i])) + ", expected " +
                                ru.format(expected));
        }
      }
    }
  }

  FixedOf<Target> fixed(const FixedOf<Source>& a) const {
    const auto& rf = target_->fixed();
    FixedOf<Target> out = rf.zero();
    for (const auto& [key, c] : a) {
      out = rf.add(out, scale(rf, c, fixed_key(key)));
    }
    return out;
  }

  UnderlyingOf<Target> underlying(const UnderlyingOf<Source>& u) const {
    const auto& ru = target_->underlying();
    UnderlyingOf<Target> out = ru.zero();
    for (const auto& [m, c] : u) {
      out = ru.add(out, scale(ru, c, underlying_monomial(m)));
    }
    return out;
  }

  UnderlyingOf<Target> underlying_monomial(const Monomial& m) const {
    const auto& ru = target_->underlying();
    UnderlyingOf<Target> out = ru.one();
    for (std::size_t i = 0; i < base_.size(); ++i) {
      if constexpr (fixed_generators) {
        out = ru.mul(out, power(ru, base_[i], m[i]));
      } else {
        out = ru.mul(out, power(ru, base_[i], m[2 * i]));
        out = ru.mul(out, power(ru, base_conj_[i], m[2 * i + 1]));
      }
    }
    return out;
  }

  FixedOf<Target> fixed_key(const typename Source::FixedKey& key) const {
    const auto& rf = target_->fixed();
    const auto& ru = target_->underlying();
    if constexpr (std::is_same_v<Source, FreeGreenFixed>) {
      auto image = power(rf, xi_[0], key.degree);
      return key.transfer ? target_->tr(target_->res(image)) : image;
    } else if constexpr (std::is_same_v<Source, FreeGreenUnderlying>) {
      if (!key.transfer) {
        return rf.one();
      }
      return target_->tr(ru.mul(power(ru, base_[0], key.i), power(ru, base_conj_[0], key.j)));
    } else if constexpr (std::is_same_v<Source, FreeTambaraFixed>) {
      auto image = rf.one();
      for (std::size_t i = 0; i < xi_.size(); ++i) {
        image = rf.mul(image, power(rf, xi_[i], key.x[i]));
        image = rf.mul(image, power(rf, nu_[i], key.n[i]));
      }
      return key.transfer ? target_->tr(target_->res(image)) : image;
    } else {
      static_assert(std::is_same_v<Source, FreeTambaraUnderlying>);
      auto image = rf.one();
      for (std::size_t i = 0; i < nu_.size(); ++i) {
        image = rf.mul(image, power(rf, nu_[i], key.n[i]));
      }
      if (key.transfer) {
        image = rf.mul(image,
                       target_->tr(underlying_monomial(FreeTambaraUnderlying::tau_monomial(key.d))));
      }
      return image;
    }
  }

  const Source& source() const { return *source_; }
  const Target& target() const { return *target_; }

 private:
  const Source* source_;
  const Target* target_;
  std::vector<Xi> xi_;
  std::vector<FixedOf<Target>> nu_;
  std::vector<UnderlyingOf<Target>> base_;       // ξ_i, or res(ξ_i) for fixed generators
  std::vector<UnderlyingOf<Target>> base_conj_;  // conj of base_
};

template <class Source, GreenFunctor Target>
GreenHomExtension<Source, Target> green_hom_extend(
    const Source& source, const Target& target,
    std::vector<typename GreenHomExtension<Source, Target>::Xi> xi,
    std::vector<FixedOf<Target>> nu = {}) {
  return {source, target, std::move(xi), std::move(nu)};
}

namespace detail {

template <class Source, TambaraFunctor S>
Report yoneda_run(const Source& free, const S& s, const GreenHomExtension<Source, S>& phi,
                  unsigned degree_bound) {
  Report report;
  const auto& rf = s.fixed();
  const auto& ru = s.underlying();
  const auto& ff = free.fixed();
  const auto& fu = free.underlying();

  std::vector<FixedOf<Source>> fixed_basis;
  for (const auto& key : free.fixed_basis(degree_bound)) {
    fixed_basis.emplace_back(key);
  }
  std::vector<UnderlyingOf<Source>> underlying_basis;
  for (const auto& m : free.underlying_basis(degree_bound)) {
    underlying_basis.push_back(fu.monomial(m));
  }

  report.record("yoneda.unit",
                rf.equal(phi.fixed(ff.one()), rf.one()) && ru.equal(phi.underlying(fu.one()), ru.one()),
                [] { return std::string("phi(1)"); });
  for (const auto& b : fixed_basis) {
    report.record("yoneda.res", ru.equal(phi.underlying(free.res(b)), s.res(phi.fixed(b))),
                  [&] { return "b = " + ff.format(b); });
  }
  for (const auto& u : underlying_basis) {
    auto witness = [&] { return "u = " + fu.format(u); };
    report.record("yoneda.tr", rf.equal(phi.fixed(free.tr(u)), s.tr(phi.underlying(u))), witness);
    report.record("yoneda.conj", ru.equal(phi.underlying(free.conj(u)), s.conj(phi.underlying(u))),
                  witness);
    report.record("yoneda.norm", rf.equal(phi.fixed(free.norm(u)), s.norm(phi.underlying(u))),
                  witness);
  }
  for (const auto& a : fixed_basis) {
    for (const auto& b : fixed_basis) {
      auto witness = [&] { return "a = " + ff.format(a) + ", b = " + ff.format(b); };
      report.record("yoneda.fixed.add",
                    rf.equal(phi.fixed(ff.add(a, b)), rf.add(phi.fixed(a), phi.fixed(b))), witness);
      report.record("yoneda.fixed.mul",
                    rf.equal(phi.fixed(ff.mul(a, b)), rf.mul(phi.fixed(a), phi.fixed(b))), witness);
    }
  }
  for (const auto& u : underlying_basis) {
    for (const auto& v : underlying_basis) {
      auto witness = [&] { return "u = " + fu.format(u) + ", v = " + fu.format(v); };
      report.record("yoneda.underlying.add",
                    ru.equal(phi.underlying(fu.add(u, v)),
                             ru.add(phi.underlying(u), phi.underlying(v))),
                    witness);
      report.record("yoneda.underlying.mul",
                    ru.equal(phi.underlying(fu.mul(u, v)),
                             ru.mul(phi.underlying(u), phi.underlying(v))),
                    witness);
    }
  }
  return report;
}

}  // namespace detail

// Builds the map out of the free Tambara functor on a fixed generator with
// x ↦ s and n ↦ N(res s), and checks that it commutes with the ring
// operations, res, tr, conj and N on all basis elements of degree <= bound.
template <TambaraFunctor S>
Report yoneda_check_fixed(const S& functor, const FixedOf<S>& s, unsigned degree_bound) {
  static const FreeTambaraFixed free;
  const GreenHomExtension<FreeTambaraFixed, S> phi(free, functor, {s},
                                                   {functor.norm(functor.res(s))});
  return detail::yoneda_run(free, functor, phi, degree_bound);
}

// As above for an underlying generator, with x ↦ s and n ↦ N(s).
template <TambaraFunctor S>
Report yoneda_check_underlying(const S& functor, const UnderlyingOf<S>& s, unsigned degree_bound) {
  static const FreeTambaraUnderlying free;
  const GreenHomExtension<FreeTambaraUnderlying, S> phi(free, functor, {s}, {functor.norm(s)});
  return detail::yoneda_run(free, functor, phi, degree_bound);
}

// Representing bispans of single basis elements (one generator only). Fixed
// basis elements give bispans into *, underlying ones bispans into C2; the
// source is * or C2 according to the generator level. Green keys use the
// trivial indexing system, Tambara keys the complete one.
Bispan basis_to_bispan(const GreenFixedKey& key);
Bispan basis_to_bispan(const GreenUnderlyingKey& key);
Bispan basis_to_bispan(const TambaraFixedKey& key);
Bispan basis_to_bispan(const TambaraUnderlyingKey& key);
Bispan underlying_basis_to_bispan(GeneratorLevel generator, const Monomial& m,
                                  IndexingSystem indexing);

// Generator images of the co-structure maps between free Tambara functors.
enum class ComapKind { coR, coN, coT, coAddUnderlying, coAddFixed };

std::string_view to_string(ComapKind kind);
ComapKind parse_comap_kind(std::string_view name);  // throws InputError

template <TambaraFunctor Target>
struct GeneratorImages {
  Target target;
  std::variant<FixedOf<Target>, UnderlyingOf<Target>> x;
  FixedOf<Target> n;
};

// x_{C2} ↦ res(x_*), n ↦ n in the free functor on x_*.
GeneratorImages<FreeTambaraFixed> comap_coR();
// x_* ↦ n, n ↦ n² in the free functor on x_{C2}.
GeneratorImages<FreeTambaraUnderlying> comap_coN();
// x_* ↦ tr(x) = t_1, n ↦ 2n + t_2 in the free functor on x_{C2}.
GeneratorImages<FreeTambaraUnderlying> comap_coT();
// x_{C2} ↦ y + z, n ↦ n_y + n_z + tr(y·conj(z)) on two underlying generators.
GeneratorImages<FreeTambaraUnderlying> comap_coAddUnderlying();
// x_* ↦ y + z, n ↦ n_y + n_z + t·y·z on two fixed generators.
GeneratorImages<FreeTambaraFixed> comap_coAddFixed();

struct ComapTable {
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> images;
};
ComapTable comap_images(ComapKind kind);

}  // namespace tambara
