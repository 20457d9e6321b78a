#include <gtest/gtest.h>

#include <random>

#include "tambara/adjunction.hpp"
#include "tambara/axioms.hpp"
#include "tambara/burnside.hpp"
#include "tambara/finite_functor.hpp"
#include "tambara/right_adjoint.hpp"

namespace tambara {
namespace {

FiniteFunctor swap_square(unsigned n) {
  const TableRing base = integers_mod(n);
  const TableRing ring = product_ring(base, base);
  std::vector<TableElement> sigma;
  for (const auto e : ring.elements()) {
    const std::string& name = ring.name(e);
    const auto comma = name.find(',');
    const std::string a = name.substr(1, comma - 1);
    const std::string b = name.substr(comma + 1, name.size() - comma - 2);
    sigma.push_back(*ring.find("(" + b + "," + a + ")"));
  }
  return fixed_point_functor(ring, sigma);
}

std::vector<std::pair<std::string, FiniteFunctor>> fixtures() {
  const TableRing z2 = integers_mod(2);
  return {{"burnside_mod(2)", burnside_mod(2)},
          {"burnside_mod(3)", burnside_mod(3)},
          {"fixed_point(Z/2, id)", fixed_point_functor(z2, z2.elements())},
          {"fixed_point(Z/2 x Z/2, swap)", swap_square(2)}};
}

// Every operation of F(R) maps member pairs to member pairs.
TEST(RightAdjoint, ClosureOnFixtures) {
  for (const auto& [name, r] : fixtures()) {
    SCOPED_TRACE(name);
    const RightAdjoint<FiniteFunctor> f(r);
    const auto& ff = f.fixed();
    const auto& fu = f.underlying();
    const auto fixed = f.fixed_elements();
    const auto under = f.underlying_elements();
    EXPECT_TRUE(ff.contains(ff.zero()));
    EXPECT_TRUE(ff.contains(ff.one()));
    EXPECT_TRUE(fu.contains(fu.zero()));
    EXPECT_TRUE(fu.contains(fu.one()));
    for (const auto& a : fixed) {
      for (const auto& b : fixed) {
        ASSERT_TRUE(ff.contains(ff.add(a, b)));
        ASSERT_TRUE(ff.contains(ff.mul(a, b)));
      }
      ASSERT_TRUE(ff.contains(ff.neg(a)));
      ASSERT_TRUE(fu.contains(f.res(a)));
    }
    for (const auto& u : under) {
      for (const auto& v : under) {
        ASSERT_TRUE(fu.contains(fu.add(u, v)));
        ASSERT_TRUE(fu.contains(fu.mul(u, v)));
      }
      ASSERT_TRUE(fu.contains(fu.neg(u)));
      ASSERT_TRUE(fu.contains(f.conj(u)));
      ASSERT_TRUE(ff.contains(f.tr(u)));
      ASSERT_TRUE(ff.contains(f.norm(u)));
    }
  }
}

TEST(RightAdjoint, TambaraAxiomsOnFixtures) {
  for (const auto& [name, r] : fixtures()) {
    const RightAdjoint<FiniteFunctor> f(r);
    const Report report = check_tambara_axioms(f);
    EXPECT_TRUE(report.passed()) << name << "\n" << report.to_string();
  }
}

// Carrier sizes counted directly from the membership conditions, without the
// library's enumeration.
TEST(RightAdjoint, CarrierSizesMatchDirectCount) {
  for (const auto& [name, r] : fixtures()) {
    std::size_t fixed = 0;
    std::size_t under = 0;
    const auto& ru = r.underlying();
    for (const auto n : r.fixed_elements()) {
      for (const auto x : r.fixed_elements()) {
        fixed += r.res(n) == ru.mul(r.res(x), r.res(x));
      }
      for (const auto x : r.underlying_elements()) {
        under += r.res(n) == ru.mul(x, r.conj(x));
      }
    }
    const RightAdjoint<FiniteFunctor> f(r);
    EXPECT_EQ(f.fixed_elements().size(), fixed) << name;
    EXPECT_EQ(f.underlying_elements().size(), under) << name;
  }
}

// burnside_mod(2): res(a + bt) = a and every x in Z/2 has x² = x. A fixed pair
// needs a(n) = a(x): 2 choices of b(n) for each of the 4 values of x. An
// underlying pair needs a(n) = x: 2 choices of b(n) for each of the 2 values
// of x.
TEST(RightAdjoint, BurnsideModTwoSizes) {
  const FiniteFunctor bm2 = burnside_mod(2);
  const RightAdjoint<FiniteFunctor> f(bm2);
  EXPECT_EQ(f.fixed_elements().size(), 8u);
  EXPECT_EQ(f.underlying_elements().size(), 4u);
}

TEST(RightAdjoint, NormIgnoresTheSecondCoordinate) {
  for (const auto& [name, r] : fixtures()) {
    const RightAdjoint<FiniteFunctor> f(r);
    const auto under = f.underlying_elements();
    for (const auto& a : under) {
      for (const auto& b : under) {
        if (a.n == b.n) {
          ASSERT_TRUE(f.fixed().equal(f.norm(a), f.norm(b))) << name;
        }
      }
      const auto norm = f.norm(a);
      ASSERT_EQ(norm.n, r.fixed().mul(a.n, a.n));
      ASSERT_EQ(norm.x, a.n);
    }
  }
}

TEST(RightAdjoint, StructureFormulasOnBurnside) {
  const Burnside b;
  const RightAdjoint<Burnside> f(b);
  const auto t = Burnside::t();
  const BurnsideElement zero{0, 0};
  const BurnsideElement one{1, 0};

  // (t, x) is an underlying pair only if x² = res(t) = 2, which has no integer
  // solution; the norm formula itself still gives (t², t) = (2t, t).
  EXPECT_THROW(f.norm({t, Integer(0)}), MembershipError);
  const RightAdjoint<Burnside> unchecked(b, false);
  EXPECT_EQ(unchecked.norm({t, Integer(0)}), (RightAdjoint<Burnside>::Fixed{{0, 2}, t}));

  // (7 + t, 3): res(7 + t) = 9 = 3·3.
  const RightAdjoint<Burnside>::Underlying u{{7, 1}, Integer(3)};
  ASSERT_TRUE(f.underlying().contains(u));
  EXPECT_EQ(f.norm(u), (RightAdjoint<Burnside>::Fixed{{49, 16}, {7, 1}}));
  EXPECT_EQ(f.tr(u), (RightAdjoint<Burnside>::Fixed{{14, 11}, {0, 3}}));
  EXPECT_EQ(f.conj(u), u);

  // (2t, t): res(2t) = 4 = (res t)².
  const RightAdjoint<Burnside>::Fixed c{{0, 2}, t};
  ASSERT_TRUE(f.fixed().contains(c));
  ASSERT_FALSE(f.fixed().contains({{0, 2}, one}));
  EXPECT_EQ(f.res(c), (RightAdjoint<Burnside>::Underlying{{0, 2}, Integer(2)}));
  // Fixed addition adds t·x·x' = tr(res(t·t)) = 4t.
  EXPECT_EQ(f.fixed().add(c, c), (RightAdjoint<Burnside>::Fixed{{0, 8}, {0, 2}}));

  // Additive identity at both levels.
  EXPECT_EQ(f.fixed().add(f.fixed().zero(), c), c);
  EXPECT_EQ(f.underlying().add(f.underlying().zero(), u), u);
  EXPECT_EQ(f.fixed().zero(), (RightAdjoint<Burnside>::Fixed{zero, zero}));
}

TEST(RightAdjoint, SampledBurnsideClosureAndAxioms) {
  const Burnside b;
  const RightAdjoint<Burnside> f(b);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto a = f.sample_fixed(rng);
    const auto c = f.sample_fixed(rng);
    const auto u = f.sample_underlying(rng);
    const auto v = f.sample_underlying(rng);
    ASSERT_TRUE(f.fixed().contains(a));
    ASSERT_TRUE(f.underlying().contains(u));
    ASSERT_TRUE(f.fixed().contains(f.fixed().add(a, c)));
    ASSERT_TRUE(f.fixed().contains(f.fixed().mul(a, c)));
    ASSERT_TRUE(f.fixed().contains(f.fixed().neg(a)));
    ASSERT_TRUE(f.underlying().contains(f.underlying().add(u, v)));
    ASSERT_TRUE(f.underlying().contains(f.underlying().neg(u)));
    ASSERT_TRUE(f.underlying().contains(f.res(a)));
    ASSERT_TRUE(f.fixed().contains(f.tr(u)));
    ASSERT_TRUE(f.fixed().contains(f.norm(u)));
  }
  const Report report = check_tambara_axioms(f, CheckOptions::sampled(3, 500));
  EXPECT_TRUE(report.passed()) << report.to_string();
}

TEST(RightAdjoint, RejectsNonMembers) {
  const FiniteFunctor bm3 = burnside_mod(3);
  const RightAdjoint<FiniteFunctor> f(bm3);
  const auto one = bm3.fixed().one();
  const auto zero = bm3.fixed().zero();
  EXPECT_THROW(f.fixed().add({zero, one}, {zero, one}), MembershipError);
  EXPECT_THROW(f.tr({zero, bm3.underlying().one()}), MembershipError);
  const RightAdjoint<FiniteFunctor> unchecked(bm3, false);
  EXPECT_NO_THROW(unchecked.fixed().add({zero, one}, {zero, one}));
}

// ---------------------------------------------------------------------------
// Unit and counit.

TEST(Unit, BurnsideExamples) {
  const Burnside b;
  const auto t = Burnside::t();
  EXPECT_EQ(unit_fixed(b, t), (RightAdjoint<Burnside>::Fixed{{2, 1}, t}));
  EXPECT_EQ(unit_fixed(b, BurnsideElement{1, 0}),
            (RightAdjoint<Burnside>::Fixed{{1, 0}, {1, 0}}));
  const RightAdjoint<Burnside> f(b);
  for (int m = -5; m <= 5; ++m) {
    EXPECT_EQ(f.counit_underlying(unit_underlying(b, Integer(m))), Integer(m));
  }
}

// The unit S -> F(iS) is a Tambara map, checked on samples of Burnside.
TEST(Unit, IsATambaraMapOnBurnside) {
  const Burnside b;
  const RightAdjoint<Burnside> f(b);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto a = b.sample_fixed(rng);
    const auto c = b.sample_fixed(rng);
    const auto u = b.sample_underlying(rng);
    const auto v = b.sample_underlying(rng);
    ASSERT_EQ(unit_fixed(b, b.fixed().add(a, c)), f.fixed().add(unit_fixed(b, a), unit_fixed(b, c)));
    ASSERT_EQ(unit_fixed(b, b.fixed().mul(a, c)), f.fixed().mul(unit_fixed(b, a), unit_fixed(b, c)));
    ASSERT_EQ(unit_underlying(b, u + v), f.underlying().add(unit_underlying(b, u), unit_underlying(b, v)));
    ASSERT_EQ(unit_underlying(b, b.res(a)), f.res(unit_fixed(b, a)));
    ASSERT_EQ(unit_fixed(b, b.tr(u)), f.tr(unit_underlying(b, u)));
    ASSERT_EQ(unit_fixed(b, b.norm(u)), f.norm(unit_underlying(b, u)));
    ASSERT_EQ(unit_underlying(b, b.conj(u)), f.conj(unit_underlying(b, u)));
  }
}

TEST(Counit, IsAGreenMapOnFixtures) {
  for (const auto& [name, r] : fixtures()) {
    SCOPED_TRACE(name);
    const RightAdjoint<FiniteFunctor> f(r);
    for (const auto& a : f.fixed_elements()) {
      for (const auto& c : f.fixed_elements()) {
        ASSERT_EQ(f.counit_fixed(f.fixed().add(a, c)), r.fixed().add(a.x, c.x));
        ASSERT_EQ(f.counit_fixed(f.fixed().mul(a, c)), r.fixed().mul(a.x, c.x));
      }
      ASSERT_EQ(f.counit_underlying(f.res(a)), r.res(a.x));
    }
    for (const auto& u : f.underlying_elements()) {
      for (const auto& v : f.underlying_elements()) {
        ASSERT_EQ(f.counit_underlying(f.underlying().add(u, v)), r.underlying().add(u.x, v.x));
        ASSERT_EQ(f.counit_underlying(f.underlying().mul(u, v)), r.underlying().mul(u.x, v.x));
      }
      ASSERT_EQ(f.counit_fixed(f.tr(u)), r.tr(u.x));
      ASSERT_EQ(f.counit_underlying(f.conj(u)), r.conj(u.x));
    }
  }
}

// ---------------------------------------------------------------------------
// Naturality: transpose(ρ∘φ) = F(ρ)∘transpose(φ) for Green maps φ: iS -> R
// and ρ: R -> R'.

FunctorHom<FiniteFunctor, FiniteFunctor> as_hom(const TableHom& h) {
  return {[h](const TableElement& a) { return h.fixed[a.index]; },
          [h](const TableElement& u) { return h.underlying[u.index]; }};
}

TEST(Transpose, NaturalInTheGreenFunctor) {
  const TableRing z2 = integers_mod(2);
  const FiniteFunctor fp2 = fixed_point_functor(z2, z2.elements());
  const FiniteFunctor bm2 = burnside_mod(2);
  const FiniteFunctor bm3 = burnside_mod(3);
  const FiniteFunctor sq = swap_square(2);
  const std::vector<std::pair<const FiniteFunctor*, const FiniteFunctor*>> maps{
      {&bm2, &fp2}, {&bm2, &bm2}, {&bm3, &bm3}, {&sq, &fp2}, {&bm2, &sq}};
  const std::vector<const FiniteFunctor*> sources{&fp2, &bm3, &sq};
  std::size_t checked = 0;
  for (const auto& [r, r2] : maps) {
    const auto rhos = green_homs(*r, *r2);
    for (const FiniteFunctor* s : sources) {
      for (const auto& phi_table : green_homs(*s, *r)) {
        const auto phi = as_hom(phi_table);
        const auto left_base = transpose(*s, phi);
        for (const auto& rho_table : rhos) {
          const auto rho = as_hom(rho_table);
          const FunctorHom<FiniteFunctor, FiniteFunctor> composite{
              [&](const TableElement& a) { return rho.fixed(phi.fixed(a)); },
              [&](const TableElement& u) { return rho.underlying(phi.underlying(u)); }};
          const auto left = transpose(*s, composite);
          const auto f_rho = adjoint_map<FiniteFunctor, FiniteFunctor>(rho);
          for (const auto a : s->fixed_elements()) {
            ASSERT_EQ(left.fixed(a), f_rho.fixed(left_base.fixed(a)));
          }
          for (const auto u : s->underlying_elements()) {
            ASSERT_EQ(left.underlying(u), f_rho.underlying(left_base.underlying(u)));
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace tambara
