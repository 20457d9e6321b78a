#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "tambara/axioms.hpp"
#include "tambara/burnside.hpp"
#include "tambara/finite_functor.hpp"
#include "tambara/gset.hpp"

namespace tambara {
namespace {

const Burnside b;

TEST(Burnside, ClosedForms) {
  const auto& r = b.fixed();
  const auto t = Burnside::t();
  EXPECT_EQ(r.mul(t, t), (BurnsideElement{0, 2}));
  EXPECT_EQ(b.tr(1), t);
  EXPECT_EQ(b.norm(2), (BurnsideElement{2, 1}));
  EXPECT_EQ(b.norm(-1), (BurnsideElement{-1, 1}));
  EXPECT_EQ(b.norm(0), (BurnsideElement{0, 0}));
  EXPECT_EQ(b.res(t), Integer(2));
  EXPECT_EQ(format_burnside({-1, 1}), "-1 + t");
}

// Coinduction from an m-element set: maps C2 -> {1..m} under the swap action
// give m fixed points and the remaining pairs as free orbits.
TEST(Burnside, NormIsCoinductionCountedByBruteForce) {
  for (int m = 0; m <= 12; ++m) {
    int fixed_points = 0;
    int moved = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        (i == j ? fixed_points : moved) += 1;
      }
    }
    EXPECT_EQ(b.norm(m), (BurnsideElement{fixed_points, moved / 2})) << "m = " << m;
  }
}

// The same count through the dependent product along C2 -> * of m copies of
// C2, which is Map(C2, m) as a C2-set.
TEST(Burnside, NormMatchesTheDependentProduct) {
  for (std::size_t m = 0; m <= 6; ++m) {
    std::vector<Point> sheets;
    for (std::size_t j = 0; j < m; ++j) {
      sheets.push_back(0);
      sheets.push_back(1);
    }
    const DependentProduct pi =
        dependent_product(GMap(GSet(0, m), GSet::free_orbit(), sheets), GMap::quotient());
    const BurnsideElement expected{static_cast<long>(pi.object.fixed_count()),
                                   static_cast<long>(pi.object.free_orbit_count())};
    EXPECT_EQ(b.norm(static_cast<long>(m)), expected) << "m = " << m;
  }
}

TEST(Burnside, NormIsPolynomialOnNegatives) {
  // N(m) is determined on all integers by N(0) = 0 and the norm-of-sum law
  // N(m + 1) = N(m) + N(1) + tr(m).
  BurnsideElement expected{0, 0};
  for (int m = 0; m >= -12; --m) {
    EXPECT_EQ(b.norm(m), expected) << "m = " << m;
    // N(m - 1) = N(m) - N(1) - tr(m - 1), from N(m) = N(m - 1) + N(1) + tr(m - 1).
    expected = b.fixed().add(expected, b.fixed().neg(b.fixed().add(b.norm(1), b.tr(m - 1))));
  }
}

TEST(Burnside, SampledTambaraAxioms) {
  const Report report = check_tambara_axioms(b, CheckOptions::sampled(0, 1000));
  EXPECT_TRUE(report.passed()) << report.to_string();
  EXPECT_TRUE(report.entries().contains("norm_of_sum"));
}

TEST(Burnside, ResPreimageSampler) {
  std::mt19937_64 rng(4);
  for (int m = -20; m <= 20; ++m) {
    EXPECT_EQ(b.res(b.sample_res_preimage(rng, m)), Integer(m));
  }
}

TEST(BurnsideMod, GreenForEveryModulusTambaraOnlyForOdd) {
  for (unsigned n = 2; n <= 7; ++n) {
    const FiniteFunctor f = burnside_mod(n);
    EXPECT_EQ(f.fixed().size(), n * n);
    EXPECT_EQ(f.underlying().size(), n);
    const Report green = check_green_axioms(f);
    EXPECT_TRUE(green.passed()) << "n = " << n << "\n" << green.to_string();
    const Report tambara = check_tambara_axioms(f);
    if (n % 2 == 1) {
      EXPECT_TRUE(tambara.passed()) << "n = " << n << "\n" << tambara.to_string();
    } else {
      EXPECT_FALSE(tambara.passed()) << "n = " << n;
    }
  }
}

TEST(BurnsideMod, ModTwoFailsOnlyTheNormOfSum) {
  const Report report = check_tambara_axioms(burnside_mod(2));
  EXPECT_EQ(report.failed_identities(), std::vector<std::string>{"norm_of_sum"});
  // N(1 + 1) = N(0) = 0, but N(1) + N(1) + tr(1) = 2 + t = t.
  const FiniteFunctor f = burnside_mod(2);
  const auto one = *f.underlying().find("1");
  const auto lhs = f.norm(f.underlying().add(one, one));
  const auto rhs = f.fixed().add(f.fixed().add(f.norm(one), f.norm(one)), f.tr(one));
  EXPECT_EQ(f.fixed().name(lhs), "0");
  EXPECT_EQ(f.fixed().name(rhs), "t");
}

TEST(BurnsideMod, ReducesTheIntegralStructureMaps) {
  const unsigned n = 5;
  const FiniteFunctor f = burnside_mod(n);
  for (int m = 0; m < static_cast<int>(n); ++m) {
    const auto u = *f.underlying().find(std::to_string(m));
    const BurnsideElement integral = b.norm(m);
    const unsigned units = static_cast<unsigned>(integral.units % n);
    const unsigned orbits = static_cast<unsigned>(integral.orbits % n);
    std::string name = std::to_string(units);
    if (orbits != 0) {
      const std::string t = orbits == 1 ? "t" : std::to_string(orbits) + "t";
      name = units == 0 ? t : name + "+" + t;
    }
    const auto reduced = f.fixed().find(name);
    ASSERT_TRUE(reduced.has_value());
    EXPECT_EQ(f.norm(u), *reduced);
  }
}

// Reduction mod n against the seven structure operations, on Burnside
// elements with coefficients in [-6, 6].
TEST(BurnsideMod, ReductionCommutesWithTheStructure) {
  for (unsigned n = 2; n <= 4; ++n) {
    const FiniteFunctor f = burnside_mod(n);
    auto mod = [n](const Integer& c) {
      return static_cast<unsigned>(((c % n) + n) % n);
    };
    auto reduce_fixed = [&](const BurnsideElement& a) {
      return TableElement{mod(a.units) + n * mod(a.orbits)};
    };
    auto reduce_underlying = [&](const Integer& m) { return TableElement{mod(m)}; };
    std::vector<BurnsideElement> fixed;
    std::vector<Integer> under;
    for (int u = -6; u <= 6; ++u) {
      under.emplace_back(u);
      for (int o = -6; o <= 6; ++o) {
        fixed.push_back({u, o});
      }
    }
    for (const auto& a : fixed) {
      for (const auto& c : fixed) {
        ASSERT_EQ(reduce_fixed(b.fixed().add(a, c)), f.fixed().add(reduce_fixed(a), reduce_fixed(c)));
        ASSERT_EQ(reduce_fixed(b.fixed().mul(a, c)), f.fixed().mul(reduce_fixed(a), reduce_fixed(c)));
      }
      ASSERT_EQ(reduce_fixed(b.fixed().neg(a)), f.fixed().neg(reduce_fixed(a)));
      ASSERT_EQ(reduce_underlying(b.res(a)), f.res(reduce_fixed(a)));
    }
    bool norm_commutes = true;
    for (const auto& m : under) {
      for (const auto& k : under) {
        ASSERT_EQ(reduce_underlying(m * k), f.underlying().mul(reduce_underlying(m), reduce_underlying(k)));
      }
      ASSERT_EQ(reduce_underlying(b.conj(m)), f.conj(reduce_underlying(m)));
      ASSERT_EQ(reduce_fixed(b.tr(m)), f.tr(reduce_underlying(m)));
      norm_commutes = norm_commutes && reduce_fixed(b.norm(m)) == f.norm(reduce_underlying(m));
    }
    // N(m + n) - N(m) = n + (nm + C(n, 2))·t, and C(n, 2) is a multiple of n
    // only for odd n.
    EXPECT_EQ(norm_commutes, n % 2 == 1) << "n = " << n;
  }
}

TEST(FixedPointFunctor, IdentityInvolutionOnZ2) {
  const TableRing z2 = integers_mod(2);
  const FiniteFunctor f = fixed_point_functor(z2, z2.elements());
  EXPECT_EQ(f.fixed().size(), 2u);
  EXPECT_TRUE(check_tambara_axioms(f).passed());
  // tr(b) = 2b = 0 and N(b) = b².
  for (const auto e : z2.elements()) {
    EXPECT_EQ(f.fixed().name(f.tr(e)), "0");
    EXPECT_EQ(f.fixed().name(f.norm(e)), z2.name(z2.mul(e, e)));
  }
}

TEST(FixedPointFunctor, SwapOnASquare) {
  const TableRing z3 = integers_mod(3);
  const TableRing ring = product_ring(z3, z3);
  std::vector<TableElement> sigma;
  for (const auto e : ring.elements()) {
    const std::string& name = ring.name(e);  // "(a,b)"
    const std::string swapped = "(" + name.substr(3, 1) + "," + name.substr(1, 1) + ")";
    sigma.push_back(*ring.find(swapped));
  }
  const FiniteFunctor f = fixed_point_functor(ring, sigma);
  EXPECT_EQ(f.fixed().size(), 3u);
  EXPECT_EQ(f.underlying().size(), 9u);
  const Report report = check_tambara_axioms(f);
  EXPECT_TRUE(report.passed()) << report.to_string();
}

TEST(FixedPointFunctor, IdentityInvolutionOnZ3) {
  const TableRing z3 = integers_mod(3);
  const FiniteFunctor f = fixed_point_functor(z3, z3.elements());
  for (const auto e : z3.elements()) {
    EXPECT_EQ(f.fixed().name(f.tr(e)), z3.name(z3.add(e, e)));
  }
  EXPECT_TRUE(check_tambara_axioms(f).passed());
}

TEST(FixedPointFunctor, SwapOnZ2Squared) {
  const TableRing z2 = integers_mod(2);
  const TableRing ring = product_ring(z2, z2);
  std::vector<TableElement> sigma;
  for (const auto e : ring.elements()) {
    const std::string& name = ring.name(e);
    sigma.push_back(*ring.find("(" + name.substr(3, 1) + "," + name.substr(1, 1) + ")"));
  }
  const FiniteFunctor f = fixed_point_functor(ring, sigma);
  EXPECT_EQ(f.fixed().size(), 2u);
  EXPECT_EQ(f.underlying().size(), 4u);
  EXPECT_TRUE(check_tambara_axioms(f).passed());
}

TEST(FixedPointFunctor, RejectsNonInvolutions) {
  const TableRing z3 = integers_mod(3);
  // Negation is additive but not multiplicative.
  std::vector<TableElement> negate;
  for (const auto e : z3.elements()) {
    negate.push_back(z3.neg(e));
  }
  EXPECT_THROW(fixed_point_functor(z3, negate), InputError);
}

// burnside_mod(3) with tr(1) redefined as 0.
TEST(BrokenTables, TransferRedefined) {
  const FiniteFunctor f = burnside_mod(3);
  auto tr = f.tr_map();
  tr[1] = f.fixed().zero();
  const FiniteFunctor broken(f.fixed(), f.underlying(), f.conj_map(), f.res_map(), tr, f.norm_map());
  const Report report = check_green_axioms(broken);
  EXPECT_FALSE(report.passed());
  const auto failed = report.failed_identities();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "res_tr"), failed.end());
  EXPECT_FALSE(report.entries().at("res_tr").witnesses.empty());
}

TEST(BrokenTables, NormOfZeroNonZero) {
  const FiniteFunctor f = burnside_mod(3);
  auto norm = *f.norm_map();
  norm[0] = f.fixed().one();
  const FiniteFunctor broken(f.fixed(), f.underlying(), f.conj_map(), f.res_map(), f.tr_map(), norm);
  const auto failed = check_tambara_axioms(broken).failed_identities();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "norm_of_sum"), failed.end());
  EXPECT_NE(std::find(failed.begin(), failed.end(), "res_norm"), failed.end());
}

TEST(ZeroFunctor, IsTambara) {
  EXPECT_TRUE(check_tambara_axioms(zero_functor()).passed());
}

}  // namespace
}  // namespace tambara
