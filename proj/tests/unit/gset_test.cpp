#include <gtest/gtest.h>

#include "random_objects.hpp"
#include "tambara/errors.hpp"
#include "tambara/gset.hpp"

namespace tambara {
namespace {

using testing::all_gsets;
using testing::all_maps;

TEST(GSet, PointNamesRoundTrip) {
  const GSet s(2, 3);
  for (Point p = 0; p < s.size(); ++p) {
    EXPECT_EQ(s.parse_point(s.point_name(p)), p);
  }
  EXPECT_EQ(s.point_name(0), "f0");
  EXPECT_EQ(s.point_name(3), "o0.1");
  EXPECT_THROW(s.parse_point("f2"), InputError);
  EXPECT_THROW(s.parse_point("o3.0"), InputError);
  EXPECT_THROW(s.parse_point("o0.2"), InputError);
}

TEST(GSet, ActionIsAnInvolutionFixingExactlyTheFixedPoints) {
  for (const auto& s : all_gsets(6)) {
    for (Point p = 0; p < s.size(); ++p) {
      EXPECT_EQ(s.act(s.act(p)), p);
      EXPECT_EQ(s.act(p) == p, s.is_fixed(p));
    }
  }
}

TEST(GMap, RejectsNonEquivariantImages) {
  EXPECT_THROW(GMap(GSet(0, 1), GSet(0, 1), {0, 0}), InputError);
  EXPECT_THROW(GMap(GSet(1, 0), GSet(0, 1), {0}), InputError);
  EXPECT_NO_THROW(GMap(GSet(0, 1), GSet(1, 0), {0, 0}));
}

TEST(GMap, MapCountsMatchClosedForm) {
  // Fixed points have |T^C2| choices, free orbits |T| choices.
  for (const auto& s : all_gsets(4)) {
    for (const auto& t : all_gsets(4)) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < s.fixed_count(); ++i) {
        expected *= t.fixed_count();
      }
      for (std::size_t j = 0; j < s.free_orbit_count(); ++j) {
        expected *= t.size();
      }
      EXPECT_EQ(all_maps(s, t).size(), expected) << s.to_string() << " -> " << t.to_string();
    }
  }
}

TEST(Indexing, TrivialSystemForbidsFreeToFixed) {
  EXPECT_FALSE(is_member(GMap::quotient(), IndexingSystem::trivial));
  EXPECT_TRUE(is_member(GMap::quotient(), IndexingSystem::complete));
  EXPECT_TRUE(is_member(GMap::gamma(), IndexingSystem::trivial));
  EXPECT_TRUE(is_member(GMap(GSet(2, 0), GSet(1, 0), {0, 0}), IndexingSystem::trivial));
}

// The pullback satisfies its universal property against every test object
// with at most two points.
TEST(Pullback, UniversalPropertyByBruteForce) {
  const auto small = all_gsets(3);
  const auto probes = all_gsets(2);
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        for (const auto& f : all_maps(a, c)) {
          for (const auto& g : all_maps(b, c)) {
            const Pullback p = pullback(f, g);
            ASSERT_EQ(compose(f, p.first), compose(g, p.second));
            for (const auto& x : probes) {
              const auto into_p = all_maps(x, p.object);
              for (const auto& u : all_maps(x, a)) {
                for (const auto& v : all_maps(x, b)) {
                  if (compose(f, u) != compose(g, v)) {
                    continue;
                  }
                  std::size_t factorizations = 0;
                  for (const auto& w : into_p) {
                    factorizations += compose(p.first, w) == u && compose(p.second, w) == v;
                  }
                  ASSERT_EQ(factorizations, 1u);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST(Pullback, CardinalityIsFiberwiseProduct) {
  const auto small = all_gsets(4);
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : all_gsets(3)) {
        for (const auto& f : all_maps(a, c)) {
          for (const auto& g : all_maps(b, c)) {
            std::size_t expected = 0;
            for (Point x = 0; x < c.size(); ++x) {
              expected += f.preimage(x).size() * g.preimage(x).size();
            }
            EXPECT_EQ(pullback(f, g).object.size(), expected);
          }
        }
      }
    }
  }
}

// Number of maps X -> Y over a base, given p: X -> B and q: Y -> B: each
// fixed x picks a fixed point of q⁻¹(p(x)), each free orbit any point of it.
std::size_t maps_over(const GMap& p, const GMap& q) {
  const GSet& x = p.source();
  const GSet& y = q.source();
  std::size_t count = 1;
  for (std::size_t i = 0; i < x.fixed_count(); ++i) {
    std::size_t choices = 0;
    for (const Point c : q.preimage(p(x.fixed_point(i)))) {
      choices += y.is_fixed(c);
    }
    count *= choices;
  }
  for (std::size_t j = 0; j < x.free_orbit_count(); ++j) {
    count *= q.preimage(p(x.free_point(j, 0))).size();
  }
  return count;
}

// |Hom_{/S}(g*X, A)| = |Hom_{/T}(X, Π_g A)| for all S, T, A with <= 4 points.
// Both sides turn disjoint unions in X into products, so X ranges over the
// orbits * and C2 with every structure map to T.
TEST(DependentProduct, RightAdjointToPullbackByCounting) {
  const auto sets = all_gsets(4);
  for (const auto& s : sets) {
    for (const auto& t : sets) {
      for (const auto& g : all_maps(s, t)) {
        for (const auto& a : sets) {
          for (const auto& h : all_maps(a, s)) {
            const DependentProduct pi = dependent_product(h, g);
            for (const auto& x : {GSet::point(), GSet::free_orbit()}) {
              for (const auto& k : all_maps(x, t)) {
                const Pullback pb = pullback(g, k);
                ASSERT_EQ(maps_over(pb.first, h), maps_over(k, pi.projection))
                    << "g: " << s.to_string() << " -> " << t.to_string()
                    << ", A = " << a.to_string() << ", X = " << x.to_string();
              }
            }
          }
        }
      }
    }
  }
}

TEST(DependentProduct, SectionsAreSectionsOfTheFibers) {
  const auto sets = all_gsets(4);
  for (const auto& s : sets) {
    for (const auto& t : all_gsets(3)) {
      for (const auto& g : all_maps(s, t)) {
        for (const auto& a : all_gsets(3)) {
          for (const auto& h : all_maps(a, s)) {
            const DependentProduct pi = dependent_product(h, g);
            for (Point p = 0; p < pi.object.size(); ++p) {
              for (Point x = 0; x < s.size(); ++x) {
                const Point image = pi.sections[p][x];
                if (g(x) == pi.projection(p)) {
                  ASSERT_NE(image, no_point);
                  EXPECT_EQ(h(image), x);
                  // Equivariance: the conjugate section is the section of the conjugate point.
                  EXPECT_EQ(pi.sections[pi.object.act(p)][s.act(x)], a.act(image));
                } else {
                  EXPECT_EQ(image, no_point);
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST(DependentProduct, MapsOutOfTheFreeOrbitGiveChooseTwo) {
  // Π along C2 -> * of m copies of C2 is Map(C2, m): m fixed, C(m, 2) free.
  for (std::size_t m = 0; m <= 6; ++m) {
    const GSet a(0, m);
    std::vector<Point> sheets;
    for (std::size_t j = 0; j < m; ++j) {
      sheets.push_back(0);
      sheets.push_back(1);
    }
    const DependentProduct pi = dependent_product(GMap(a, GSet::free_orbit(), sheets),
                                                  GMap::quotient());
    EXPECT_EQ(pi.object.fixed_count(), m);
    EXPECT_EQ(pi.object.free_orbit_count(), m == 0 ? 0 : m * (m - 1) / 2);
  }
}

TEST(DependentProduct, SectionLimitIsEnforced) {
  const GSet a(0, 8);
  std::vector<Point> sheets;
  for (std::size_t j = 0; j < 8; ++j) {
    sheets.push_back(0);
    sheets.push_back(1);
  }
  EXPECT_THROW(dependent_product(GMap(a, GSet::free_orbit(), sheets), GMap::quotient(), 4),
               ResourceLimitError);
}

TEST(ExponentialDiagram, SquareCommutesAndFibersMatch) {
  const auto sets = all_gsets(3);
  for (const auto& s : sets) {
    for (const auto& t : sets) {
      for (const auto& g : all_maps(s, t)) {
        for (const auto& a : sets) {
          for (const auto& h : all_maps(a, s)) {
            const ExponentialDiagram d = exponential_diagram(g, h);
            // g ∘ h ∘ f' = h' ∘ g'
            EXPECT_EQ(compose(g, compose(h, d.evaluation)), compose(d.structure, d.projection));
          }
        }
      }
    }
  }
}

TEST(Relabel, CanonicalOrderOfAnInvolution) {
  // 0 <-> 3, 1 fixed, 2 fixed, 4 <-> 5
  const std::vector<std::size_t> involution{3, 1, 2, 0, 5, 4};
  const Relabeling r = relabel(involution);
  EXPECT_EQ(r.set, GSet(2, 2));
  EXPECT_EQ(r.canonical[1], 0u);
  EXPECT_EQ(r.canonical[2], 1u);
  EXPECT_EQ(r.canonical[0], r.set.free_point(0, 0));
  EXPECT_EQ(r.canonical[3], r.set.free_point(0, 1));
}

TEST(Coproduct, FoldAndInjections) {
  const GSet a(1, 1);
  const GSet b(2, 0);
  const Coproduct c = coproduct(a, b);
  EXPECT_EQ(c.object, GSet(3, 1));
  const GMap folded = fold(a, 3);
  EXPECT_EQ(folded.source(), GSet(3, 3));
  for (Point p = 0; p < folded.source().size(); ++p) {
    EXPECT_LT(folded(p), a.size());
  }
}

}  // namespace
}  // namespace tambara
