#pragma once

// Finite C2-sets and equivariant maps, stored at point level.
//
// A GSet with a fixed points and b free orbits has points 0 .. a+2b-1. Points
// 0 .. a-1 are the fixed points f0 .. f(a-1); free orbit j occupies points
// a+2j (sheet 0) and a+2j+1 (sheet 1), and the generator swaps the sheets.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tambara {

using Point = std::size_t;

inline constexpr Point no_point = std::numeric_limits<Point>::max();

class GSet {
 public:
  GSet() = default;
  GSet(std::size_t fixed_count, std::size_t free_orbit_count)
      : fixed_count_(fixed_count), free_orbit_count_(free_orbit_count) {}

  static GSet empty() { return {}; }
  static GSet point() { return {1, 0}; }        // C2/C2
  static GSet free_orbit() { return {0, 1}; }   // C2/e

  std::size_t fixed_count() const noexcept { return fixed_count_; }
  std::size_t free_orbit_count() const noexcept { return free_orbit_count_; }
  std::size_t size() const noexcept { return fixed_count_ + 2 * free_orbit_count_; }
  std::size_t orbit_count() const noexcept { return fixed_count_ + free_orbit_count_; }

  bool is_fixed(Point p) const noexcept { return p < fixed_count_; }
  Point act(Point p) const noexcept {
    return is_fixed(p) ? p : (((p - fixed_count_) ^ 1U) + fixed_count_);
  }

  Point fixed_point(std::size_t i) const noexcept { return i; }
  Point free_point(std::size_t orbit, unsigned sheet) const noexcept {
    return fixed_count_ + 2 * orbit + sheet;
  }
  std::size_t orbit_index(Point p) const noexcept { return (p - fixed_count_) / 2; }
  unsigned sheet(Point p) const noexcept {
    return static_cast<unsigned>((p - fixed_count_) % 2);
  }
  // Smallest point of the orbit containing p.
  Point orbit_representative(Point p) const noexcept { return std::min(p, act(p)); }

  std::string point_name(Point p) const;
  Point parse_point(std::string_view name) const;  // throws InputError
  std::string to_string() const;

  friend bool operator==(const GSet&, const GSet&) = default;

 private:
  std::size_t fixed_count_ = 0;
  std::size_t free_orbit_count_ = 0;
};

// An equivariant map, validated on construction.
class GMap {
 public:
  GMap() = default;
  GMap(GSet source, GSet target, std::vector<Point> images);

  static GMap identity(const GSet& s);
  // The unique map out of the empty set.
  static GMap from_empty(const GSet& target);
  // C2 -> *.
  static GMap quotient();
  // The automorphism of C2 swapping its two points.
  static GMap gamma();

  const GSet& source() const noexcept { return source_; }
  const GSet& target() const noexcept { return target_; }
  const std::vector<Point>& images() const noexcept { return images_; }
  Point operator()(Point p) const { return images_.at(p); }

  bool is_isomorphism() const;
  std::vector<Point> preimage(Point t) const;

  friend bool operator==(const GMap&, const GMap&) = default;

 private:
  GSet source_;
  GSet target_;
  std::vector<Point> images_;
};

// outer ∘ inner
GMap compose(const GMap& outer, const GMap& inner);

enum class IndexingSystem { trivial, complete };

std::string_view to_string(IndexingSystem system);
IndexingSystem parse_indexing_system(std::string_view name);  // throws InputError

// Trivial membership: no free point maps to a fixed point.
bool is_member(const GMap& f, IndexingSystem system);

// Relabels an abstract involution on {0..n-1} into canonical GSet form.
// Fixed points keep their relative order; each free orbit is numbered by its
// smaller element, which lands on sheet 0.
struct Relabeling {
  GSet set;
  std::vector<Point> canonical;  // raw index -> canonical point
};
Relabeling relabel(std::span<const std::size_t> involution);

struct Pullback {
  GSet object;
  GMap first;   // to f.source()
  GMap second;  // to g.source()
};
// {(s, s') : f(s) = g(s')} with the diagonal action.
Pullback pullback(const GMap& f, const GMap& g);

struct Coproduct {
  GSet object;
  GMap left;
  GMap right;
};
// Fixed points of the left summand come first, then the right; likewise for
// the free orbits.
Coproduct coproduct(const GSet& left, const GSet& right);

// Codiagonal from `copies` disjoint copies of s onto s.
GMap fold(const GSet& s, std::size_t copies);

// Coproduct of two maps, as a map between the coproducts.
GMap coproduct_map(const GMap& left, const GMap& right);

inline constexpr std::size_t default_section_limit = std::size_t{1} << 20;

struct DependentProduct {
  GSet object;
  GMap projection;  // Π_g A -> T
  // sections[π][s] = σ_π(s) for s in the fiber over projection(π), no_point
  // elsewhere.
  std::vector<std::vector<Point>> sections;
};
// Π_g A for h: A -> S and g: S -> T, enumerated section by section.
DependentProduct dependent_product(const GMap& h, const GMap& g,
                                   std::size_t limit = default_section_limit);

//   S <--h-- A <--evaluation-- S ×_T Π_g A
//   |g                             |projection
//   T <--------structure--------- Π_g A
struct ExponentialDiagram {
  GMap evaluation;  // f'
  GMap projection;  // g'
  GMap structure;   // h'
};
ExponentialDiagram exponential_diagram(const GMap& g, const GMap& h,
                                       std::size_t limit = default_section_limit);

}  // namespace tambara
