#pragma once

#include <string>
#include <vector>

#include "tambara/bispan.hpp"
#include "tambara/functor.hpp"

namespace tambara {

// A value of a functor on a finite C2-set S: one fixed-level element per fixed
// point and one underlying element per free orbit. The stored element sits on
// sheet 0; the point on sheet 1 carries its conjugate.
template <GreenFunctor F>
struct ElementTuple {
  std::vector<FixedOf<F>> fixed;
  std::vector<UnderlyingOf<F>> free;
};

namespace detail {

// Value of the tuple at a single point, with the conjugate on sheet 1.
template <GreenFunctor F>
UnderlyingOf<F> underlying_at(const F& f, const GSet& s, const ElementTuple<F>& values, Point p) {
  const auto& u = values.free[s.orbit_index(p)];
  return s.sheet(p) == 0 ? u : f.conj(u);
}

}  // namespace detail

// Pulls back along f, multiplies (and norms) along g, adds (and transfers)
// along h. Throws InputError when the tuple does not match P.source(), and
// CapabilityError when P uses the complete indexing system but F has no norm.
template <GreenFunctor F>
ElementTuple<F> evaluate(const Bispan& p, const F& f, const ElementTuple<F>& input) {
  const GSet& s = p.source();
  const GSet& u = p.upper();
  const GSet& v = p.lower();
  const GSet& t = p.target();
  if (input.fixed.size() != s.fixed_count() || input.free.size() != s.free_orbit_count()) {
    throw InputError("evaluate: input tuple does not match " + s.to_string());
  }
  if (p.indexing() == IndexingSystem::complete && !has_norm(f)) {
    throw CapabilityError("evaluate: bispans with norms need a Tambara functor");
  }
  const auto& rf = f.fixed();
  const auto& ru = f.underlying();

  // R_f
  ElementTuple<F> upper;
  for (std::size_t i = 0; i < u.fixed_count(); ++i) {
    upper.fixed.push_back(input.fixed[p.restriction()(u.fixed_point(i))]);
  }
  for (std::size_t j = 0; j < u.free_orbit_count(); ++j) {
    const Point image = p.restriction()(u.free_point(j, 0));
    upper.free.push_back(s.is_fixed(image) ? f.res(input.fixed[image])
                                           : detail::underlying_at(f, s, input, image));
  }

  // N_g
  ElementTuple<F> lower;
  lower.fixed.assign(v.fixed_count(), rf.one());
  lower.free.assign(v.free_orbit_count(), ru.one());
  for (std::size_t i = 0; i < u.fixed_count(); ++i) {
    auto& slot = lower.fixed[p.exponent()(u.fixed_point(i))];
    slot = rf.mul(slot, upper.fixed[i]);
  }
  for (std::size_t j = 0; j < u.free_orbit_count(); ++j) {
    const Point image = p.exponent()(u.free_point(j, 0));
    if (v.is_fixed(image)) {
      auto& slot = lower.fixed[image];
      slot = rf.mul(slot, checked_norm(f, upper.free[j]));
    } else {
      // The orbit meets the fiber of sheet 0 of its image orbit in one point.
      const Point in_fiber = v.sheet(image) == 0 ? u.free_point(j, 0) : u.free_point(j, 1);
      auto& slot = lower.free[v.orbit_index(image)];
      slot = ru.mul(slot, detail::underlying_at(f, u, upper, in_fiber));
    }
  }

  // T_h
  ElementTuple<F> output;
  output.fixed.assign(t.fixed_count(), rf.zero());
  output.free.assign(t.free_orbit_count(), ru.zero());
  for (std::size_t i = 0; i < v.fixed_count(); ++i) {
    auto& slot = output.fixed[p.transfer()(v.fixed_point(i))];
    slot = rf.add(slot, lower.fixed[i]);
  }
  for (std::size_t j = 0; j < v.free_orbit_count(); ++j) {
    const Point image = p.transfer()(v.free_point(j, 0));
    if (t.is_fixed(image)) {
      auto& slot = output.fixed[image];
      slot = rf.add(slot, f.tr(lower.free[j]));
    } else {
      const Point in_fiber = t.sheet(image) == 0 ? v.free_point(j, 0) : v.free_point(j, 1);
      auto& slot = output.free[t.orbit_index(image)];
      slot = ru.add(slot, detail::underlying_at(f, v, lower, in_fiber));
    }
  }
  return output;
}

template <GreenFunctor F>
bool tuples_equal(const F& f, const ElementTuple<F>& a, const ElementTuple<F>& b) {
  if (a.fixed.size() != b.fixed.size() || a.free.size() != b.free.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.fixed.size(); ++i) {
    if (!f.fixed().equal(a.fixed[i], b.fixed[i])) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.free.size(); ++i) {
    if (!f.underlying().equal(a.free[i], b.free[i])) {
      return false;
    }
  }
  return true;
}

template <GreenFunctor F>
std::string format_tuple(const F& f, const ElementTuple<F>& a) {
  std::string out = "{fixed: [";
  for (std::size_t i = 0; i < a.fixed.size(); ++i) {
    out += (i ? ", " : "") + f.fixed().format(a.fixed[i]);
  }
  out += "], free: [";
  for (std::size_t i = 0; i < a.free.size(); ++i) {
    out += (i ? ", " : "") + f.underlying().format(a.free[i]);
  }
  return out + "]}";
}

}  // namespace tambara
