#include "tambara/bispan.hpp"

#include <algorithm>
#include <compare>
#include <sstream>

#include "tambara/errors.hpp"

namespace tambara {

namespace {

// Isomorphism invariant of one orbit of V together with its g-fiber.
struct BlockKey {
  bool free = false;
  Point transfer_image = 0;
  std::vector<Point> fixed_fiber;  // f-images of fixed points of U
  std::vector<Point> free_fiber;   // f-image of the distinguished point of each free U-orbit

  auto operator<=>(const BlockKey&) const = default;
};

std::string map_string(const GMap& m) {
  std::ostringstream out;
  out << "{";
  for (Point p = 0; p < m.source().size(); ++p) {
    out << (p ? ", " : "") << m.source().point_name(p) << "->" << m.target().point_name(m(p));
  }
  out << "}";
  return out.str();
}

}  // namespace

Bispan::Bispan(GMap restriction, GMap exponent, GMap transfer, IndexingSystem indexing)
    : restriction_(std::move(restriction)),
      exponent_(std::move(exponent)),
      transfer_(std::move(transfer)),
      indexing_(indexing) {
  if (restriction_.source() != exponent_.source()) {
    throw InputError("bispan: f and g have different sources");
  }
  if (exponent_.target() != transfer_.source()) {
    throw InputError("bispan: g does not land in the source of h");
  }
  if (!is_member(exponent_, indexing_)) {
    throw IndexingError("bispan: middle map is not in the " +
                        std::string(tambara::to_string(indexing_)) + " indexing system");
  }
  canonicalize();
}

void Bispan::canonicalize() {
  const GSet& s = source();
  const GSet& u = upper();
  const GSet& v = lower();
  const GSet& t = target();
  const GMap& f = restriction_;
  const GMap& g = exponent_;
  const GMap& h = transfer_;

  std::vector<BlockKey> blocks;
  std::vector<std::size_t> block_of(v.size());
  for (std::size_t i = 0; i < v.fixed_count(); ++i) {
    block_of[v.fixed_point(i)] = blocks.size();
    blocks.push_back({false, h(v.fixed_point(i)), {}, {}});
  }
  for (std::size_t j = 0; j < v.free_orbit_count(); ++j) {
    block_of[v.free_point(j, 0)] = blocks.size();
    block_of[v.free_point(j, 1)] = blocks.size();
    blocks.push_back({true, h(v.free_point(j, 0)), {}, {}});
  }
  // Swapped orientation of each free block, filled alongside.
  std::vector<BlockKey> swapped = blocks;
  for (std::size_t j = 0; j < v.free_orbit_count(); ++j) {
    auto& key = swapped[v.fixed_count() + j];
    key.transfer_image = t.act(key.transfer_image);
  }

  for (Point p = 0; p < u.size(); ++p) {
    const Point image = g(p);
    auto& key = blocks[block_of[image]];
    if (u.is_fixed(p)) {
      key.fixed_fiber.push_back(f(p));
    } else if (v.is_fixed(image)) {
      if (u.sheet(p) == 0) {
        key.free_fiber.push_back(s.orbit_representative(f(p)));
      }
    } else if (v.sheet(image) == 0) {
      key.free_fiber.push_back(f(p));
      swapped[block_of[image]].free_fiber.push_back(s.act(f(p)));
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::sort(blocks[b].fixed_fiber.begin(), blocks[b].fixed_fiber.end());
    std::sort(blocks[b].free_fiber.begin(), blocks[b].free_fiber.end());
    if (blocks[b].free) {
      std::sort(swapped[b].free_fiber.begin(), swapped[b].free_fiber.end());
      if (swapped[b] < blocks[b]) {
        blocks[b] = std::move(swapped[b]);
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());

  std::size_t fixed_u = 0;
  std::size_t free_u = 0;
  for (const auto& key : blocks) {
    fixed_u += key.fixed_fiber.size();
    free_u += key.free_fiber.size();
  }
  const GSet new_u(fixed_u, free_u);
  const GSet new_v(v.fixed_count(), v.free_orbit_count());
  std::vector<Point> new_f(new_u.size());
  std::vector<Point> new_g(new_u.size());
  std::vector<Point> new_h(new_v.size());

  std::size_t next_fixed = 0;
  std::size_t next_orbit = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& key = blocks[b];
    const bool free_block = key.free;
    const Point base = free_block ? new_v.free_point(b - v.fixed_count(), 0)
                                  : new_v.fixed_point(b);
    new_h[base] = key.transfer_image;
    if (free_block) {
      new_h[new_v.act(base)] = t.act(key.transfer_image);
    }
    for (Point image : key.fixed_fiber) {
      const Point p = new_u.fixed_point(next_fixed++);
      new_f[p] = image;
      new_g[p] = base;
    }
    for (Point image : key.free_fiber) {
      const Point p0 = new_u.free_point(next_orbit, 0);
      const Point p1 = new_u.free_point(next_orbit, 1);
      ++next_orbit;
      new_f[p0] = image;
      new_f[p1] = s.act(image);
      new_g[p0] = base;
      new_g[p1] = new_v.act(base);
    }
  }

  restriction_ = GMap(new_u, s, std::move(new_f));
  exponent_ = GMap(new_u, new_v, std::move(new_g));
  transfer_ = GMap(new_v, t, std::move(new_h));
}

std::string Bispan::to_string() const {
  std::ostringstream out;
  out << "[" << source().to_string() << " <-" << map_string(restriction_) << "- "
      << upper().to_string() << " -" << map_string(exponent_) << "-> "
      << lower().to_string() << " -" << map_string(transfer_) << "-> "
      << target().to_string() << "; " << tambara::to_string(indexing_) << "]";
  return out.str();
}

Bispan make_R(const GMap& f, IndexingSystem indexing) {
  const GMap id = GMap::identity(f.source());
  return {f, id, id, indexing};
}

Bispan make_N(const GMap& f, IndexingSystem indexing) {
  if (!is_member(f, indexing)) {
    throw IndexingError("N_f: map is not in the " + std::string(to_string(indexing)) +
                        " indexing system");
  }
  return {GMap::identity(f.source()), f, GMap::identity(f.target()), indexing};
}

Bispan make_T(const GMap& f, IndexingSystem indexing) {
  const GMap id = GMap::identity(f.source());
  return {id, id, f, indexing};
}

Bispan identity_bispan(const GSet& s, IndexingSystem indexing) {
  const GMap id = GMap::identity(s);
  return {id, id, id, indexing};
}

Bispan compose(const Bispan& q, const Bispan& p, std::size_t section_limit) {
  if (p.target() != q.source()) {
    throw InputError("compose: " + p.target().to_string() + " is not " +
                     q.source().to_string());
  }
  if (p.indexing() != q.indexing()) {
    throw InputError("compose: bispans use different indexing systems");
  }
  // q∘p = T_h2 N_g2 R_f2 T_h1 N_g1 R_f1.
  // R_f2 T_h1 = T_{b} R_{a} for the pullback (a, b) of h1 against f2.
  const Pullback first = pullback(p.transfer(), q.restriction());
  // R_a N_g1 = N_{d} R_{c} for the pullback (c, d) of g1 against a.
  const Pullback second = pullback(p.exponent(), first.first);
  // N_g2 T_b = T_structure N_projection R_evaluation.
  const ExponentialDiagram exp = exponential_diagram(q.exponent(), first.second, section_limit);
  // R_evaluation N_d = N_{k} R_{l} for the pullback (l, k) of d against evaluation.
  const Pullback third = pullback(second.second, exp.evaluation);

  GMap restriction = compose(p.restriction(), compose(second.first, third.first));
  GMap exponent = compose(exp.projection, third.second);
  GMap transfer = compose(q.transfer(), exp.structure);
  return {std::move(restriction), std::move(exponent), std::move(transfer), p.indexing()};
}

Bispan product(const Bispan& p, const Bispan& q) {
  if (p.indexing() != q.indexing()) {
    throw InputError("product: bispans use different indexing systems");
  }
  return {coproduct_map(p.restriction(), q.restriction()),
          coproduct_map(p.exponent(), q.exponent()),
          coproduct_map(p.transfer(), q.transfer()), p.indexing()};
}

void FormalSum::add(const Bispan& p, long long coefficient) {
  if (p.source() != source_ || p.target() != target_) {
    throw InputError("formal sum: bispan has the wrong source or target");
  }
  if (coefficient == 0) {
    return;
  }
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& term) { return term.bispan == p; });
  if (it == terms_.end()) {
    terms_.push_back({p, coefficient});
    return;
  }
  it->coefficient += coefficient;
  if (it->coefficient == 0) {
    terms_.erase(it);
  }
}

}  // namespace tambara
