#include "tambara/gset.hpp"

#include <charconv>
#include <map>
#include <numeric>

#include "tambara/errors.hpp"

namespace tambara {

namespace {

std::size_t parse_index(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InputError("bad point name '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::string GSet::point_name(Point p) const {
  if (is_fixed(p)) {
    return "f" + std::to_string(p);
  }
  return "o" + std::to_string(orbit_index(p)) + "." + std::to_string(sheet(p));
}

Point GSet::parse_point(std::string_view name) const {
  if (name.size() >= 2 && name.front() == 'f') {
    const auto i = parse_index(name.substr(1), name);
    if (i >= fixed_count_) {
      throw InputError("fixed point '" + std::string(name) + "' out of range");
    }
    return fixed_point(i);
  }
  if (name.size() >= 4 && name.front() == 'o') {
    const auto dot = name.find('.');
    if (dot == std::string_view::npos) {
      throw InputError("bad point name '" + std::string(name) + "'");
    }
    const auto j = parse_index(name.substr(1, dot - 1), name);
    const auto e = parse_index(name.substr(dot + 1), name);
    if (j >= free_orbit_count_ || e > 1) {
      throw InputError("free point '" + std::string(name) + "' out of range");
    }
    return free_point(j, static_cast<unsigned>(e));
  }
  throw InputError("bad point name '" + std::string(name) + "'");
}

std::string GSet::to_string() const {
  return "{fixed: " + std::to_string(fixed_count_) +
         ", free: " + std::to_string(free_orbit_count_) + "}";
}

GMap::GMap(GSet source, GSet target, std::vector<Point> images)
    : source_(source), target_(target), images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw InputError("map assigns " + std::to_string(images_.size()) +
                     " images to a set of " + std::to_string(source_.size()) +
                     " points");
  }
  for (Point p = 0; p < images_.size(); ++p) {
    if (images_[p] >= target_.size()) {
      throw InputError("image of " + source_.point_name(p) + " out of range");
    }
    if (images_[source_.act(p)] != target_.act(images_[p])) {
      throw InputError("map is not equivariant at " + source_.point_name(p));
    }
  }
}

GMap GMap::identity(const GSet& s) {
  std::vector<Point> images(s.size());
  std::iota(images.begin(), images.end(), Point{0});
  return {s, s, std::move(images)};
}

GMap GMap::from_empty(const GSet& target) { return {GSet::empty(), target, {}}; }

GMap GMap::quotient() { return {GSet::free_orbit(), GSet::point(), {0, 0}}; }

GMap GMap::gamma() { return {GSet::free_orbit(), GSet::free_orbit(), {1, 0}}; }

bool GMap::is_isomorphism() const {
  if (source_ != target_) {
    return false;
  }
  std::vector<bool> hit(target_.size(), false);
  for (Point image : images_) {
    if (hit[image]) {
      return false;
    }
    hit[image] = true;
  }
  return true;
}

std::vector<Point> GMap::preimage(Point t) const {
  std::vector<Point> out;
  for (Point p = 0; p < images_.size(); ++p) {
    if (images_[p] == t) {
      out.push_back(p);
    }
  }
  return out;
}

GMap compose(const GMap& outer, const GMap& inner) {
  if (inner.target() != outer.source()) {
    throw InputError("cannot compose maps: " + inner.target().to_string() +
                     " vs " + outer.source().to_string());
  }
  std::vector<Point> images(inner.source().size());
  for (Point p = 0; p < images.size(); ++p) {
    images[p] = outer(inner(p));
  }
  return {inner.source(), outer.target(), std::move(images)};
}

std::string_view to_string(IndexingSystem system) {
  return system == IndexingSystem::trivial ? "trivial" : "complete";
}

IndexingSystem parse_indexing_system(std::string_view name) {
  if (name == "trivial") {
    return IndexingSystem::trivial;
  }
  if (name == "complete") {
    return IndexingSystem::complete;
  }
  throw InputError("unknown indexing system '" + std::string(name) + "'");
}

bool is_member(const GMap& f, IndexingSystem system) {
  if (system == IndexingSystem::complete) {
    return true;
  }
  for (Point p = 0; p < f.source().size(); ++p) {
    if (!f.source().is_fixed(p) && f.target().is_fixed(f(p))) {
      return false;
    }
  }
  return true;
}

Relabeling relabel(std::span<const std::size_t> involution) {
  const std::size_t n = involution.size();
  std::size_t fixed = 0;
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = involution[i];
    if (j >= n || involution[j] != i) {
      throw InputError("relabel: not an involution");
    }
    if (j == i) {
      ++fixed;
    } else if (i < j) {
      ++orbits;
    }
  }
  Relabeling out{GSet(fixed, orbits), std::vector<Point>(n, no_point)};
  std::size_t next_fixed = 0;
  std::size_t next_orbit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = involution[i];
    if (j == i) {
      out.canonical[i] = out.set.fixed_point(next_fixed++);
    } else if (i < j) {
      out.canonical[i] = out.set.free_point(next_orbit, 0);
      out.canonical[j] = out.set.free_point(next_orbit, 1);
      ++next_orbit;
    }
  }
  return out;
}

Pullback pullback(const GMap& f, const GMap& g) {
  if (f.target() != g.target()) {
    throw InputError("pullback: maps have different targets " +
                     f.target().to_string() + " and " + g.target().to_string());
  }
  const GSet& s = f.source();
  const GSet& s2 = g.source();
  std::vector<std::size_t> raw_index(s.size() * s2.size(), no_point);
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 0; a < s.size(); ++a) {
    for (Point b = 0; b < s2.size(); ++b) {
      if (f(a) == g(b)) {
        raw_index[a * s2.size() + b] = pairs.size();
        pairs.emplace_back(a, b);
      }
    }
  }
  std::vector<std::size_t> involution(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    involution[i] = raw_index[s.act(a) * s2.size() + s2.act(b)];
  }
  const Relabeling r = relabel(involution);
  std::vector<Point> first(pairs.size());
  std::vector<Point> second(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    first[r.canonical[i]] = pairs[i].first;
    second[r.canonical[i]] = pairs[i].second;
  }
  return {r.set, GMap(r.set, s, std::move(first)), GMap(r.set, s2, std::move(second))};
}

namespace {

Point inject(const GSet& piece, const GSet& whole, std::size_t fixed_offset,
             std::size_t orbit_offset, Point p) {
  if (piece.is_fixed(p)) {
    return whole.fixed_point(fixed_offset + p);
  }
  return whole.free_point(orbit_offset + piece.orbit_index(p), piece.sheet(p));
}

}  // namespace

Coproduct coproduct(const GSet& left, const GSet& right) {
  const GSet whole(left.fixed_count() + right.fixed_count(),
                   left.free_orbit_count() + right.free_orbit_count());
  std::vector<Point> l(left.size());
  std::vector<Point> r(right.size());
  for (Point p = 0; p < left.size(); ++p) {
    l[p] = inject(left, whole, 0, 0, p);
  }
  for (Point p = 0; p < right.size(); ++p) {
    r[p] = inject(right, whole, left.fixed_count(), left.free_orbit_count(), p);
  }
  return {whole, GMap(left, whole, std::move(l)), GMap(right, whole, std::move(r))};
}

GMap fold(const GSet& s, std::size_t copies) {
  const GSet source(s.fixed_count() * copies, s.free_orbit_count() * copies);
  std::vector<Point> images(source.size());
  for (std::size_t c = 0; c < copies; ++c) {
    for (Point p = 0; p < s.size(); ++p) {
      images[inject(s, source, c * s.fixed_count(), c * s.free_orbit_count(), p)] = p;
    }
  }
  return {source, s, std::move(images)};
}

GMap coproduct_map(const GMap& left, const GMap& right) {
  const Coproduct src = coproduct(left.source(), right.source());
  const Coproduct dst = coproduct(left.target(), right.target());
  std::vector<Point> images(src.object.size());
  for (Point p = 0; p < left.source().size(); ++p) {
    images[src.left(p)] = dst.left(left(p));
  }
  for (Point p = 0; p < right.source().size(); ++p) {
    images[src.right(p)] = dst.right(right(p));
  }
  return {src.object, dst.object, std::move(images)};
}

DependentProduct dependent_product(const GMap& h, const GMap& g, std::size_t limit) {
  if (h.target() != g.source()) {
    throw InputError("dependent product: h lands in " + h.target().to_string() +
                     " but g starts at " + g.source().to_string());
  }
  const GSet& a_set = h.source();
  const GSet& s_set = g.source();
  const GSet& t_set = g.target();

  std::vector<std::vector<Point>> choices(s_set.size());
  std::vector<std::size_t> choice_position(a_set.size());
  for (Point a = 0; a < a_set.size(); ++a) {
    auto& list = choices[h(a)];
    choice_position[a] = list.size();
    list.push_back(a);
  }

  std::vector<std::vector<Point>> fibers(t_set.size());
  for (Point s = 0; s < s_set.size(); ++s) {
    fibers[g(s)].push_back(s);
  }

  // Sections over t are numbered in mixed radix, first fiber point least
  // significant.
  std::vector<std::size_t> offset(t_set.size() + 1, 0);
  for (Point t = 0; t < t_set.size(); ++t) {
    std::size_t count = 1;
    for (Point s : fibers[t]) {
      const std::size_t radix = choices[s].size();
      if (radix != 0 && count > limit / radix) {
        throw ResourceLimitError("dependent product exceeds " + std::to_string(limit) +
                                 " sections");
      }
      count *= radix;
    }
    offset[t + 1] = offset[t] + count;
    if (offset[t + 1] > limit) {
      throw ResourceLimitError("dependent product exceeds " + std::to_string(limit) +
                               " sections");
    }
  }
  const std::size_t total = offset.back();

  auto encode = [&](Point t, const std::vector<Point>& section) {
    std::size_t code = 0;
    std::size_t weight = 1;
    for (Point s : fibers[t]) {
      code += weight * choice_position[section[s]];
      weight *= choices[s].size();
    }
    return offset[t] + code;
  };

  std::vector<Point> raw_base(total);
  std::vector<std::vector<Point>> raw_sections(total);
  for (Point t = 0; t < t_set.size(); ++t) {
    for (std::size_t code = 0; code < offset[t + 1] - offset[t]; ++code) {
      std::vector<Point> section(s_set.size(), no_point);
      std::size_t rest = code;
      for (Point s : fibers[t]) {
        const std::size_t radix = choices[s].size();
        section[s] = choices[s][rest % radix];
        rest /= radix;
      }
      raw_base[offset[t] + code] = t;
      raw_sections[offset[t] + code] = std::move(section);
    }
  }

  std::vector<std::size_t> involution(total);
  for (std::size_t i = 0; i < total; ++i) {
    const Point t = raw_base[i];
    const Point t2 = t_set.act(t);
    std::vector<Point> moved(s_set.size(), no_point);
    for (Point s2 : fibers[t2]) {
      moved[s2] = a_set.act(raw_sections[i][s_set.act(s2)]);
    }
    involution[i] = encode(t2, moved);
  }

  const Relabeling r = relabel(involution);
  std::vector<Point> projection(total);
  std::vector<std::vector<Point>> sections(total);
  for (std::size_t i = 0; i < total; ++i) {
    projection[r.canonical[i]] = raw_base[i];
    sections[r.canonical[i]] = std::move(raw_sections[i]);
  }
  return {r.set, GMap(r.set, t_set, std::move(projection)), std::move(sections)};
}

ExponentialDiagram exponential_diagram(const GMap& g, const GMap& h, std::size_t limit) {
  DependentProduct pi = dependent_product(h, g, limit);
  Pullback e = pullback(g, pi.projection);
  std::vector<Point> evaluation(e.object.size());
  for (Point p = 0; p < e.object.size(); ++p) {
    evaluation[p] = pi.sections[e.second(p)][e.first(p)];
  }
  return {GMap(e.object, h.source(), std::move(evaluation)), e.second, pi.projection};
}

}  // namespace tambara
