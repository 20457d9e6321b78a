#include "tambara/adjunction.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

namespace tambara {

namespace {

using Map = FiniteFunctor::Map;

// Elements reachable from zero by repeatedly adding generators.
std::vector<bool> span(const TableRing& a, const std::vector<TableElement>& generators) {
  std::vector<bool> reached(a.size(), false);
  std::deque<TableElement> queue{a.zero()};
  reached[a.zero().index] = true;
  while (!queue.empty()) {
    const TableElement e = queue.front();
    queue.pop_front();
    for (const auto g : generators) {
      const TableElement f = a.add(e, g);
      if (!reached[f.index]) {
        reached[f.index] = true;
        queue.push_back(f);
      }
    }
  }
  return reached;
}

std::optional<std::vector<TableElement>> additive_generators(const TableRing& a) {
  std::vector<TableElement> generators;
  std::vector<bool> reached = span(a, generators);
  for (const auto e : a.elements()) {
    if (!reached[e.index]) {
      generators.push_back(e);
      reached = span(a, generators);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    return std::nullopt;
  }
  return generators;
}

// The additive extension of generator images, or nullopt on a conflict.
std::optional<Map> extend(const TableRing& a, const TableRing& b,
                          const std::vector<TableElement>& generators, const Map& images) {
  std::vector<std::optional<TableElement>> out(a.size());
  std::deque<TableElement> queue{a.zero()};
  out[a.zero().index] = b.zero();
  while (!queue.empty()) {
    const TableElement e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const TableElement f = a.add(e, generators[i]);
      const TableElement value = b.add(*out[e.index], images[i]);
      if (!out[f.index]) {
        out[f.index] = value;
        queue.push_back(f);
      } else if (*out[f.index] != value) {
        return std::nullopt;
      }
    }
  }
  Map result;
  for (const auto& v : out) {
    result.push_back(*v);
  }
  return result;
}

bool is_ring_hom(const TableRing& a, const TableRing& b, const Map& h) {
  if (h[a.one().index] != b.one() || h[a.zero().index] != b.zero()) {
    return false;
  }
  for (const auto x : a.elements()) {
    for (const auto y : a.elements()) {
      if (h[a.add(x, y).index] != b.add(h[x.index], h[y.index]) ||
          h[a.mul(x, y).index] != b.mul(h[x.index], h[y.index])) {
        return false;
      }
    }
  }
  return true;
}

// Calls visit on every vector in {0..base-1}^length, odometer order.
template <class Visit>
void for_each_word(std::size_t base, std::size_t length, std::size_t budget, Visit&& visit) {
  double count = 1;
  for (std::size_t i = 0; i < length; ++i) {
    count *= static_cast<double>(base);
  }
  if (count > static_cast<double>(budget)) {
    throw ResourceLimitError("hom enumeration needs " + std::to_string(count) +
                             " candidates, budget is " + std::to_string(budget));
  }
  if (base == 0 && length > 0) {
    return;
  }
  Map word(length, TableElement{0});
  while (true) {
    visit(word);
    std::size_t i = 0;
    while (i < length && word[i].index + 1 == base) {
      word[i].index = 0;
      ++i;
    }
    if (i == length) {
      return;
    }
    ++word[i].index;
  }
}

bool commutes(const FiniteFunctor& s, const FiniteFunctor& r, const TableHom& h, bool norms) {
  for (const auto u : s.underlying_elements()) {
    const TableElement hu = h.underlying[u.index];
    if (h.underlying[s.conj(u).index] != r.conj(hu) || h.fixed[s.tr(u).index] != r.tr(hu)) {
      return false;
    }
    if (norms && h.fixed[s.norm(u).index] != r.norm(hu)) {
      return false;
    }
  }
  for (const auto a : s.fixed_elements()) {
    if (h.underlying[s.res(a).index] != r.res(h.fixed[a.index])) {
      return false;
    }
  }
  return true;
}

std::vector<TableHom> functor_homs(const FiniteFunctor& s, const FiniteFunctor& r, bool norms) {
  if (norms && (!s.has_norm() || !r.has_norm())) {
    throw CapabilityError("Tambara homs need norms on both sides");
  }
  const auto fixed = ring_homs(s.fixed(), r.fixed());
  const auto underlying = ring_homs(s.underlying(), r.underlying());
  std::vector<TableHom> out;
  for (const auto& f : fixed) {
    for (const auto& u : underlying) {
      TableHom h{f, u};
      if (commutes(s, r, h, norms)) {
        out.push_back(std::move(h));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_hom(const FiniteFunctor& s, const FiniteFunctor& r, const TableHom& h) {
  std::string out = "{fixed: ";
  for (const auto a : s.fixed_elements()) {
    out += (a.index ? ", " : "") + s.fixed().name(a) + " -> " + r.fixed().name(h.fixed[a.index]);
  }
  out += "; underlying: ";
  for (const auto u : s.underlying_elements()) {
    out += (u.index ? ", " : "") + s.underlying().name(u) + " -> " +
           r.underlying().name(h.underlying[u.index]);
  }
  return out + "}";
}

using Adjoint = RightAdjoint<FiniteFunctor>;

FunctorHom<FiniteFunctor, FiniteFunctor> as_functor_hom(const TableHom& h) {
  return {[h](const TableElement& a) { return h.fixed[a.index]; },
          [h](const TableElement& u) { return h.underlying[u.index]; }};
}

}  // namespace

std::vector<Map> ring_homs(const TableRing& a, const TableRing& b, std::size_t budget) {
  std::vector<Map> out;
  if (const auto generators = additive_generators(a)) {
    for_each_word(b.size(), generators->size(), budget, [&](const Map& images) {
      if (auto h = extend(a, b, *generators, images); h && is_ring_hom(a, b, *h)) {
        out.push_back(std::move(*h));
      }
    });
  } else {
    for_each_word(b.size(), a.size(), budget, [&](const Map& h) {
      if (is_ring_hom(a, b, h)) {
        out.push_back(h);
      }
    });
  }
  return out;
}

std::vector<TableHom> green_homs(const FiniteFunctor& s, const FiniteFunctor& r) {
  return functor_homs(s, r, false);
}

std::vector<TableHom> tambara_homs(const FiniteFunctor& s, const FiniteFunctor& r) {
  return functor_homs(s, r, true);
}

bool is_green_hom(const FiniteFunctor& s, const FiniteFunctor& r, const TableHom& h) {
  return is_ring_hom(s.fixed(), r.fixed(), h.fixed) &&
         is_ring_hom(s.underlying(), r.underlying(), h.underlying) && commutes(s, r, h, false);
}

bool is_tambara_hom(const FiniteFunctor& s, const FiniteFunctor& r, const TableHom& h) {
  return s.has_norm() && r.has_norm() && is_green_hom(s, r, h) && commutes(s, r, h, true);
}

FiniteFunctor tabulate_right_adjoint(const FiniteFunctor& r) {
  return tabulate(Adjoint(r, false));
}

AdjunctionResult verify_adjunction(const FiniteFunctor& s, const FiniteFunctor& r) {
  if (!s.has_norm()) {
    throw CapabilityError("verify_adjunction: S needs a norm table");
  }
  const Adjoint adjoint(r);
  const auto adjoint_fixed = adjoint.fixed_elements();
  const auto adjoint_underlying = adjoint.underlying_elements();
  const FiniteFunctor fr = tabulate(adjoint);

  AdjunctionResult result;
  Report& report = result.report;
  const auto green = green_homs(s, r);
  const auto tambara = tambara_homs(s, fr);
  result.green_hom_count = green.size();
  result.tambara_hom_count = tambara.size();

  // Pairs outside F(R) index to nullopt.
  auto fixed_index = [&](const Adjoint::Fixed& p) -> std::optional<TableElement> {
    for (std::size_t i = 0; i < adjoint_fixed.size(); ++i) {
      if (adjoint.fixed().equal(adjoint_fixed[i], p)) {
        return TableElement{static_cast<std::uint32_t>(i)};
      }
    }
    return std::nullopt;
  };
  auto underlying_index = [&](const Adjoint::Underlying& p) -> std::optional<TableElement> {
    for (std::size_t i = 0; i < adjoint_underlying.size(); ++i) {
      if (adjoint.underlying().equal(adjoint_underlying[i], p)) {
        return TableElement{static_cast<std::uint32_t>(i)};
      }
    }
    return std::nullopt;
  };
  auto transpose_table = [&](const TableHom& phi) -> std::optional<TableHom> {
    const auto psi = transpose(s, as_functor_hom(phi));
    TableHom out;
    for (const auto a : s.fixed_elements()) {
      const auto index = fixed_index(psi.fixed(a));
      if (!index) {
        return std::nullopt;
      }
      out.fixed.push_back(*index);
    }
    for (const auto u : s.underlying_elements()) {
      const auto index = underlying_index(psi.underlying(u));
      if (!index) {
        return std::nullopt;
      }
      out.underlying.push_back(*index);
    }
    return out;
  };
  auto untranspose_table = [&](const TableHom& psi) {
    const FunctorHom<FiniteFunctor, Adjoint> as_pairs{
        [&](const TableElement& a) { return adjoint_fixed[psi.fixed[a.index].index]; },
        [&](const TableElement& u) { return adjoint_underlying[psi.underlying[u.index].index]; }};
    const auto phi = untranspose<FiniteFunctor, FiniteFunctor>(as_pairs);
    TableHom out;
    for (const auto a : s.fixed_elements()) {
      out.fixed.push_back(phi.fixed(a));
    }
    for (const auto u : s.underlying_elements()) {
      out.underlying.push_back(phi.underlying(u));
    }
    return out;
  };
  auto contains = [](const std::vector<TableHom>& homs, const TableHom& h) {
    return std::binary_search(homs.begin(), homs.end(), h);
  };

  report.declare("bijection.transpose_is_tambara_hom");
  report.declare("bijection.untranspose_transpose");
  for (const auto& phi : green) {
    const auto psi = transpose_table(phi);
    auto witness = [&] { return "phi = " + format_hom(s, r, phi); };
    report.record("bijection.transpose_is_tambara_hom", psi && contains(tambara, *psi), witness);
    report.record("bijection.untranspose_transpose", psi && untranspose_table(*psi) == phi,
                  witness);
  }
  report.declare("bijection.untranspose_is_green_hom");
  report.declare("bijection.transpose_untranspose");
  for (const auto& psi : tambara) {
    const auto phi = untranspose_table(psi);
    auto witness = [&] { return "psi = " + format_hom(s, fr, psi); };
    report.record("bijection.untranspose_is_green_hom", contains(green, phi), witness);
    const auto back = transpose_table(phi);
    report.record("bijection.transpose_untranspose", back && *back == psi, witness);
  }
  report.record("bijection.cardinality", green.size() == tambara.size(), [&] {
    return "|Green(iS, R)| = " + std::to_string(green.size()) +
           ", |Tambara(S, F(R))| = " + std::to_string(tambara.size());
  });

  // The unit S -> F(iS) and the counit iF(R) -> R are structure maps.
  const Adjoint fs(s);
  const FiniteFunctor fs_table = tabulate(fs);
  const auto fs_fixed = fs.fixed_elements();
  const auto fs_underlying = fs.underlying_elements();
  TableHom unit_table;
  bool unit_lands = true;
  for (const auto a : s.fixed_elements()) {
    const auto p = unit_fixed(s, a);
    const auto it = std::find(fs_fixed.begin(), fs_fixed.end(), p);
    unit_lands = unit_lands && it != fs_fixed.end();
    unit_table.fixed.push_back(TableElement{static_cast<std::uint32_t>(it - fs_fixed.begin())});
  }
  for (const auto u : s.underlying_elements()) {
    const auto p = unit_underlying(s, u);
    const auto it = std::find(fs_underlying.begin(), fs_underlying.end(), p);
    unit_lands = unit_lands && it != fs_underlying.end();
    unit_table.underlying.push_back(
        TableElement{static_cast<std::uint32_t>(it - fs_underlying.begin())});
  }
  report.record("unit.tambara_hom", unit_lands && is_tambara_hom(s, fs_table, unit_table),
                [] { return std::string("unit S -> F(iS)"); });
  TableHom counit_table;
  for (const auto& p : adjoint_fixed) {
    counit_table.fixed.push_back(adjoint.counit_fixed(p));
  }
  for (const auto& p : adjoint_underlying) {
    counit_table.underlying.push_back(adjoint.counit_underlying(p));
  }
  report.record("counit.green_hom", is_green_hom(fr, r, counit_table),
                [] { return std::string("counit iF(R) -> R"); });

  // counit_{iS} ∘ i(unit_S) = id on S.
  for (const auto a : s.fixed_elements()) {
    report.record("triangle.unit_counit", fs.counit_fixed(unit_fixed(s, a)) == a,
                  [&] { return "fixed " + s.fixed().name(a); });
  }
  for (const auto u : s.underlying_elements()) {
    report.record("triangle.unit_counit", fs.counit_underlying(unit_underlying(s, u)) == u,
                  [&] { return "underlying " + s.underlying().name(u); });
  }
  // F(counit_R) ∘ unit_{F(R)} = id on F(R).
  for (std::size_t i = 0; i < adjoint_fixed.size(); ++i) {
    const auto eta = unit_fixed(fr, TableElement{static_cast<std::uint32_t>(i)});
    const Adjoint::Fixed image{adjoint.counit_fixed(adjoint_fixed[eta.n.index]),
                               adjoint.counit_fixed(adjoint_fixed[eta.x.index])};
    report.record("triangle.counit_unit", adjoint.fixed().equal(image, adjoint_fixed[i]),
                  [&] { return "fixed " + fr.fixed().name(TableElement{static_cast<std::uint32_t>(i)}); });
  }
  for (std::size_t i = 0; i < adjoint_underlying.size(); ++i) {
    const auto eta = unit_underlying(fr, TableElement{static_cast<std::uint32_t>(i)});
    const Adjoint::Underlying image{adjoint.counit_fixed(adjoint_fixed[eta.n.index]),
                                    adjoint.counit_underlying(adjoint_underlying[eta.x.index])};
    report.record("triangle.counit_unit", adjoint.underlying().equal(image, adjoint_underlying[i]),
                  [&] {
                    return "underlying " +
                           fr.underlying().name(TableElement{static_cast<std::uint32_t>(i)});
                  });
  }
  return result;
}

}  // namespace tambara
