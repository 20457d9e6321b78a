#include "tambara/free_maps.hpp"

namespace tambara {

namespace {

// U = (i + j)·C2 over the free orbit V = C2: the first i orbits map to the
// generator orbit of S identically, the remaining j through γ.
Bispan transfer_bispan(const GSet& source, unsigned i, unsigned j, bool to_point,
                       IndexingSystem indexing) {
  const GSet upper(0, i + j);
  const GSet lower = GSet::free_orbit();
  std::vector<Point> f;
  std::vector<Point> g;
  for (unsigned o = 0; o < i + j; ++o) {
    for (unsigned s = 0; s < 2; ++s) {
      if (source.fixed_count() == 1) {
        f.push_back(0);
      } else {
        f.push_back(source.free_point(0, o < i ? s : 1 - s));
      }
      g.push_back(lower.free_point(0, s));
    }
  }
  GMap h = to_point ? GMap::quotient() : GMap::identity(lower);
  return Bispan(GMap(upper, source, std::move(f)), GMap(upper, lower, std::move(g)),
                std::move(h), indexing);
}

// U = a·* ⊔ b·C2, everything over the single point of V = T = *.
Bispan product_bispan(const GSet& source, unsigned a, unsigned b, IndexingSystem indexing) {
  const GSet upper(a, b);
  std::vector<Point> f;
  for (unsigned p = 0; p < a; ++p) {
    f.push_back(0);
  }
  for (unsigned o = 0; o < b; ++o) {
    for (unsigned s = 0; s < 2; ++s) {
      f.push_back(source.fixed_count() == 1 ? 0 : source.free_point(0, s));
    }
  }
  const GSet point = GSet::point();
  return Bispan(GMap(upper, source, std::move(f)),
                GMap(upper, point, std::vector<Point>(upper.size(), 0)), GMap::identity(point),
                indexing);
}

void require_single(const Monomial& m, const char* what) {
  if (m.size() != 1) {
    throw InputError(std::string("basis_to_bispan: ") + what + " must have one generator");
  }
}

}  // namespace

Bispan basis_to_bispan(const GreenFixedKey& key) {
  const GSet source = GSet::point();
  return key.transfer ? transfer_bispan(source, key.degree, 0, true, IndexingSystem::trivial)
                      : product_bispan(source, key.degree, 0, IndexingSystem::trivial);
}

Bispan basis_to_bispan(const GreenUnderlyingKey& key) {
  const GSet source = GSet::free_orbit();
  if (!key.transfer) {
    return product_bispan(source, 0, 0, IndexingSystem::trivial);
  }
  return transfer_bispan(source, key.i, key.j, true, IndexingSystem::trivial);
}

Bispan basis_to_bispan(const TambaraFixedKey& key) {
  require_single(key.x, "x");
  require_single(key.n, "n");
  const GSet source = GSet::point();
  if (key.transfer) {
    return transfer_bispan(source, key.x[0] + 2 * key.n[0], 0, true, IndexingSystem::complete);
  }
  return product_bispan(source, key.x[0], key.n[0], IndexingSystem::complete);
}

Bispan basis_to_bispan(const TambaraUnderlyingKey& key) {
  require_single(key.n, "n");
  const GSet source = GSet::free_orbit();
  if (!key.transfer) {
    return product_bispan(source, 0, key.n[0], IndexingSystem::complete);
  }
  if (key.d.size() != 1 || key.d[0] < 0) {
    throw InputError("basis_to_bispan: malformed transfer key");
  }
  const auto a = key.n[0];
  return transfer_bispan(source, a + static_cast<unsigned>(key.d[0]), a, true,
                         IndexingSystem::complete);
}

Bispan underlying_basis_to_bispan(GeneratorLevel generator, const Monomial& m,
                                  IndexingSystem indexing) {
  if (generator == GeneratorLevel::fixed) {
    require_single(m, "monomial");
    return transfer_bispan(GSet::point(), m[0], 0, false, indexing);
  }
  if (m.size() != 2) {
    throw InputError("basis_to_bispan: monomial must have one generator");
  }
  return transfer_bispan(GSet::free_orbit(), m[0], m[1], false, indexing);
}

std::string_view to_string(ComapKind kind) {
  switch (kind) {
    case ComapKind::coR:
      return "coR";
    case ComapKind::coN:
      return "coN";
    case ComapKind::coT:
      return "coT";
    case ComapKind::coAddUnderlying:
      return "coAdd-underlying";
    case ComapKind::coAddFixed:
      return "coAdd-fixed";
  }
  return "";
}

ComapKind parse_comap_kind(std::string_view name) {
  for (auto kind : {ComapKind::coR, ComapKind::coN, ComapKind::coT, ComapKind::coAddUnderlying,
                    ComapKind::coAddFixed}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw InputError("unknown co-map '" + std::string(name) + "'");
}

GeneratorImages<FreeTambaraFixed> comap_coR() {
  FreeTambaraFixed target;
  auto x = target.underlying().variable(0);
  auto n = target.norm_generator();
  return {std::move(target), std::move(x), std::move(n)};
}

GeneratorImages<FreeTambaraUnderlying> comap_coN() {
  FreeTambaraUnderlying target;
  auto x = target.norm_generator();
  auto n = target.fixed().mul(x, x);
  return {std::move(target), std::move(x), std::move(n)};
}

GeneratorImages<FreeTambaraUnderlying> comap_coT() {
  FreeTambaraUnderlying target;
  auto x = target.t_i(1);
  auto n = target.fixed().add(target.fixed().add(target.norm_generator(), target.norm_generator()),
                              target.t_i(2));
  return {std::move(target), std::move(x), std::move(n)};
}

GeneratorImages<FreeTambaraUnderlying> comap_coAddUnderlying() {
  FreeTambaraUnderlying target({"y", "z"});
  const auto& ru = target.underlying();
  auto x = ru.add(ru.variable(0), ru.variable(1));
  auto n = target.fixed().add(
      target.fixed().add(target.norm_generator(0), target.norm_generator(1)),
      target.tr(ru.mul(ru.variable(0), ru.conjugate_variable(1))));
  return {std::move(target), std::move(x), std::move(n)};
}

GeneratorImages<FreeTambaraFixed> comap_coAddFixed() {
  FreeTambaraFixed target({"y", "z"});
  const auto& rf = target.fixed();
  auto x = rf.add(target.generator(0), target.generator(1));
  auto n = rf.add(rf.add(target.norm_generator(0), target.norm_generator(1)),
                  rf.mul(target.t(), rf.mul(target.generator(0), target.generator(1))));
  return {std::move(target), std::move(x), std::move(n)};
}

namespace {

template <class Target>
ComapTable table(std::string source, std::string target, const GeneratorImages<Target>& images) {
  ComapTable out{std::move(source), std::move(target), {}};
  const auto& g = images.target;
  const std::string x = std::visit(
      [&](const auto& value) {
        if constexpr (std::is_same_v<std::decay_t<decltype(value)>, FixedOf<Target>>) {
          return g.fixed().format(value);
        } else {
          return g.underlying().format(value);
        }
      },
      images.x);
  out.images = {{"x", x}, {"n", g.fixed().format(images.n)}};
  return out;
}

}  // namespace

ComapTable comap_images(ComapKind kind) {
  switch (kind) {
    case ComapKind::coR:
      return table("FT(x at C2/e)", "FT(x at C2/C2)", comap_coR());
    case ComapKind::coN:
      return table("FT(x at C2/C2)", "FT(x at C2/e)", comap_coN());
    case ComapKind::coT:
      return table("FT(x at C2/C2)", "FT(x at C2/e)", comap_coT());
    case ComapKind::coAddUnderlying:
      return table("FT(x at C2/e)", "FT(y, z at C2/e)", comap_coAddUnderlying());
    case ComapKind::coAddFixed:
      return table("FT(x at C2/C2)", "FT(y, z at C2/C2)", comap_coAddFixed());
  }
  throw InputError("unknown co-map");
}

}  // namespace tambara
