#include "tambara/finite_functor.hpp"

#include <set>

namespace tambara {

namespace {

void check_map(const FiniteFunctor::Map& map, std::size_t domain, std::size_t codomain,
               std::string_view what) {
  if (map.size() != domain) {
    throw InputError(std::string(what) + " has " + std::to_string(map.size()) +
                     " entries, expected " + std::to_string(domain));
  }
  for (TableElement e : map) {
    if (e.index >= codomain) {
      throw InputError(std::string(what) + " maps outside its codomain");
    }
  }
}

TableElement element(std::size_t i) { return TableElement{static_cast<std::uint32_t>(i)}; }

}  // namespace

TableRing::TableRing(std::vector<std::string> names, Table add, Table mul, TableElement zero,
                     TableElement one)
    : names_(std::move(names)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
  const std::size_t n = names_.size();
  if (n == 0) {
    throw InputError("ring has no elements");
  }
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) {
      throw InputError("duplicate element name '" + name + "'");
    }
  }
  for (const Table* table : {&add_, &mul_}) {
    if (table->size() != n) {
      throw InputError("operation table has " + std::to_string(table->size()) +
                       " rows, expected " + std::to_string(n));
    }
    for (const auto& row : *table) {
      if (row.size() != n) {
        throw InputError("operation table row has the wrong length");
      }
      for (TableElement e : row) {
        if (e.index >= n) {
          throw InputError("operation table entry out of range");
        }
      }
    }
  }
  if (zero_.index >= n || one_.index >= n) {
    throw InputError("zero or one out of range");
  }
  neg_.assign(n, zero_);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add_[a][b] == zero_) {
        neg_[a] = element(b);
        break;
      }
    }
  }
}

std::optional<TableElement> TableRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return element(i);
    }
  }
  return std::nullopt;
}

std::vector<TableElement> TableRing::elements() const {
  std::vector<TableElement> out;
  out.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out.push_back(element(i));
  }
  return out;
}

FiniteFunctor::FiniteFunctor(TableRing fixed, TableRing underlying, Map conj, Map res, Map tr,
                             std::optional<Map> norm)
    : fixed_(std::move(fixed)),
      underlying_(std::move(underlying)),
      conj_(std::move(conj)),
      res_(std::move(res)),
      tr_(std::move(tr)),
      norm_(std::move(norm)) {
  check_map(conj_, underlying_.size(), underlying_.size(), "conj");
  check_map(res_, fixed_.size(), underlying_.size(), "res");
  check_map(tr_, underlying_.size(), fixed_.size(), "tr");
  if (norm_) {
    check_map(*norm_, underlying_.size(), fixed_.size(), "norm");
  }
}

TableElement FiniteFunctor::norm(TableElement u) const {
  if (!norm_) {
    throw CapabilityError("functor has no norm table");
  }
  return (*norm_)[u.index];
}

FiniteFunctor FiniteFunctor::without_norm() const {
  return {fixed_, underlying_, conj_, res_, tr_, std::nullopt};
}

TableRing integers_mod(unsigned n) {
  if (n < 1) {
    throw InputError("integers_mod: modulus must be positive");
  }
  std::vector<std::string> names;
  TableRing::Table add(n, std::vector<TableElement>(n));
  TableRing::Table mul(n, std::vector<TableElement>(n));
  for (unsigned a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (unsigned b = 0; b < n; ++b) {
      add[a][b] = element((a + b) % n);
      mul[a][b] = element((a * b) % n);
    }
  }
  return {std::move(names), std::move(add), std::move(mul), element(0), element(1 % n)};
}

TableRing product_ring(const TableRing& left, const TableRing& right) {
  const std::size_t m = right.size();
  const std::size_t n = left.size() * m;
  auto pack = [m](TableElement a, TableElement b) { return element(a.index * m + b.index); };
  std::vector<std::string> names;
  TableRing::Table add(n, std::vector<TableElement>(n));
  TableRing::Table mul(n, std::vector<TableElement>(n));
  for (TableElement a : left.elements()) {
    for (TableElement b : right.elements()) {
      names.push_back("(" + left.name(a) + "," + right.name(b) + ")");
      for (TableElement c : left.elements()) {
        for (TableElement d : right.elements()) {
          add[pack(a, b).index][pack(c, d).index] = pack(left.add(a, c), right.add(b, d));
          mul[pack(a, b).index][pack(c, d).index] = pack(left.mul(a, c), right.mul(b, d));
        }
      }
    }
  }
  return {std::move(names), std::move(add), std::move(mul), pack(left.zero(), right.zero()),
          pack(left.one(), right.one())};
}

namespace {

std::string burnside_name(unsigned units, unsigned orbits) {
  if (orbits == 0) {
    return std::to_string(units);
  }
  std::string t = orbits == 1 ? "t" : std::to_string(orbits) + "t";
  return units == 0 ? t : std::to_string(units) + "+" + t;
}

}  // namespace

FiniteFunctor burnside_mod(unsigned n) {
  if (n < 2) {
    throw InputError("burnside_mod: modulus must be at least 2");
  }
  // fixed element a + b·t sits at index a + n·b
  auto fixed_index = [n](unsigned a, unsigned b) { return element((a % n) + n * (b % n)); };
  const unsigned size = n * n;
  std::vector<std::string> names(size);
  TableRing::Table add(size, std::vector<TableElement>(size));
  TableRing::Table mul(size, std::vector<TableElement>(size));
  for (unsigned b1 = 0; b1 < n; ++b1) {
    for (unsigned a1 = 0; a1 < n; ++a1) {
      const auto i = fixed_index(a1, b1).index;
      names[i] = burnside_name(a1, b1);
      for (unsigned b2 = 0; b2 < n; ++b2) {
        for (unsigned a2 = 0; a2 < n; ++a2) {
          const auto j = fixed_index(a2, b2).index;
          add[i][j] = fixed_index(a1 + a2, b1 + b2);
          mul[i][j] = fixed_index(a1 * a2, a1 * b2 + b1 * a2 + 2 * b1 * b2);
        }
      }
    }
  }
  TableRing fixed(std::move(names), std::move(add), std::move(mul), fixed_index(0, 0),
                  fixed_index(1, 0));
  TableRing underlying = integers_mod(n);

  FiniteFunctor::Map conj(n);
  FiniteFunctor::Map tr(n);
  FiniteFunctor::Map norm(n);
  FiniteFunctor::Map res(size);
  for (unsigned m = 0; m < n; ++m) {
    conj[m] = element(m);
    tr[m] = fixed_index(0, m);
    norm[m] = fixed_index(m, m == 0 ? 0 : (m * (m - 1) / 2) % n);
  }
  for (unsigned b = 0; b < n; ++b) {
    for (unsigned a = 0; a < n; ++a) {
      res[fixed_index(a, b).index] = element((a + 2 * b) % n);
    }
  }
  return {std::move(fixed), std::move(underlying), std::move(conj), std::move(res),
          std::move(tr), std::move(norm)};
}

FiniteFunctor fixed_point_functor(const TableRing& ring, const std::vector<TableElement>& sigma) {
  const std::size_t n = ring.size();
  if (sigma.size() != n) {
    throw InputError("involution must assign an image to every ring element");
  }
  for (TableElement a : ring.elements()) {
    if (sigma[a.index].index >= n || sigma[sigma[a.index].index] != a) {
      throw InputError("sigma is not an involution");
    }
    for (TableElement b : ring.elements()) {
      if (sigma[ring.add(a, b).index] != ring.add(sigma[a.index], sigma[b.index]) ||
          sigma[ring.mul(a, b).index] != ring.mul(sigma[a.index], sigma[b.index])) {
        throw InputError("sigma is not a ring homomorphism");
      }
    }
  }
  if (sigma[ring.one().index] != ring.one()) {
    throw InputError("sigma is not unital");
  }

  std::vector<TableElement> invariants;
  std::vector<std::uint32_t> position(n, UINT32_MAX);
  for (TableElement a : ring.elements()) {
    if (sigma[a.index] == a) {
      position[a.index] = static_cast<std::uint32_t>(invariants.size());
      invariants.push_back(a);
    }
  }
  auto restrict = [&](TableElement a) { return element(position[a.index]); };
  const std::size_t k = invariants.size();
  std::vector<std::string> names;
  TableRing::Table add(k, std::vector<TableElement>(k));
  TableRing::Table mul(k, std::vector<TableElement>(k));
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(ring.name(invariants[i]));
    for (std::size_t j = 0; j < k; ++j) {
      add[i][j] = restrict(ring.add(invariants[i], invariants[j]));
      mul[i][j] = restrict(ring.mul(invariants[i], invariants[j]));
    }
  }
  TableRing fixed(std::move(names), std::move(add), std::move(mul), restrict(ring.zero()),
                  restrict(ring.one()));

  FiniteFunctor::Map res(invariants);
  FiniteFunctor::Map tr(n);
  FiniteFunctor::Map norm(n);
  for (TableElement b : ring.elements()) {
    tr[b.index] = restrict(ring.add(b, sigma[b.index]));
    norm[b.index] = restrict(ring.mul(b, sigma[b.index]));
  }
  return {std::move(fixed), ring, sigma, std::move(res), std::move(tr), std::move(norm)};
}

FiniteFunctor zero_functor() {
  auto ring = [] {
    return TableRing({"0"}, {{TableElement{0}}}, {{TableElement{0}}}, TableElement{0},
                     TableElement{0});
  };
  FiniteFunctor::Map one_point{TableElement{0}};
  return {ring(), ring(), one_point, one_point, one_point, one_point};
}

}  // namespace tambara
