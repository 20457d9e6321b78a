#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tambara/functor.hpp"

namespace tambara {

struct TableElement {
  std::uint32_t index = 0;

  auto operator<=>(const TableElement&) const = default;
};

// A finite ring given by element names and full operation tables. Only the
// shape of the tables is validated here; the ring laws are the business of
// the axiom checker.
class TableRing {
 public:
  using Element = TableElement;
  using Table = std::vector<std::vector<TableElement>>;

  TableRing() = default;
  TableRing(std::vector<std::string> names, Table add, Table mul, TableElement zero,
            TableElement one);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(TableElement e) const { return names_.at(e.index); }
  std::optional<TableElement> find(std::string_view name) const;
  std::vector<TableElement> elements() const;
  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }

  Element zero() const { return zero_; }
  Element one() const { return one_; }
  Element add(Element a, Element b) const { return add_[a.index][b.index]; }
  // Falls back to zero for elements with no additive inverse; the axiom
  // checker reports those as failures of the inverse law.
  Element neg(Element a) const { return neg_[a.index]; }
  Element mul(Element a, Element b) const { return mul_[a.index][b.index]; }
  bool equal(Element a, Element b) const { return a == b; }
  std::string format(Element a) const { return name(a); }

 private:
  std::vector<std::string> names_;
  Table add_;
  Table mul_;
  std::vector<TableElement> neg_;
  TableElement zero_;
  TableElement one_;
};

// A table-backed Green functor, optionally carrying a norm table.
class FiniteFunctor {
 public:
  using FixedRing = TableRing;
  using UnderlyingRing = TableRing;
  using Map = std::vector<TableElement>;

  FiniteFunctor() = default;
  FiniteFunctor(TableRing fixed, TableRing underlying, Map conj, Map res, Map tr,
                std::optional<Map> norm = std::nullopt);

  const TableRing& fixed() const { return fixed_; }
  const TableRing& underlying() const { return underlying_; }

  TableElement conj(TableElement u) const { return conj_[u.index]; }
  TableElement res(TableElement a) const { return res_[a.index]; }
  TableElement tr(TableElement u) const { return tr_[u.index]; }
  TableElement norm(TableElement u) const;  // throws CapabilityError
  bool has_norm() const noexcept { return norm_.has_value(); }

  std::vector<TableElement> fixed_elements() const { return fixed_.elements(); }
  std::vector<TableElement> underlying_elements() const { return underlying_.elements(); }

  const Map& conj_map() const noexcept { return conj_; }
  const Map& res_map() const noexcept { return res_; }
  const Map& tr_map() const noexcept { return tr_; }
  const std::optional<Map>& norm_map() const noexcept { return norm_; }

  // The underlying Green functor.
  FiniteFunctor without_norm() const;

 private:
  TableRing fixed_;
  TableRing underlying_;
  Map conj_;
  Map res_;
  Map tr_;
  std::optional<Map> norm_;
};

// Z/n with elements named "0" .. "n-1".
TableRing integers_mod(unsigned n);
// Componentwise product, elements named "(a,b)".
TableRing product_ring(const TableRing& left, const TableRing& right);

// Both levels of the Burnside functor reduced mod n. Fixed elements are named
// like "1+2t", underlying ones "0" .. "n-1". The norm is computed on the
// representative in [0, n); it satisfies the norm-of-sum law only for odd n.
FiniteFunctor burnside_mod(unsigned n);

// Fixed-point functor of a finite commutative ring B with involution σ:
// fixed level = σ-invariants, res = inclusion, tr(b) = b + σb, N(b) = b·σb.
// Throws InputError when σ is not an involutive ring endomorphism.
FiniteFunctor fixed_point_functor(const TableRing& ring, const std::vector<TableElement>& sigma);

// One element at each level.
FiniteFunctor zero_functor();

namespace detail {

template <Ring R>
TableElement index_in(const R& ring, const std::vector<typename R::Element>& elements,
                      const typename R::Element& e) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (ring.equal(elements[i], e)) {
      return TableElement{static_cast<std::uint32_t>(i)};
    }
  }
  throw InputError("tabulate: operation leaves the enumerated carrier");
}

template <Ring R>
TableRing tabulate_ring(const R& ring, const std::vector<typename R::Element>& elements) {
  const std::size_t n = elements.size();
  std::vector<std::string> names;
  TableRing::Table add(n, std::vector<TableElement>(n));
  TableRing::Table mul(n, std::vector<TableElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(ring.format(elements[i]));
    for (std::size_t j = 0; j < n; ++j) {
      add[i][j] = index_in(ring, elements, ring.add(elements[i], elements[j]));
      mul[i][j] = index_in(ring, elements, ring.mul(elements[i], elements[j]));
    }
  }
  return {std::move(names), std::move(add), std::move(mul),
          index_in(ring, elements, ring.zero()), index_in(ring, elements, ring.one())};
}

}  // namespace detail

// Copies an enumerable functor into tables, naming elements by format().
template <EnumerableFunctor F>
FiniteFunctor tabulate(const F& f) {
  const std::vector<FixedOf<F>> fixed_elements = f.fixed_elements();
  const std::vector<UnderlyingOf<F>> underlying_elements = f.underlying_elements();
  auto fixed_index = [&](const FixedOf<F>& a) {
    return detail::index_in(f.fixed(), fixed_elements, a);
  };
  auto underlying_index = [&](const UnderlyingOf<F>& u) {
    return detail::index_in(f.underlying(), underlying_elements, u);
  };

  FiniteFunctor::Map conj;
  FiniteFunctor::Map res;
  FiniteFunctor::Map tr;
  std::optional<FiniteFunctor::Map> norm;
  for (const auto& u : underlying_elements) {
    conj.push_back(underlying_index(f.conj(u)));
    tr.push_back(fixed_index(f.tr(u)));
  }
  for (const auto& a : fixed_elements) {
    res.push_back(underlying_index(f.res(a)));
  }
  if constexpr (TambaraFunctor<F>) {
    if (has_norm(f)) {
      norm.emplace();
      for (const auto& u : underlying_elements) {
        norm->push_back(fixed_index(f.norm(u)));
      }
    }
  }
  return {detail::tabulate_ring(f.fixed(), fixed_elements),
          detail::tabulate_ring(f.underlying(), underlying_elements),
          std::move(conj), std::move(res), std::move(tr), std::move(norm)};
}

}  // namespace tambara
