#pragma once

// Brute-force hom-sets between table functors and the adjunction check for
// the right adjoint F.

#include <compare>
#include <cstddef>
#include <vector>

#include "tambara/finite_functor.hpp"
#include "tambara/report.hpp"
#include "tambara/right_adjoint.hpp"

namespace tambara {

// A level-wise map between table functors, as image indices.
struct TableHom {
  FiniteFunctor::Map fixed;
  FiniteFunctor::Map underlying;

  auto operator<=>(const TableHom&) const = default;
};

// Unital ring maps a -> b. Images of additive generators are enumerated and
// extended along the additive group; when the table is not a group the search
// falls back to all functions, throwing ResourceLimitError past `budget`
// candidates.
std::vector<FiniteFunctor::Map> ring_homs(const TableRing& a, const TableRing& b,
                                          std::size_t budget = 10'000'000);

// Maps that are unital ring maps at both levels and commute with conj, res
// and tr; Tambara homs also commute with N (both sides need norms).
std::vector<TableHom> green_homs(const FiniteFunctor& s, const FiniteFunctor& r);
std::vector<TableHom> tambara_homs(const FiniteFunctor& s, const FiniteFunctor& r);

bool is_green_hom(const FiniteFunctor& s, const FiniteFunctor& r, const TableHom& h);
bool is_tambara_hom(const FiniteFunctor& s, const FiniteFunctor& r, const TableHom& h);

struct AdjunctionResult {
  Report report;
  std::size_t green_hom_count = 0;    // |Green(iS, R)|
  std::size_t tambara_hom_count = 0;  // |Tambara(S, F(R))|
};

// Enumerates Green(iS, R) and Tambara(S, F(R)), checks that transpose and
// untranspose land in them and are mutually inverse, and checks both triangle
// identities on every element of S and of F(R).
AdjunctionResult verify_adjunction(const FiniteFunctor& s, const FiniteFunctor& r);

// F(R) copied into tables, elements named "(n, x)".
FiniteFunctor tabulate_right_adjoint(const FiniteFunctor& r);

}  // namespace tambara
