#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tambara/polynomial.hpp"

namespace tambara::detail {

// Sorts (degree, key, coefficient, text) rows by descending degree, keys
// without a transfer first, then by descending key, and renders them.
template <class Key, class Degree, class Render>
std::string format_sorted(const LinearCombination<Key>& a, Degree degree, Render render) {
  std::vector<std::pair<const Key*, const Integer*>> rows;
  for (const auto& [key, coefficient] : a) {
    rows.emplace_back(&key, &coefficient);
  }
  std::sort(rows.begin(), rows.end(), [&](const auto& l, const auto& r) {
    const unsigned dl = degree(*l.first);
    const unsigned dr = degree(*r.first);
    if (dl != dr) {
      return dl > dr;
    }
    if (l.first->transfer != r.first->transfer) {
      return !l.first->transfer;
    }
    return *r.first < *l.first;
  });
  std::vector<std::pair<Integer, std::string>> terms;
  for (const auto& [key, coefficient] : rows) {
    terms.emplace_back(*coefficient, render(*key));
  }
  return format_terms(terms);
}

}  // namespace tambara::detail
