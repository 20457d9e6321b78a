#pragma once

#include <string>
#include <vector>

#include "tambara/gset.hpp"

namespace tambara {

// An isomorphism class of diagrams S <-f- U -g-> V -h-> T with g in the
// indexing system.
//
// Instances are kept in canonical form: V is sorted orbit by orbit (fixed
// orbits first) by a key recording h of the orbit and the f-images of its
// g-fiber, and U is laid out block by block in the same order. The key is a
// complete invariant of the diagram up to isomorphism, so two bispans are
// isomorphic exactly when their canonical forms coincide.
class Bispan {
 public:
  Bispan(GMap restriction, GMap exponent, GMap transfer, IndexingSystem indexing);

  const GSet& source() const noexcept { return restriction_.target(); }
  const GSet& target() const noexcept { return transfer_.target(); }
  const GSet& upper() const noexcept { return restriction_.source(); }  // U
  const GSet& lower() const noexcept { return transfer_.source(); }     // V

  const GMap& restriction() const noexcept { return restriction_; }  // f
  const GMap& exponent() const noexcept { return exponent_; }        // g
  const GMap& transfer() const noexcept { return transfer_; }        // h
  IndexingSystem indexing() const noexcept { return indexing_; }

  std::string to_string() const;

  friend bool operator==(const Bispan&, const Bispan&) = default;

 private:
  void canonicalize();

  GMap restriction_;
  GMap exponent_;
  GMap transfer_;
  IndexingSystem indexing_;
};

// R_f = [T <-f- S = S = S], N_f = [S = S -f-> T = T], T_f = [S = S = S -f-> T].
Bispan make_R(const GMap& f, IndexingSystem indexing = IndexingSystem::complete);
Bispan make_N(const GMap& f, IndexingSystem indexing);  // throws IndexingError
Bispan make_T(const GMap& f, IndexingSystem indexing = IndexingSystem::complete);
Bispan identity_bispan(const GSet& s, IndexingSystem indexing = IndexingSystem::complete);

inline bool equals(const Bispan& p, const Bispan& q) { return p == q; }

// q ∘ p. Both factors are rewritten into T∘N∘R form and the middle is
// straightened with the pullback and exponential-diagram relations.
Bispan compose(const Bispan& q, const Bispan& p,
               std::size_t section_limit = default_section_limit);

// Componentwise disjoint union; the categorical product of the polynomial
// category.
Bispan product(const Bispan& p, const Bispan& q);

// A formal integer combination of bispans sharing source and target, used to
// group-complete hom monoids.
class FormalSum {
 public:
  struct Term {
    Bispan bispan;
    long long coefficient;
  };

  FormalSum(GSet source, GSet target) : source_(source), target_(target) {}

  void add(const Bispan& p, long long coefficient);
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const GSet& source() const noexcept { return source_; }
  const GSet& target() const noexcept { return target_; }

 private:
  GSet source_;
  GSet target_;
  std::vector<Term> terms_;
};

}  // namespace tambara
