#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgl/cayley.hpp"

namespace hgl {

/// An isomorphism between two indexed groups, as an image table.
struct Isomorphism {
  CayleyPtr source;
  CayleyPtr target;
  std::vector<ElementIndex> image;

  Permutation map(const Permutation& p) const { return target->element(image[source->index_of(p)]); }

  /// Exhaustive check of bijectivity and the homomorphism law.
  bool verify() const;

  Isomorphism compose(const Isomorphism& after) const;
  Isomorphism inverse() const;
};

/// Greedy generating set: elements of largest order first, each one
/// added only if it is outside the subgroup generated so far.
std::vector<ElementIndex> small_generating_set(const CayleyGroup& g);

/// Throws CapExceeded if |G| = |H| exceeds cap; nullopt when the orders
/// differ or no isomorphism exists.
std::optional<Isomorphism> are_isomorphic(const PermGroup& g, const PermGroup& h, std::uint64_t cap = 10'000);
std::optional<Isomorphism> find_isomorphism(const CayleyPtr& g, const CayleyPtr& h);

/// True if `a` (a permutation of element indices) respects the table.
bool is_automorphism(const CayleyGroup& g, const Permutation& a);

/// Aut(G) as a permutation group on the |G| element indices.
PermGroup automorphism_group(const CayleyGroup& g, std::uint64_t cap = 2000);
PermGroup automorphism_group(const PermGroup& g, std::uint64_t cap = 2000);

}  // namespace hgl
