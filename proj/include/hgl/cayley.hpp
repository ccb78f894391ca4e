#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hgl/perm.hpp"

namespace hgl {

/// A finite group whose elements are indexed 0..n-1, identity first.
///
/// Indexing is a breadth-first search from the identity that right-multiplies
/// by the source generators in sorted order, so it only depends on the
/// generating set. A dense multiplication table is kept for small groups;
/// larger groups multiply the underlying permutations and look the result up.
class CayleyGroup {
 public:
  static constexpr std::size_t kDenseTableLimit = 2048;

  /// Throws CapExceeded when |G| > cap.
  static std::shared_ptr<const CayleyGroup> index_group(const PermGroup& g, std::uint64_t cap = 100'000);

  std::size_t order() const { return elems_.size(); }
  const PermGroup& source() const { return source_; }

  const Permutation& element(ElementIndex i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }

  /// Index of a permutation of the source group; throws DomainError if absent.
  ElementIndex index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_.count(p) > 0; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + b];
    return index_of(elems_[a] * elems_[b]);
  }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  std::uint64_t elem_order(ElementIndex a) const { return orders_[a]; }
  /// g x g^-1.
  ElementIndex conj(ElementIndex g, ElementIndex x) const { return mul(mul(g, x), inverse_[g]); }

  bool has_table() const { return !table_.empty(); }

  /// Indices of the sorted source generators used for the indexing.
  const std::vector<ElementIndex>& generators() const { return gens_; }

  /// elem[i] = elem[parent[i]] * generator k, for i > 0.
  ElementIndex bfs_parent(ElementIndex i) const { return parent_[i]; }
  std::size_t bfs_generator(ElementIndex i) const { return parent_gen_[i]; }

 private:
  CayleyGroup() = default;

  PermGroup source_ = PermGroup::trivial(1);
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<ElementIndex> gens_;
  std::vector<ElementIndex> parent_;
  std::vector<std::size_t> parent_gen_;
};

using CayleyPtr = std::shared_ptr<const CayleyGroup>;

/// Free-function form of CayleyGroup::index_group.
CayleyPtr index_group(const PermGroup& g, std::uint64_t cap = 100'000);

/// Conjugacy class sizes indexed by element.
std::vector<std::uint64_t> class_sizes(const CayleyGroup& g);

/// Subgroup generated by a set of element indices, as a membership mask.
std::vector<bool> subgroup_mask(const CayleyGroup& g, const std::vector<ElementIndex>& gens);

}  // namespace hgl
