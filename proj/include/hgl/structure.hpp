#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgl/perm.hpp"

namespace hgl {

/// One composition factor: its order and a family tag ("cyclic",
/// "alternating", "PSL2", ...) with a display name such as "C2" or "A5".
struct CompositionFactor {
  std::uint64_t order = 1;
  std::string family;
  std::string name;

  friend auto operator<=>(const CompositionFactor&, const CompositionFactor&) = default;
};

struct StructureReport {
  BigInt order;
  bool is_abelian = false;
  bool is_soluble = false;
  bool is_nilpotent = false;
  std::vector<BigInt> derived_series_orders;
  std::vector<BigInt> lower_central_series_orders;
  /// Sorted by (order, family, name); empty when not requested.
  std::vector<CompositionFactor> composition_factors;
  /// Subgroups N_0 = G > N_1 > ... > 1 realising the factors above.
  std::vector<PermGroup> composition_series;
};

struct StructureOptions {
  std::uint64_t series_cap = 1'000'000;
  std::uint64_t composition_cap = 100'000;
  bool composition_factors = true;
};

StructureReport structure_report(const PermGroup& g, const StructureOptions& opts = {});

/// Normal closure of `sub` inside `ambient`.
PermGroup normal_closure(const PermGroup& ambient, const PermGroup& sub);
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Permutation>& elems);

/// [N, G] for a normal subgroup N of G.
PermGroup commutator_subgroup(const PermGroup& n, const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);

bool is_normal(const PermGroup& ambient, const PermGroup& sub);
bool is_subgroup(const PermGroup& ambient, const PermGroup& sub);

/// Conjugacy classes as lists of elements, sorted by (size, first element).
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g,
                                                        std::size_t cap = 100'000);

/// A Sylow p-subgroup, or the trivial group if p does not divide |G|.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::size_t cap = 100'000);

/// Multiset of element orders as (order -> count).
std::map<std::uint64_t, std::uint64_t> element_orders_multiset(const PermGroup& g,
                                                               std::size_t cap = 100'000);

/// Name for a composition factor of the given order (prime or nonabelian simple).
CompositionFactor describe_simple_order(std::uint64_t order);

}  // namespace hgl
