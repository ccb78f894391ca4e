#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgl/catalog.hpp"
#include "hgl/holomorph.hpp"

namespace hgl {

struct RegularSearchOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  bool stop_at_first = false;
  /// Upper bounds on the number of elements of each order (type filter).
  std::optional<std::map<std::uint64_t, std::uint64_t>> order_profile;
};

struct RegularSearchResult {
  /// Each subgroup as its sorted element list; the list itself is sorted.
  std::vector<std::vector<Permutation>> subgroups;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Finds the subgroups acting regularly on the points 0..m-1 that are
/// generated by the given candidates. candidates[x] must list every
/// available element sending 0 to x; points >= m only carry the elements'
/// identity and are ignored by the regularity tests.
RegularSearchResult search_regular_subgroups(std::size_t m, const std::vector<std::vector<Permutation>>& candidates,
                                             const RegularSearchOptions& opts = {});

struct RegularSubgroupRecord {
  PermGroup subgroup = PermGroup::trivial(1);
  std::vector<Permutation> elements;
  std::uint64_t fingerprint = 0;
  std::optional<std::string> iso_type;
};

struct RegularEnumeration {
  std::vector<RegularSubgroupRecord> records;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Every regular subgroup of Hol(G). Throws CapExceeded when |G| > cap.
RegularEnumeration enumerate_regular_subgroups(const Holomorph& hol, const RegularSearchOptions& opts = {},
                                               std::uint64_t cap = 60);

/// Labels each record with the first isomorphic candidate name.
void label_iso_types(RegularEnumeration& e, const std::vector<std::pair<std::string, PermGroup>>& candidates);

/// Fingerprint of a sorted element list.
std::uint64_t subgroup_fingerprint(const std::vector<Permutation>& sorted_elements);

struct HgsOptions {
  RegularSearchOptions search;
  std::uint64_t cap = 60;
};

struct HgsCount {
  std::string gamma;
  std::string g;
  std::uint64_t count = 0;
  std::vector<RegularEmbedding> witnesses;
  /// Regular subgroups of Hol(G) isomorphic to the source group.
  std::uint64_t regular_subgroups = 0;
  BigInt aut_gamma;
  BigInt aut_g;
  Rational crosscheck;
  bool crosscheck_matches = false;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Counts classes of regular embeddings Gamma -> Hol(G) up to conjugation by Aut(G).
HgsCount count_hgs(const PermGroup& gamma, const PermGroup& g, const HgsOptions& opts = {},
                   const std::string& gamma_name = "", const std::string& g_name = "");
HgsCount count_hgs(const GroupSpec& gamma, const GroupSpec& g, const HgsOptions& opts = {});

/// |Aut Gamma| * #{regular N <= Hol(G), N ~ Gamma} / |Aut G|.
Rational aut_orbit_crosscheck(const PermGroup& gamma, const PermGroup& g, const HgsOptions& opts = {});
Rational aut_orbit_crosscheck(const GroupSpec& gamma, const GroupSpec& g, const HgsOptions& opts = {});

struct HallWitness {
  std::uint64_t p = 0;
  /// Elements of the source group lying over H_p, and the group they generate.
  std::vector<Permutation> delta_elements;
  PermGroup delta = PermGroup::trivial(1);
  /// Element indices of G of order prime to p.
  std::vector<ElementIndex> h_p;
  std::uint64_t expected_order = 0;
  bool is_subgroup = false;
  bool ok() const {
    return is_subgroup && delta_elements.size() == expected_order && h_p.size() == expected_order;
  }
};

/// Throws DomainError when G is not nilpotent or p is not prime.
HallWitness delta_p(const Holomorph& hol, const RegularEmbedding& beta, std::uint64_t p);

/// The inclusion of a regular subgroup N <= Hol(G) as an embedding of N.
RegularEmbedding inclusion_embedding(const Holomorph& hol, const PermGroup& n);

struct ComplementResult {
  std::optional<PermGroup> j;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// A subgroup J with |H||J| = |G| and H n J = 1, via regular subgroups of
/// the action on the cosets of H.
ComplementResult find_complement(const PermGroup& g, const PermGroup& h, const RegularSearchOptions& opts = {},
                                 std::uint64_t group_cap = 10'000, std::uint64_t index_cap = 60);

}  // namespace hgl
