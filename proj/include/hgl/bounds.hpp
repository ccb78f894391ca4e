#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgl/perm.hpp"

namespace hgl {

struct AbelianBoundResult {
  std::uint64_t a_value = 1;
  /// Generators of an abelian subgroup of order a_value.
  std::vector<Permutation> witness;
  std::uint64_t nodes = 0;
};

/// a(G), the largest order of an abelian subgroup. Throws CapExceeded above cap.
/// Conjugacy-class seeds are dealt to `threads` workers sharing one bound.
AbelianBoundResult max_abelian_order(const PermGroup& g, std::uint64_t cap = 50'000, unsigned threads = 1);

/// 3 (a(T) a(Aut T))^3 < |T|^3, in exact integers.
struct AIneqResult {
  std::uint64_t a_t = 0;
  std::uint64_t a_aut = 0;
  BigInt order_t;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

AIneqResult check_a_ineq(const PermGroup& t, const PermGroup& aut_t, std::uint64_t cap = 50'000);

/// a(T)^3 < |T| for simple T not isomorphic to any PSL(2,q).
struct VdovinResult {
  bool applicable = false;
  std::string excluded_reason;
  std::uint64_t a = 0;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
};

VdovinResult check_vdovin(const PermGroup& t, std::uint64_t cap = 50'000);

/// G/N via the action on the cosets of a normal subgroup N.
PermGroup quotient_group(const PermGroup& g, const PermGroup& n, std::uint64_t cap = 50'000);

struct APropReport {
  // a(H) <= a(G) for H <= G.
  std::uint64_t a_g = 0, a_h = 0;
  bool subgroup_ok = false;
  // a(G) <= a(N) a(G/N) for N normal in G.
  std::uint64_t a_n = 0, a_quotient = 0;
  bool normal_ok = false;
  // a(H x J) = a(H) a(J).
  std::uint64_t a_p = 0, a_q = 0, a_product = 0;
  bool product_ok = false;
  bool ok() const { return subgroup_ok && normal_ok && product_ok; }
};

/// Throws DomainError when H is not a subgroup or N is not normal in G.
APropReport a_prop_checks(const PermGroup& g, const PermGroup& h, const PermGroup& n, const PermGroup& p,
                          const PermGroup& q);

}  // namespace hgl
