#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgl/common.hpp"

namespace hgl {

/// Lie-type families by the Dynkin label of the covering group G.
enum class LieFamily {
  A,         // PSL_n(q), label A_{n-1}
  A2,        // PSU_n(q), label 2A_{n-1}
  B,         // POmega_{2n+1}(q)
  C,         // PSp_{2n}(q)
  D,         // POmega+_{2n}(q)
  D2,        // POmega-_{2n}(q)
  G2,
  F4,
  E6,
  E6_2,      // 2E6
  D4_3,      // 3D4
  E7,
  E8,
  B2_2,      // 2B2, q = 2^{2m+1}
  G2_2,      // 2G2, q = 3^{2m+1}
  F4_2,      // 2F4, q = 2^{2m+1}
  F4_2Tits,  // 2F4(2)'
};

bool is_classical(LieFamily f);
std::string family_tag(LieFamily f);
/// Accepts the tags produced by family_tag ("A", "2A", "3D4", "2F4(2)'", ...). Throws InvalidInput.
LieFamily parse_lie_family(const std::string& tag);
const std::vector<LieFamily>& all_lie_families();

struct LieDatum {
  LieFamily family = LieFamily::A;
  /// Matrix-size parameter n of the classical row (PSL_n, PSp_{2n}, ...); 0 for exceptional rows.
  unsigned n = 0;
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  BigInt order_g;
  std::uint64_t d = 1;
  std::uint64_t epsilon = 1;
  std::uint64_t g = 1;
  std::uint64_t out = 1;
  BigInt order_t;
  /// Set when the input was POmega_5(q), returned as PSp_4(q).
  bool canonicalized = false;
  std::string name;  // e.g. "2A3(2)"
};

/// Exact table row. Throws InvalidInput when q is not a prime power and
/// DomainError when (n, q) violates a listed restriction.
LieDatum lie_datum(LieFamily family, unsigned n, std::uint64_t q);

struct SweepRow {
  LieDatum datum;
  BigInt lhs;  // 3 d out^3
  BigInt rhs;  // |G|
  bool pass = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::vector<SweepRow> failures;
  /// Parameters rejected by a restriction, with the reason.
  std::vector<std::string> skipped;
  bool all_pass() const { return failures.empty(); }
};

/// 3 d |Out T|^3 < |G| over classical rows with n <= max_n and prime powers q <= max_q.
/// Exceptional rows ignore max_n. PSL_2 and POmega_5 are left out: the first lies
/// outside the inequality's scope, the second duplicates PSp_4.
SweepReport sweep_ineq3(const std::vector<LieFamily>& families, unsigned max_n, std::uint64_t max_q);

/// e^3 <= q^2 / 2, as 2 e^3 <= q^2.
bool helper_bound(std::uint64_t q);

struct Psl2Check {
  std::uint64_t q = 0, p = 0;
  unsigned e = 0;
  /// q in {4, 5, 9}: handled by the alternating-group case.
  bool redirect = false;
  std::string redirect_to;
  /// Reduced form: 3 e^3 < (q-2)^3 for even q, 3 (4e)^3 < (q-1)^3 for odd q.
  BigInt lhs, rhs;
  bool reduced_pass = false;
  /// Unreduced form, with a(T) = q+1 (even) or q (odd) and |Out T| = d e.
  bool full_pass = false;
  bool pass() const { return redirect || (reduced_pass && full_pass); }
};

/// Throws InvalidInput unless q >= 4 is a prime power.
Psl2Check psl2_bound_check(std::uint64_t q);

/// 3^{2n+1} < (n!/2)^3. Throws InvalidInput for n < 5.
bool alt_bound_check(unsigned n);

struct SporadicCheck {
  std::uint64_t out = 0;
  std::uint64_t lhs = 0;  // 3 out^3
  std::uint64_t bound = 24;
  std::uint64_t min_order = 7920;
  /// |Out T| <= 2 holds for every sporadic group; larger inputs are flagged.
  bool within_premise = false;
  bool pass = false;
};

SporadicCheck sporadic_check(std::uint64_t out = 2);

}  // namespace hgl
