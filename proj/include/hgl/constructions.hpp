#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgl/holomorph.hpp"
#include "hgl/structure.hpp"

namespace hgl {

/// H, J <= G with |H||J| = |G| and H n J = 1.
struct ComplementaryPair {
  PermGroup g = PermGroup::trivial(1);
  PermGroup h = PermGroup::trivial(1);
  PermGroup j = PermGroup::trivial(1);
};

bool is_complementary(const ComplementaryPair& pair);

/// Two homomorphisms gamma -> G given by generator images (indices in `g`),
/// agreeing only at the identity.
struct FpfPair {
  CayleyPtr g;
  PermGroup gamma = PermGroup::trivial(1);
  std::vector<ElementIndex> beta1;
  std::vector<ElementIndex> beta2;
};

/// A verified embedding together with the holomorph it lives in.
struct ConstructedEmbedding {
  HolPtr hol;
  RegularEmbedding embedding;
  EmbeddingReport report;
};

/// H x J on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// sigma -> [beta1(sigma) beta2(sigma)^-1, C(beta2(sigma))]. Throws DomainError when
/// the maps are not homomorphisms or not fixed-point free, or |gamma| != |G|.
ConstructedEmbedding fpf_embedding(const FpfPair& pair, const VerifyOptions& opts = {});

/// (h, j) -> [h j^-1, C(j)] on H x J. Throws DomainError unless complementary.
ConstructedEmbedding untangle_embedding(const ComplementaryPair& pair, const VerifyOptions& opts = {},
                                        std::uint64_t cap = 100'000);

/// The FpfPair given by the two projections of H x J.
FpfPair projection_pair(const ComplementaryPair& pair, const CayleyPtr& g);

struct ParityCheck {
  std::string element;  // "(v,0)" or "(0,1)"
  std::size_t two_cycles = 0;
  std::size_t m_cycles = 0;
  bool even = false;
  bool ok = false;
};

/// B = C2^e x Cm acting on n = 2^e m points by translation; point (v, k) is v + 2^e k.
struct TranslationGroup {
  unsigned e = 0;
  std::uint64_t m = 1;
  std::vector<Permutation> v_translations;  // one per nonzero v
  Permutation k_shift;                      // (0, 1)
  std::vector<Permutation> generators;      // basis translations then (0, 1) when m > 1
};

TranslationGroup translation_group(std::uint64_t n);

/// Translations by (v, 0) have n/2 two-cycles; (0, 1) has 2^e m-cycles; all even when 4 | n or n odd.
std::vector<ParityCheck> parity_checks(std::uint64_t n);

struct AnGenResult {
  std::uint64_t n = 0;
  unsigned e = 0;
  std::uint64_t m = 1;
  ComplementaryPair pair;
  std::vector<ParityCheck> parity;
  ConstructedEmbedding embedding;
};

/// A_{n-1} x C2^e x Cm regularly embedded in Hol(A_n). Throws DomainError for n = 2 mod 4.
AnGenResult an_gen_embedding(std::uint64_t n, const VerifyOptions& opts = {});

/// Fixed-point free involutions on n points (n even): how many, and whether all are odd.
struct InvolutionCensus {
  std::uint64_t count = 0;
  std::uint64_t odd = 0;
};
InvolutionCensus fpf_involutions(std::size_t n);

enum class GuralnickCase { A, B, C, D, E };

struct GuralnickPair {
  GuralnickCase which = GuralnickCase::A;
  std::string description;
  ComplementaryPair pair;
};

/// Desk-scale instances: (a) n in {5, 8, 9}; (b) "PSL(2,7)", "PSL(3,2)", and
/// "PSL(2,11)" (built through case (c)); (c) PSL(2,11) with H = A5; (e) PSU(4,2)
/// on the 27 isotropic planes. Case (d) is refused.
GuralnickPair guralnick_case_builder(GuralnickCase which, const std::string& param = "");

/// A subgroup of PSL(2,11) isomorphic to A5 (it has index 11).
PermGroup psl2_11_a5_subgroup(const PermGroup& psl2_11);

struct SolInsolReport {
  std::string which;
  std::uint64_t p = 0;
  ComplementaryPair pair;
  ConstructedEmbedding embedding;
  StructureReport gamma_structure;
  StructureReport g_structure;
  std::vector<std::string> g_nonabelian_factors;
  bool gamma_soluble = false;
  bool factors_differ = false;
  /// Name -> result of the isomorphism checks on H and J.
  std::vector<std::pair<std::string, bool>> iso_checks;
  bool ok() const;
};

/// Cases "i", "ii", "iii". Case iii needs a Mersenne prime p; p > 7 requires allow_large.
SolInsolReport sol_insol_verify(const std::string& which, std::uint64_t p = 7, bool allow_large = false,
                                const VerifyOptions& opts = {});

}  // namespace hgl
