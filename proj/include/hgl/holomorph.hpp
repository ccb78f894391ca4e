#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hgl/cayley.hpp"

namespace hgl {

/// The pair [g, alpha] of G x Aut(G); alpha permutes element indices.
struct HolElement {
  ElementIndex g = 0;
  Permutation alpha;

  friend bool operator==(const HolElement&, const HolElement&) = default;
  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

/// Hol(G) over an indexed group, with Aut(G) given as a permutation group
/// on element indices.
class Holomorph {
 public:
  /// Without `aut`, membership of automorphisms is checked on the table and
  /// aut()/order() are unavailable; useful for groups too large to carry
  /// Aut(G) as a permutation group.
  Holomorph(CayleyPtr g, std::optional<PermGroup> aut);

  /// Computes Aut(G) with automorphism_group.
  static std::shared_ptr<const Holomorph> of(const CayleyPtr& g, std::uint64_t aut_cap = 2000);

  const CayleyGroup& group() const { return *g_; }
  const CayleyPtr& group_ptr() const { return g_; }
  bool has_aut() const { return aut_.has_value(); }
  /// Throws DomainError when constructed without Aut(G).
  const PermGroup& aut() const;
  std::size_t degree() const { return g_->order(); }
  BigInt order() const { return BigInt(g_->order()) * aut().order(); }

  HolElement identity() const;
  /// [g1 a1(g2), a1 a2].
  HolElement mult(const HolElement& x, const HolElement& y) const;
  HolElement inverse(const HolElement& x) const;
  /// g alpha(t).
  ElementIndex action(const HolElement& x, ElementIndex t) const { return g_->mul(x.g, x.alpha(t)); }
  Permutation to_perm(const HolElement& x) const;

  /// Splits a permutation of element indices as [p(0), t -> p(0)^-1 p(t)];
  /// nullopt if the residual map is not an automorphism in aut().
  std::optional<HolElement> decode(const Permutation& p) const;

  /// x -> g x g^-1.
  Permutation conjugation_aut(ElementIndex g) const;
  HolElement lambda(ElementIndex g) const;
  /// [g^-1, C(g)], acting as t -> t g^-1.
  HolElement rho(ElementIndex g) const;

  /// Generated by lambda of the group generators and the Aut generators.
  PermGroup as_perm_group() const;

 private:
  CayleyPtr g_;
  std::optional<PermGroup> aut_;
};

using HolPtr = std::shared_ptr<const Holomorph>;

HolElement hol_mult(const Holomorph& hol, const HolElement& x, const HolElement& y);
ElementIndex hol_action(const Holomorph& hol, const HolElement& x, ElementIndex t);
Permutation conjugation_aut(const CayleyGroup& g, ElementIndex x);
PermGroup hol_group(const PermGroup& g, std::uint64_t aut_cap = 2000);

/// A homomorphism from a source group into Hol(G), given by the images of
/// the source generators (in the order of source.generators()).
///
/// When `beta1`/`beta2` are present the embedding comes from a fixed-point
/// free pair: sigma -> [beta1(sigma) beta2(sigma)^-1, C(beta2(sigma))], with
/// the two maps given by generator images in G.
struct RegularEmbedding {
  PermGroup source = PermGroup::trivial(1);
  std::vector<HolElement> images;
  std::optional<std::vector<ElementIndex>> beta1;
  std::optional<std::vector<ElementIndex>> beta2;
};

struct EmbeddingReport {
  bool homomorphism = false;
  bool regular = false;
  bool injective = false;
  /// Pairs on which the homomorphism law was tested explicitly.
  std::uint64_t pairs_checked = 0;
  bool exhaustive_pairs = false;
  std::uint64_t source_order = 0;
  bool ok() const { return homomorphism && regular && injective; }
};

struct VerifyOptions {
  std::uint64_t exhaustive_limit = 360;
  std::uint64_t random_pairs = 10'000;
  std::uint64_t seed = 1;
  /// Generic embeddings tabulate every image; refuse above this many entries.
  std::uint64_t table_entry_cap = 60'000'000;
};

/// Checks that the generator images extend to a homomorphism whose image acts
/// regularly on the element indices.
EmbeddingReport verify_embedding(const Holomorph& hol, const RegularEmbedding& emb, const VerifyOptions& opts = {});

/// Image of every source element, indexed as in index_group(emb.source).
/// Requires the generic tabulation to fit the entry cap.
std::vector<HolElement> tabulate_embedding(const Holomorph& hol, const RegularEmbedding& emb,
                                           const CayleyGroup& source_index);

}  // namespace hgl
