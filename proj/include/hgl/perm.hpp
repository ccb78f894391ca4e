#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgl/common.hpp"

namespace hgl {

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). Every group in
/// this library acts on the left with that convention.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1 2)(3 4)". "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  /// Builds a permutation from trusted images (no bijectivity check).
  static Permutation from_images_unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  /// c * p * c^-1.
  Permutation conjugate_by(const Permutation& c) const;

  bool is_identity() const;
  bool is_even() const;
  std::size_t num_fixed_points() const;
  std::optional<Point> first_moved_point() const;
  std::uint64_t order() const;

  /// Lengths of the nontrivial cycles, sorted increasingly.
  std::vector<std::size_t> cycle_type() const;

  /// Disjoint-cycle notation without fixed points; "()" for the identity.
  std::string to_cycles() const;

  std::size_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

class StabilizerChain;

/// A permutation group given by generators, together with a stabilizer
/// chain (base + transversals) computed by deterministic Schreier-Sims.
///
/// Immutable after construction; copies share the chain.
class PermGroup {
 public:
  /// The trivial group on `degree` points (degree >= 1).
  static PermGroup trivial(std::size_t degree);

  /// Throws InvalidInput on an empty list or mismatched degrees.
  static PermGroup from_generators(std::vector<Permutation> gens);

  /// Like from_generators but allows an empty generator list.
  static PermGroup generated_by(std::size_t degree,
                                std::vector<Permutation> gens);

  /// Chain built with the given base prefix, so that stabilizer_chain_level
  /// queries refer to those points.
  static PermGroup with_base(std::size_t degree, std::vector<Permutation> gens,
                             const std::vector<Point>& base_prefix);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  BigInt order() const;

  /// Order as a machine integer; throws CapExceeded above 2^63.
  std::uint64_t size() const;

  bool contains(const Permutation& p) const;

  std::vector<Point> base() const;
  std::vector<std::size_t> transversal_sizes() const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  bool is_regular() const;
  bool is_semiregular() const;
  bool is_abelian() const;
  bool is_trivial() const { return gens_.empty(); }

  /// Stabilizer of a point, read off a chain with that point as first base.
  PermGroup stabilizer(Point x) const;

  /// All elements; throws CapExceeded when the order exceeds `cap`.
  std::vector<Permutation> elements(std::size_t cap = 1'000'000) const;

  Permutation random_element(std::mt19937_64& rng) const;

  /// Adds generators; the original chain is reused and extended.
  PermGroup with_generators(const std::vector<Permutation>& extra) const;

  /// True if every generator of `sub` lies in this group.
  bool contains_group(const PermGroup& sub) const;

 private:
  PermGroup(std::size_t degree, std::vector<Permutation> gens,
            std::shared_ptr<const StabilizerChain> chain);

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// The group generated by `gens` (degree taken from the first generator).
PermGroup group_from_generators(std::vector<Permutation> gens);

}  // namespace hgl
