#pragma once

#include <cstdint>
#include <vector>

#include "hgl/perm.hpp"

namespace hgl {

/// Deterministic Schreier-Sims. Level i holds the strong generators that
/// fix base points 0..i-1 and a transversal of the basic orbit of base[i].
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_pos;  // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // maps base to orbit[k]
    std::vector<Permutation> inverse_transversal;
    std::vector<std::size_t> tested;  // per orbit point: generators already checked
  };

  StabilizerChain(std::size_t degree, const std::vector<Point>& base_prefix);

  void add_generator(const Permutation& g);

  /// Sifts g from `start`; returns the residue and the level where it stopped
  /// (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start = 0) const;

  bool contains(const Permutation& g) const;

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  /// Chain of the stabilizer of base points 0..k-1.
  StabilizerChain tail(std::size_t k) const;

 private:
  void insert(const Permutation& h, std::size_t level);
  void extend_orbit(Level& L);
  void new_level(Point base);
  void complete(std::size_t from);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace hgl
