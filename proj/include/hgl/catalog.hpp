#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hgl/perm.hpp"

namespace hgl {

/// Parse failure with the 0-based character offset where it was detected.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : InvalidInput(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Abstract syntax tree of a group spec such as "A4xC5" or "PSL(2,7)".
struct GroupSpec {
  enum class Kind {
    Cyclic,     // a = n
    Sym,        // a = n
    Alt,        // a = n
    Dihedral,   // a = group order (even, >= 4)
    Frobenius,  // a = p; order p(p-1)/2
    ElemAb,     // a = p, b = rank
    PSL2,       // a = q
    PGL2,       // a = q
    PGammaL2,   // a = q
    PSL3_2,
    PSU4_2,
    Product,
  };

  Kind kind = Kind::Cyclic;
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  std::vector<GroupSpec> factors;

  static GroupSpec atom(Kind k, std::uint64_t a = 0, std::uint64_t b = 0) { return {k, a, b, {}}; }
  static GroupSpec product(std::vector<GroupSpec> fs) { return {Kind::Product, 0, 0, std::move(fs)}; }

  /// Canonical text, e.g. "A4xC5", "E(5,2)", "PGammaL(2,9)".
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Case-insensitive; whitespace is ignored; products are separated by "x".
GroupSpec parse_spec(std::string_view text);

/// Order from the closed formula of each atom, multiplied over products.
BigInt spec_order(const GroupSpec& spec);

/// Builds the group; throws CapExceeded if spec_order exceeds `cap`.
PermGroup build_group(const GroupSpec& spec, std::uint64_t cap = 1'000'000);
PermGroup build_group(std::string_view text, std::uint64_t cap = 1'000'000);

/// Catalog automorphism group of a simple group T, together with the
/// subgroup of inner automorphisms (a copy of T on the same points).
struct KnownAut {
  PermGroup aut;
  PermGroup inner;
};

/// Supported: Alt n for 5 <= n <= 8 and PSL(2,q) for 4 <= q <= 13.
KnownAut known_aut_group(const GroupSpec& spec);

}  // namespace hgl
