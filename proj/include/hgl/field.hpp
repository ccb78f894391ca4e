#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hgl/common.hpp"

namespace hgl {

/// The finite field GF(p^e). An element is an integer in 0..q-1 whose
/// base-p digits are its coefficients on 1, x, ..., x^(e-1), reduced
/// modulo a fixed monic primitive polynomial. The residue of x generates
/// the multiplicative group.
class Field {
 public:
  using Elem = std::uint32_t;

  /// Throws InvalidInput if p is not prime or p^e exceeds 2^16.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }

  /// Coefficients c_0..c_e of the monic modulus (c_e = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// The residue of x.
  Elem generator() const { return e_ == 1 ? exp_[1] : p_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// x -> x^p.
  Elem frobenius(Elem a) const { return pow(a, p_); }

  /// Discrete log to base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  /// generator()^k.
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// "0", "1", "w", "w2" for GF(4); decimal encoding for other fields.
  std::string to_string(Elem a) const;
  Elem parse(const std::string& s) const;

 private:
  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
  static std::shared_ptr<const Field> build(std::uint32_t p, std::uint32_t e);

  std::uint32_t p_, e_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;  // length 2(q-1) so products of logs index directly
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace hgl
