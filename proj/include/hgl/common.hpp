#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Point of a permutation domain, always in 0..degree-1.
using Point = std::uint32_t;

/// Index of an element inside a CayleyIndexedGroup (identity is 0).
using ElementIndex = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad group spec, degree mismatch, invalid parameter.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded before work started.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A search hit its node budget; results would be incomplete.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition of a mathematical construction does not hold
/// (e.g. the pair is not complementary, the group is not nilpotent).
class DomainError : public Error {
 public:
  using Error::Error;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);

/// Returns (p, e) if n = p^e with p prime and e >= 1.
bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& e);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest divisor of n that is a power of p.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace hgl
