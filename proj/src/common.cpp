#include "hgl/common.hpp"

#include <numeric>
#include <sstream>

namespace hgl {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& e) {
  if (n < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= n && n % d != 0) ++d;
  if (n % d != 0) d = n;
  unsigned k = 0;
  std::uint64_t m = n;
  while (m % d == 0) {
    m /= d;
    ++k;
  }
  if (m != 1) return false;
  p = d;
  e = k;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (p < 2 || n == 0) return 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace hgl
