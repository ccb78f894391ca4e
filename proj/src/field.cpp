#include "hgl/field.hpp"

#include <charconv>
#include <map>
#include <mutex>

namespace hgl {

namespace {

// Powers of x modulo the monic polynomial x^e + sum m_i x^i, as encoded
// elements. Returns an empty vector unless x has multiplicative order q-1.
std::vector<std::uint32_t> powers_of_x(std::uint32_t p, std::uint32_t e,
                                       const std::vector<std::uint32_t>& low) {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  std::vector<std::uint32_t> digits(e, 0), next(e);
  digits[0] = 1;
  std::vector<std::uint32_t> out;
  out.reserve(q - 1);
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t v = 0;
    for (std::uint32_t i = e; i-- > 0;) v = v * p + d[i];
    return v;
  };
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    std::uint32_t v = encode(digits);
    if (k > 0 && v == 1) return {};
    out.push_back(v);
    std::uint32_t top = digits[e - 1];
    for (std::uint32_t i = 0; i < e; ++i) {
      std::uint32_t shifted = i == 0 ? 0 : digits[i - 1];
      next[i] = (shifted + p - (top * low[i]) % p) % p;
    }
    digits.swap(next);
  }
  if (encode(digits) != 1) return {};
  return out;
}

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e) {
  // One instance per (p, e), so matrices over the same field share a handle.
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, e}];
  if (!slot) slot = build(p, e);
  return slot;
}

std::shared_ptr<const Field> Field::build(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw InvalidInput("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > (1u << 16)) throw InvalidInput("field order exceeds 2^16");
  }
  if (e == 1) {
    // Modulus x - g with g the smallest primitive root, so encodings are residues.
    for (std::uint32_t g = 1; g < p || p == 2; ++g) {
      std::uint32_t m0 = (p - g % p) % p;
      if (!powers_of_x(p, 1, {m0}).empty()) return std::shared_ptr<const Field>(new Field(p, 1, {m0, 1}));
      if (p == 2) break;
    }
    throw Error("no primitive root found");
  }
  // Smallest primitive modulus in the order of its encoded low coefficients.
  for (std::uint64_t code = 1; code < q; ++code) {
    std::vector<std::uint32_t> low(e);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      low[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (low[0] == 0) continue;
    if (powers_of_x(p, e, low).empty()) continue;
    low.push_back(1);
    return std::shared_ptr<const Field>(new Field(p, e, std::move(low)));
  }
  throw Error("no primitive polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  std::vector<std::uint32_t> low(modulus_.begin(), modulus_.end() - 1);
  auto pw = powers_of_x(p, e, low);
  log_.assign(q_, 0);
  exp_.resize(2 * (q_ - 1));
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = exp_[k + q_ - 1] = pw[k];
    log_[pw[k]] = k;
  }
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % p_;
  Elem r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Field::Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return (p_ - a) % p_;
  Elem r = 0, scale = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw DomainError("log of zero");
  return log_[a];
}

std::string Field::to_string(Elem a) const {
  if (q_ == 4) {
    static const char* names[] = {"0", "1", "w", "w2"};
    return names[a];
  }
  return std::to_string(a);
}

Field::Elem Field::parse(const std::string& s) const {
  if (q_ == 4) {
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "w") return 2;
    if (s == "w2") return 3;
  }
  Elem v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v >= q_)
    throw InvalidInput("bad field element '" + s + "'");
  return v;
}

}  // namespace hgl
