#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hgl/perm.hpp"

namespace hgl {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw InvalidInput("permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidInput("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidInput("permutation of degree 0");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return from_images_unchecked(std::move(im));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidInput("cycle notation: expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InvalidInput("cycle notation: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidInput("cycle notation: unexpected '" + std::string(1, text[i]) +
                           "' at position " + std::to_string(i));
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= degree) throw InvalidInput("cycle notation: point out of range");
        ++i;
      }
      if (used[v]) throw InvalidInput("cycle notation: repeated point " + std::to_string(v));
      used[v] = true;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InvalidInput("degree mismatch in product");
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = images_[rhs.images_[x]];
  return from_images_unchecked(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<Point>(x);
  return from_images_unchecked(std::move(im));
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& c) const {
  // c p c^-1 maps c(x) to c(p(x)).
  std::vector<Point> im(degree());
  for (std::size_t x = 0; x < im.size(); ++x) im[c.images_[x]] = c.images_[images_[x]];
  return from_images_unchecked(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::num_fixed_points() const {
  std::size_t n = 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == x) ++n;
  return n;
}

std::optional<Point> Permutation::first_moved_point() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return static_cast<Point>(x);
  return std::nullopt;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (std::size_t len : cycle_type()) o = lcm_u64(o, len);
  return o;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    os << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) os << ' ';
      os << y;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hgl
