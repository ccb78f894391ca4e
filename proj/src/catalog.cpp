#include "hgl/catalog.hpp"

#include <cctype>
#include <numeric>

#include "hgl/matrix_groups.hpp"

namespace hgl {

namespace {

struct Cursor {
  std::string text;               // upper-cased, whitespace removed
  std::vector<std::size_t> where;  // original offsets
  std::size_t i = 0;

  std::size_t pos() const { return i < where.size() ? where[i] : (where.empty() ? 0 : where.back() + 1); }
  bool done() const { return i >= text.size(); }
  char peek() const { return done() ? '\0' : text[i]; }

  bool accept(std::string_view word) {
    if (text.compare(i, word.size(), word) != 0) return false;
    i += word.size();
    return true;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos());
    ++i;
  }
  std::uint64_t number() {
    std::size_t start = pos();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", start);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1'000'000'000) throw ParseError("number too large", start);
      ++i;
    }
    return v;
  }
};

std::uint64_t require_prime_power(std::uint64_t q, std::size_t pos) {
  std::uint64_t p;
  unsigned e;
  if (!prime_power(q, p, e)) throw ParseError("q = " + std::to_string(q) + " is not a prime power", pos);
  return q;
}

GroupSpec parse_atom(Cursor& c) {
  using K = GroupSpec::Kind;
  std::size_t start = c.pos(), i0 = c.i;
  if (c.accept("PGAMMAL(") || c.accept("PGL(") || c.accept("PSL(") || c.accept("PSU(")) {
    std::string head = c.text.substr(i0, c.i - i0);
    std::size_t npos = c.pos();
    std::uint64_t n = c.number();
    c.expect(',');
    std::size_t qpos = c.pos();
    std::uint64_t q = c.number();
    c.expect(')');
    if (head == "PSU(") {
      if (n != 4 || q != 2) throw ParseError("only PSU(4,2) is supported", start);
      return GroupSpec::atom(K::PSU4_2);
    }
    if (head == "PSL(" && n == 3) {
      if (q != 2) throw ParseError("only PSL(3,2) is supported in dimension 3", start);
      return GroupSpec::atom(K::PSL3_2);
    }
    if (n != 2) throw ParseError("projective groups are supported in dimension 2", npos);
    require_prime_power(q, qpos);
    K k = head == "PSL(" ? K::PSL2 : head == "PGL(" ? K::PGL2 : K::PGammaL2;
    return GroupSpec::atom(k, q);
  }
  if (c.accept("E(")) {
    std::size_t ppos = c.pos();
    std::uint64_t p = c.number();
    c.expect(',');
    std::size_t kpos = c.pos();
    std::uint64_t k = c.number();
    c.expect(')');
    if (!is_prime(p)) throw ParseError("E(p,k) needs p prime", ppos);
    if (k < 1) throw ParseError("E(p,k) needs k >= 1", kpos);
    return GroupSpec::atom(K::ElemAb, p, k);
  }
  char letter = c.peek();
  if (letter == 'C' || letter == 'S' || letter == 'A' || letter == 'D' || letter == 'F') {
    ++c.i;
    std::size_t npos = c.pos();
    std::uint64_t n = c.number();
    switch (letter) {
      case 'C':
      case 'S':
      case 'A':
        if (n < 1) throw ParseError("parameter must be at least 1", npos);
        return GroupSpec::atom(letter == 'C' ? K::Cyclic : letter == 'S' ? K::Sym : K::Alt, n);
      case 'D':
        if (n < 4 || n % 2) throw ParseError("dihedral order must be even and at least 4", npos);
        return GroupSpec::atom(K::Dihedral, n);
      default: {
        // n = p(p-1)/2 for an odd prime p.
        std::uint64_t p = 3;
        while (p * (p - 1) / 2 < n) ++p;
        if (p * (p - 1) / 2 != n || !is_prime(p))
          throw ParseError("F" + std::to_string(n) + ": no odd prime p with p(p-1)/2 = " + std::to_string(n),
                           npos);
        return GroupSpec::atom(K::Frobenius, p);
      }
    }
  }
  throw ParseError("unknown group atom", start);
}

// Cycle (first first+1 ... first+len-1) on `degree` points.
Permutation cycle_on(std::size_t degree, Point first, std::size_t len) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t k = 0; k < len; ++k)
    img[first + k] = static_cast<Point>(first + (k + 1) % len);
  return Permutation(std::move(img));
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t r : prime_divisors(p - 1)) {
      std::uint64_t x = 1;
      for (std::uint64_t k = 0; k < (p - 1) / r; ++k) x = x * g % p;
      if (x == 1) ok = false;
    }
    if (ok) return g;
  }
  return 1;
}

PermGroup psl32_on_points() {
  // Column vectors of GF(2)^3 minus zero; vector v has index v - 1.
  auto act = [](const int m[3][3]) {
    std::vector<Point> img(7);
    for (unsigned v = 1; v < 8; ++v) {
      unsigned w = 0;
      for (int i = 0; i < 3; ++i) {
        int s = 0;
        for (int j = 0; j < 3; ++j) s ^= m[i][j] & ((v >> j) & 1);
        w |= static_cast<unsigned>(s) << i;
      }
      img[v - 1] = w - 1;
    }
    return Permutation(std::move(img));
  };
  const int transvection[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const int rotate[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  return PermGroup::from_generators({act(transvection), act(rotate)});
}

PermGroup build_atom(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  const std::size_t n = s.a;
  switch (s.kind) {
    case K::Cyclic:
      if (n == 1) return PermGroup::trivial(1);
      return PermGroup::from_generators({cycle_on(n, 0, n)});
    case K::Sym:
      if (n == 1) return PermGroup::trivial(1);
      return PermGroup::from_generators({cycle_on(n, 0, 2), cycle_on(n, 0, n)});
    case K::Alt:
      if (n <= 2) return PermGroup::trivial(n);
      if (n == 3) return PermGroup::from_generators({cycle_on(3, 0, 3)});
      // (0 1 2) with an odd-length long cycle.
      return PermGroup::from_generators({cycle_on(n, 0, 3), n % 2 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1)});
    case K::Dihedral: {
      std::size_t m = n / 2;
      if (m == 2)
        return PermGroup::from_generators({Permutation::from_cycles("(0 1)(2 3)", 4),
                                           Permutation::from_cycles("(0 2)(1 3)", 4)});
      std::vector<Point> refl(m);
      for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
      return PermGroup::from_generators({cycle_on(m, 0, m), Permutation(std::move(refl))});
    }
    case K::Frobenius: {
      std::uint64_t p = s.a, g = smallest_primitive_root(p), mult = g * g % p;
      std::vector<Point> img(p);
      for (std::uint64_t x = 0; x < p; ++x) img[x] = static_cast<Point>(x * mult % p);
      return PermGroup::generated_by(p, {cycle_on(p, 0, p), Permutation(std::move(img))});
    }
    case K::ElemAb: {
      std::size_t p = s.a, k = s.b;
      std::vector<Permutation> gens;
      for (std::size_t i = 0; i < k; ++i) gens.push_back(cycle_on(p * k, static_cast<Point>(i * p), p));
      return PermGroup::from_generators(std::move(gens));
    }
    case K::PSL2:
      return projective_group(ProjectiveKind::PSL2, static_cast<std::uint32_t>(s.a));
    case K::PGL2:
      return projective_group(ProjectiveKind::PGL2, static_cast<std::uint32_t>(s.a));
    case K::PGammaL2:
      return projective_group(ProjectiveKind::PGammaL2, static_cast<std::uint32_t>(s.a));
    case K::PSL3_2:
      return psl32_on_points();
    case K::PSU4_2:
      return su42_plane_group(1);
    case K::Product:
      break;
  }
  throw InvalidInput("build_atom: product passed as atom");
}

BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::string GroupSpec::to_string() const {
  auto num = [](std::uint64_t v) { return std::to_string(v); };
  switch (kind) {
    case Kind::Cyclic: return "C" + num(a);
    case Kind::Sym: return "S" + num(a);
    case Kind::Alt: return "A" + num(a);
    case Kind::Dihedral: return "D" + num(a);
    case Kind::Frobenius: return "F" + num(a * (a - 1) / 2);
    case Kind::ElemAb: return "E(" + num(a) + "," + num(b) + ")";
    case Kind::PSL2: return "PSL(2," + num(a) + ")";
    case Kind::PGL2: return "PGL(2," + num(a) + ")";
    case Kind::PGammaL2: return "PGammaL(2," + num(a) + ")";
    case Kind::PSL3_2: return "PSL(3,2)";
    case Kind::PSU4_2: return "PSU(4,2)";
    case Kind::Product: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : "x") + f.to_string();
      return out;
    }
  }
  return "?";
}

GroupSpec parse_spec(std::string_view text) {
  Cursor c;
  for (std::size_t k = 0; k < text.size(); ++k) {
    unsigned char ch = static_cast<unsigned char>(text[k]);
    if (std::isspace(ch)) continue;
    c.text.push_back(static_cast<char>(std::toupper(ch)));
    c.where.push_back(k);
  }
  if (c.text.empty()) throw ParseError("empty group spec", 0);
  std::vector<GroupSpec> factors{parse_atom(c)};
  while (!c.done()) {
    if (c.peek() != 'X') throw ParseError("unexpected trailing input", c.pos());
    ++c.i;
    factors.push_back(parse_atom(c));
  }
  if (factors.size() == 1) return factors.front();
  return GroupSpec::product(std::move(factors));
}

BigInt spec_order(const GroupSpec& s) {
  using K = GroupSpec::Kind;
  BigInt q = s.a;
  switch (s.kind) {
    case K::Cyclic: return q;
    case K::Sym: return factorial(s.a);
    case K::Alt: return s.a <= 2 ? BigInt(1) : factorial(s.a) / 2;
    case K::Dihedral: return q;
    case K::Frobenius: return q * (q - 1) / 2;
    case K::ElemAb: return boost::multiprecision::pow(q, static_cast<unsigned>(s.b));
    case K::PSL2: return q * (q * q - 1) / gcd_u64(2, s.a - 1);
    case K::PGL2: return q * (q * q - 1);
    case K::PGammaL2: {
      std::uint64_t p;
      unsigned e;
      prime_power(s.a, p, e);
      return q * (q * q - 1) * e;
    }
    case K::PSL3_2: return 168;
    case K::PSU4_2: return 25920;
    case K::Product: {
      BigInt o = 1;
      for (const auto& f : s.factors) o *= spec_order(f);
      return o;
    }
  }
  return 0;
}

PermGroup build_group(const GroupSpec& spec, std::uint64_t cap) {
  BigInt order = spec_order(spec);
  if (order > cap)
    throw CapExceeded(spec.to_string() + ": order " + hgl::to_string(order) + " exceeds cap " + std::to_string(cap));
  if (spec.kind != GroupSpec::Kind::Product) return build_atom(spec);
  std::vector<PermGroup> parts;
  std::size_t degree = 0;
  for (const auto& f : spec.factors) {
    parts.push_back(build_group(f, cap));
    degree += parts.back().degree();
  }
  // Factor k acts on its own block of points; other points are fixed.
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& g : parts) {
    for (const auto& s : g.generators()) {
      std::vector<Point> img(degree);
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t x = 0; x < g.degree(); ++x) img[offset + x] = static_cast<Point>(offset + s(static_cast<Point>(x)));
      gens.push_back(Permutation(std::move(img)));
    }
    offset += g.degree();
  }
  return PermGroup::generated_by(degree, std::move(gens));
}

PermGroup build_group(std::string_view text, std::uint64_t cap) { return build_group(parse_spec(text), cap); }

KnownAut known_aut_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  if (spec.kind == K::Alt && spec.a >= 5 && spec.a <= 8) {
    if (spec.a == 6)
      return {projective_group(ProjectiveKind::PGammaL2, 9), projective_group(ProjectiveKind::PSL2, 9)};
    return {build_atom(GroupSpec::atom(K::Sym, spec.a)), build_atom(spec)};
  }
  if (spec.kind == K::PSL2 && spec.a >= 4 && spec.a <= 13) {
    auto q = static_cast<std::uint32_t>(spec.a);
    return {projective_group(ProjectiveKind::PGammaL2, q), projective_group(ProjectiveKind::PSL2, q)};
  }
  throw InvalidInput("known_aut_group: no catalog entry for " + spec.to_string());
}

}  // namespace hgl
