#include "hgl/lie_tables.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace hgl {

namespace {

using boost::multiprecision::pow;

BigInt qp(std::uint64_t q, unsigned k) { return pow(BigInt(q), k); }

bool odd_power_of(std::uint64_t p, unsigned e, std::uint64_t base) { return p == base && e % 2 == 1 && e >= 3; }

std::string num(std::uint64_t x) { return std::to_string(x); }

}  // namespace

bool is_classical(LieFamily f) {
  switch (f) {
    case LieFamily::A:
    case LieFamily::A2:
    case LieFamily::B:
    case LieFamily::C:
    case LieFamily::D:
    case LieFamily::D2: return true;
    default: return false;
  }
}

std::string family_tag(LieFamily f) {
  switch (f) {
    case LieFamily::A: return "A";
    case LieFamily::A2: return "2A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
    case LieFamily::D2: return "2D";
    case LieFamily::G2: return "G2";
    case LieFamily::F4: return "F4";
    case LieFamily::E6: return "E6";
    case LieFamily::E6_2: return "2E6";
    case LieFamily::D4_3: return "3D4";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
    case LieFamily::B2_2: return "2B2";
    case LieFamily::G2_2: return "2G2";
    case LieFamily::F4_2: return "2F4";
    case LieFamily::F4_2Tits: return "2F4(2)'";
  }
  return "?";
}

const std::vector<LieFamily>& all_lie_families() {
  static const std::vector<LieFamily> all{
      LieFamily::A,  LieFamily::A2,   LieFamily::B,    LieFamily::C,  LieFamily::D,    LieFamily::D2,
      LieFamily::G2, LieFamily::F4,   LieFamily::E6,   LieFamily::E6_2, LieFamily::D4_3, LieFamily::E7,
      LieFamily::E8, LieFamily::B2_2, LieFamily::G2_2, LieFamily::F4_2, LieFamily::F4_2Tits};
  return all;
}

LieFamily parse_lie_family(const std::string& tag) {
  std::string t;
  for (char c : tag)
    if (c != ' ') t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (LieFamily f : all_lie_families()) {
    std::string u;
    for (char c : family_tag(f)) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == t) return f;
  }
  if (t == "PSL") return LieFamily::A;
  if (t == "PSU") return LieFamily::A2;
  if (t == "PSP") return LieFamily::C;
  throw InvalidInput("unknown Lie family tag: " + tag);
}

LieDatum lie_datum(LieFamily family, unsigned n, std::uint64_t q) {
  LieDatum x;
  if (!prime_power(q, x.p, x.e)) throw InvalidInput("q = " + num(q) + " is not a prime power");
  x.q = q;
  if (family == LieFamily::B && n == 2) {
    family = LieFamily::C;
    x.canonicalized = true;
  }
  x.family = family;
  const unsigned e = x.e;
  auto restrict = [&](bool bad, const std::string& why) {
    if (bad) throw DomainError(family_tag(family) + " restriction violated: " + why);
  };
  switch (family) {
    case LieFamily::A: {
      restrict(n < 2, "n >= 2");
      restrict(n == 2 && (q == 2 || q == 3), "(n,q) != (2,2), (2,3)");
      x.n = n;
      x.order_g = qp(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) x.order_g *= qp(q, i) - 1;
      x.d = gcd_u64(n, q - 1);
      x.epsilon = e;
      x.g = n == 2 ? 1 : 2;
      x.name = "A" + num(n - 1) + "(" + num(q) + ")";
      break;
    }
    case LieFamily::A2: {
      restrict(n < 3, "n >= 3");
      restrict(n == 3 && q == 2, "(n,q) != (3,2)");
      x.n = n;
      x.order_g = qp(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) x.order_g *= i % 2 == 0 ? qp(q, i) - 1 : qp(q, i) + 1;
      x.d = gcd_u64(n, q + 1);
      x.epsilon = 2 * e;
      x.g = 1;
      x.name = "2A" + num(n - 1) + "(" + num(q) + ")";
      break;
    }
    case LieFamily::B:
    case LieFamily::C: {
      if (family == LieFamily::C) {
        restrict(n < 2, "n >= 2");
        restrict(n == 2 && q == 2, "(n,q) != (2,2)");
        // Listed only alongside the automorphism data; honoured with the order row.
        restrict(n == 4 && q == 2, "(n,q) != (4,2)");
      } else {
        restrict(n < 3, "n >= 3");
      }
      x.n = n;
      x.order_g = qp(q, n * n);
      for (unsigned i = 1; i <= n; ++i) x.order_g *= qp(q, 2 * i) - 1;
      x.d = gcd_u64(2, q - 1);
      x.epsilon = e;
      x.g = family == LieFamily::C && n == 2 && q % 2 == 0 ? 2 : 1;
      x.name = (family == LieFamily::C ? "C" : "B") + num(n) + "(" + num(q) + ")";
      break;
    }
    case LieFamily::D:
    case LieFamily::D2: {
      restrict(n < 4, "n >= 4");
      const bool plus = family == LieFamily::D;
      x.n = n;
      x.order_g = qp(q, n * (n - 1)) * (plus ? qp(q, n) - 1 : qp(q, n) + 1);
      for (unsigned i = 1; i < n; ++i) x.order_g *= qp(q, 2 * i) - 1;
      BigInt qn = plus ? qp(q, n) - 1 : qp(q, n) + 1;
      x.d = static_cast<std::uint64_t>(boost::multiprecision::gcd(BigInt(4), qn));
      x.epsilon = plus ? e : 2 * e;
      x.g = plus ? (n == 4 ? 6 : 2) : 1;
      x.name = (plus ? "D" : "2D") + num(n) + "(" + num(q) + ")";
      break;
    }
    case LieFamily::G2:
      restrict(q < 3, "q >= 3");
      x.order_g = qp(q, 6) * (qp(q, 6) - 1) * (qp(q, 2) - 1);
      x.epsilon = e;
      x.g = x.p == 3 ? 2 : 1;
      break;
    case LieFamily::F4:
      x.order_g = qp(q, 24) * (qp(q, 12) - 1) * (qp(q, 8) - 1) * (qp(q, 6) - 1) * (qp(q, 2) - 1);
      x.epsilon = e;
      x.g = x.p == 2 ? 2 : 1;
      break;
    case LieFamily::E6:
    case LieFamily::E6_2: {
      const bool twisted = family == LieFamily::E6_2;
      x.order_g = qp(q, 36) * (qp(q, 12) - 1) * (twisted ? qp(q, 9) + 1 : qp(q, 9) - 1) * (qp(q, 8) - 1) *
                  (qp(q, 6) - 1) * (twisted ? qp(q, 5) + 1 : qp(q, 5) - 1) * (qp(q, 2) - 1);
      x.d = gcd_u64(3, twisted ? q + 1 : q - 1);
      x.epsilon = twisted ? 2 * e : e;
      x.g = twisted ? 1 : 2;
      break;
    }
    case LieFamily::D4_3:
      x.order_g = qp(q, 12) * (qp(q, 8) + qp(q, 4) + 1) * (qp(q, 6) - 1) * (qp(q, 2) - 1);
      x.epsilon = 3 * e;
      break;
    case LieFamily::E7:
      x.order_g = qp(q, 63);
      for (unsigned k : {18, 14, 12, 10, 8, 6, 2}) x.order_g *= qp(q, k) - 1;
      x.d = gcd_u64(2, q - 1);
      x.epsilon = e;
      break;
    case LieFamily::E8:
      x.order_g = qp(q, 120);
      for (unsigned k : {30, 24, 20, 18, 14, 12, 8, 2}) x.order_g *= qp(q, k) - 1;
      x.epsilon = e;
      break;
    case LieFamily::B2_2:
      restrict(!odd_power_of(x.p, e, 2), "q = 2^{2m+1}, m >= 1");
      x.order_g = qp(q, 2) * (qp(q, 2) + 1) * (q - 1);
      x.epsilon = e;
      break;
    case LieFamily::G2_2:
      restrict(!odd_power_of(x.p, e, 3), "q = 3^{2m+1}, m >= 1");
      x.order_g = qp(q, 3) * (qp(q, 3) + 1) * (q - 1);
      x.epsilon = e;
      break;
    case LieFamily::F4_2:
    case LieFamily::F4_2Tits:
      if (family == LieFamily::F4_2)
        restrict(!odd_power_of(x.p, e, 2), "q = 2^{2m+1}, m >= 1");
      else
        restrict(q != 2, "q = 2");
      x.order_g = qp(q, 12) * (qp(q, 6) + 1) * (qp(q, 4) - 1) * (qp(q, 3) + 1) * (q - 1);
      if (family == LieFamily::F4_2Tits) {
        x.d = 2;
        x.epsilon = 1;
      } else {
        x.epsilon = e;
      }
      break;
  }
  if (x.name.empty()) x.name = family_tag(family) + (family == LieFamily::F4_2Tits ? "" : "(" + num(q) + ")");
  x.out = x.d * x.epsilon * x.g;
  if (x.order_g % x.d != 0) throw Error("lie_datum: d does not divide |G| for " + x.name);
  x.order_t = x.order_g / x.d;
  return x;
}

SweepReport sweep_ineq3(const std::vector<LieFamily>& families, unsigned max_n, std::uint64_t max_q) {
  SweepReport rep;
  auto add = [&](LieFamily f, unsigned n, std::uint64_t q) {
    LieDatum x;
    try {
      x = lie_datum(f, n, q);
    } catch (const DomainError& err) {
      const unsigned rank = f == LieFamily::A || f == LieFamily::A2 ? n - 1 : n;
      rep.skipped.push_back(family_tag(f) + num(rank) + "(" + num(q) + "): " + err.what());
      return;
    }
    SweepRow row{x, 3 * BigInt(x.d) * pow(BigInt(x.out), 3), x.order_g, false};
    row.pass = row.lhs < row.rhs;
    if (!row.pass) rep.failures.push_back(row);
    rep.rows.push_back(std::move(row));
  };
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    std::uint64_t p;
    unsigned e;
    if (prime_power(q, p, e)) qs.push_back(q);
  }
  for (LieFamily f : families) {
    if (f == LieFamily::F4_2Tits) {
      add(f, 0, 2);
      continue;
    }
    unsigned lo = 0;
    switch (f) {
      case LieFamily::A: lo = 3; break;
      case LieFamily::A2: lo = 3; break;
      case LieFamily::B: lo = 3; break;
      case LieFamily::C: lo = 2; break;
      case LieFamily::D:
      case LieFamily::D2: lo = 4; break;
      default: break;
    }
    for (std::uint64_t q : qs) {
      if (!is_classical(f)) {
        std::uint64_t p;
        unsigned e;
        prime_power(q, p, e);
        bool suzuki_ree = f == LieFamily::B2_2 || f == LieFamily::F4_2 || f == LieFamily::G2_2;
        if (suzuki_ree && !odd_power_of(p, e, f == LieFamily::G2_2 ? 3 : 2)) continue;
        add(f, 0, q);
        continue;
      }
      for (unsigned n = lo; n <= max_n; ++n) add(f, n, q);
    }
  }
  return rep;
}

bool helper_bound(std::uint64_t q) {
  std::uint64_t p;
  unsigned e;
  if (!prime_power(q, p, e)) throw InvalidInput("q = " + num(q) + " is not a prime power");
  return 2 * BigInt(e) * e * e <= BigInt(q) * q;
}

Psl2Check psl2_bound_check(std::uint64_t q) {
  Psl2Check c;
  c.q = q;
  if (q < 4 || !prime_power(q, c.p, c.e)) throw InvalidInput("psl2_bound_check: q must be a prime power >= 4");
  if (q == 4 || q == 5) {
    c.redirect = true;
    c.redirect_to = "A5";
    return c;
  }
  if (q == 9) {
    c.redirect = true;
    c.redirect_to = "A6";
    return c;
  }
  const BigInt bq = q, be = c.e;
  const BigInt order_t = BigInt(bq * (bq * bq - 1)) / (q % 2 == 0 ? 1 : 2);
  BigInt a_t, out;
  if (q % 2 == 0) {
    c.lhs = 3 * pow(be, 3);
    c.rhs = pow(bq - 2, 3);
    a_t = bq + 1;
    out = be;
  } else {
    c.lhs = 3 * pow(4 * be, 3);
    c.rhs = pow(bq - 1, 3);
    a_t = bq;
    out = 2 * be;
  }
  c.reduced_pass = c.lhs < c.rhs;
  // a(Aut T) <= a(T) |Out T|.
  c.full_pass = 3 * pow(a_t * a_t * out, 3) < pow(order_t, 3);
  return c;
}

bool alt_bound_check(unsigned n) {
  if (n < 5) throw InvalidInput("alt_bound_check: n must be at least 5");
  BigInt half_fact = 1;
  for (unsigned i = 3; i <= n; ++i) half_fact *= i;
  return pow(BigInt(3), 2 * n + 1) < pow(half_fact, 3);
}

SporadicCheck sporadic_check(std::uint64_t out) {
  SporadicCheck s;
  s.out = out;
  s.lhs = 3 * out * out * out;
  s.within_premise = out >= 1 && out <= 2;
  s.pass = s.within_premise && s.lhs <= s.bound && s.bound < s.min_order;
  return s;
}

}  // namespace hgl
