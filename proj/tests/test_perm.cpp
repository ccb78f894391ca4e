#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "hgl/perm.hpp"
#include "hgl/structure.hpp"
#include "support/oracles.hpp"

using namespace hgl;

namespace {

Permutation cyc(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }

PermGroup a5() { return group_from_generators({cyc("(0 1 2)", 5), cyc("(0 1 2 3 4)", 5)}); }
PermGroup s4() { return group_from_generators({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)}); }
PermGroup a4xc5() {
  return group_from_generators({cyc("(0 1 2)", 9), cyc("(0 1)(2 3)", 9), cyc("(4 5 6 7 8)", 9)});
}

std::multiset<std::uint64_t> factor_orders(const StructureReport& r) {
  std::multiset<std::uint64_t> m;
  for (const auto& f : r.composition_factors) m.insert(f.order);
  return m;
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  auto p = cyc("(0 1 2)(3 4)", 6);
  CHECK(p.to_cycles() == "(0 1 2)(3 4)");
  CHECK(p.order() == 6);
  CHECK(Permutation::identity(3).to_cycles() == "()");
  CHECK(cyc("()", 4).is_identity());
  CHECK_THROWS_AS(cyc("(0 1 1)", 3), InvalidInput);
  CHECK_THROWS_AS(cyc("(0 5)", 3), InvalidInput);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InvalidInput);
  CHECK_THROWS_AS(PermGroup::trivial(0), InvalidInput);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
}

TEST_CASE("composition is right to left") {
  auto a = cyc("(0 1)", 3), b = cyc("(1 2)", 3);
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * b)(1) == 2);
  CHECK((a * b)(0) == 1);
}

TEST_CASE("group orders") {
  CHECK(group_from_generators({cyc("(0 1 2 3 4)", 5)}).order() == 5);
  auto s5 = group_from_generators({cyc("(0 1)", 5), cyc("(0 1 2 3 4)", 5)});
  CHECK(s5.order() == 120);
  CHECK(oracle::brute_closure(s5.generators(), 5).size() == 120);
  CHECK(a5().order() == 60);
  CHECK(oracle::brute_closure(a5().generators(), 5).size() == 60);
  CHECK_THROWS_AS(group_from_generators({}), InvalidInput);
  CHECK_THROWS_AS(group_from_generators({cyc("(0 1)", 2), cyc("(0 1)", 3)}), InvalidInput);
  CHECK(PermGroup::trivial(1).order() == 1);
}

TEST_CASE("elements enumerates the group") {
  auto g = a4xc5();
  auto e = g.elements();
  auto brute = oracle::brute_closure(g.generators(), 9);
  std::sort(e.begin(), e.end());
  CHECK(e == brute);
}

TEST_CASE("regular and semiregular predicates") {
  auto c6 = group_from_generators({cyc("(0 1 2 3 4 5)", 6)});
  CHECK(c6.is_regular());
  CHECK(c6.is_semiregular());
  auto s3 = group_from_generators({cyc("(0 1)", 3), cyc("(0 1 2)", 3)});
  CHECK_FALSE(s3.is_regular());
  CHECK_FALSE(group_from_generators({cyc("(0 2 4)(1 3 5)", 6)}).is_regular());
  CHECK(group_from_generators({cyc("(0 2 4)(1 3 5)", 6)}).is_semiregular());
  CHECK(group_from_generators({cyc("(0 1)(2 3)", 4)}).is_semiregular());
  CHECK_FALSE(group_from_generators({cyc("(0 1)", 3)}).is_semiregular());

  std::vector<PermGroup> samples{c6, s3, a5(), s4(),
                                 group_from_generators({cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)}),
                                 group_from_generators({cyc("(0 1 2 3)", 4), cyc("(0 2)", 4)}),
                                 group_from_generators({cyc("(0 1)(2 3)", 4)})};
  for (const auto& g : samples)
    CHECK(g.is_regular() == (g.is_semiregular() && g.is_transitive()));
}

TEST_CASE("membership agrees with brute closure") {
  std::mt19937_64 rng(7);
  std::vector<PermGroup> groups{a5(), s4(), a4xc5(),
                                group_from_generators({cyc("(0 1 2 3)(4 5)", 6), cyc("(1 3)", 6)})};
  for (const auto& g : groups) {
    auto brute = oracle::brute_closure(g.generators(), g.degree());
    std::set<Permutation> in(brute.begin(), brute.end());
    REQUIRE(in.size() == g.size());
    for (int t = 0; t < 200; ++t) {
      Permutation w = Permutation::identity(g.degree());
      for (int k = 0; k < 12; ++k) w = w * g.generators()[rng() % g.generators().size()];
      CHECK(g.contains(w));
      std::vector<Point> img(g.degree());
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      Permutation r(img);
      CHECK(g.contains(r) == (in.count(r) > 0));
      CHECK(g.contains(g.random_element(rng)));
    }
  }
}

TEST_CASE("Lagrange for stabilizers and Sylow subgroups") {
  for (const auto& g : {a5(), s4(), a4xc5()}) {
    for (Point x = 0; x < g.degree(); ++x) {
      auto h = g.stabilizer(x);
      CHECK(g.order() % h.order() == 0);
      CHECK(g.order() == h.order() * g.orbit(x).size());
      for (const auto& s : h.generators()) CHECK(s(x) == x);
    }
    for (std::uint64_t p : prime_divisors(g.size())) {
      auto P = sylow_subgroup(g, p);
      CHECK(P.size() == p_part(g.size(), p));
      CHECK(g.contains_group(P));
    }
  }
}

TEST_CASE("Sylow examples") {
  CHECK(sylow_subgroup(group_from_generators({cyc("(0 1 2 3 4 5)", 6)}), 3).order() == 3);
  CHECK(sylow_subgroup(a5(), 5).order() == 5);
  CHECK(sylow_subgroup(a5(), 7).order() == 1);
}

TEST_CASE("structure reports") {
  auto r = structure_report(a4xc5());
  CHECK(r.order == 60);
  CHECK(r.is_soluble);
  CHECK_FALSE(r.is_nilpotent);
  CHECK(factor_orders(r) == std::multiset<std::uint64_t>{2, 2, 3, 5});
  CHECK(factor_orders(r) == oracle::Table(a4xc5().elements()).composition_factor_orders());

  auto ra5 = structure_report(a5());
  CHECK_FALSE(ra5.is_soluble);
  REQUIRE(ra5.composition_factors.size() == 1);
  CHECK(ra5.composition_factors[0].name == "A5");

  auto c8 = structure_report(group_from_generators({cyc("(0 1 2 3 4 5 6 7)", 8)}));
  CHECK(c8.is_nilpotent);
  CHECK(c8.is_soluble);
  CHECK(c8.is_abelian);

  auto rs4 = structure_report(s4());
  CHECK(factor_orders(rs4) == oracle::Table(s4().elements()).composition_factor_orders());
}

TEST_CASE("composition series has simple factors") {
  for (const auto& g : {s4(), a4xc5(), a5()}) {
    auto r = structure_report(g);
    BigInt prod = 1;
    for (const auto& f : r.composition_factors) prod *= f.order;
    CHECK(prod == g.order());
    const auto& series = r.composition_series;
    REQUIRE(series.size() == r.composition_factors.size() + 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      CHECK(is_normal(series[i], series[i + 1]));
      // The quotient is simple: no normal subgroup strictly between the two terms.
      oracle::Table t(series[i].elements());
      std::set<Permutation> lower;
      for (const auto& e : series[i + 1].elements()) lower.insert(e);
      std::vector<std::uint32_t> all(t.size()), low;
      std::iota(all.begin(), all.end(), 0);
      for (std::uint32_t k = 0; k < t.size(); ++k)
        if (lower.count(t.elems[k])) low.push_back(k);
      for (std::uint32_t k = 0; k < t.size(); ++k) {
        if (lower.count(t.elems[k])) continue;
        auto gens = low;
        gens.push_back(k);
        // Normal closure of lower + k by repeated conjugation.
        auto sub = t.closure(gens);
        bool grew = true;
        while (grew) {
          grew = false;
          std::set<std::uint32_t> s(sub.begin(), sub.end());
          for (auto a : all)
            for (auto x : sub) {
              auto c = t.mul[t.mul[a][x]][t.inverse(a)];
              if (!s.count(c)) {
                s.insert(c);
                grew = true;
              }
            }
          sub = t.closure({s.begin(), s.end()});
        }
        CHECK(sub.size() == t.size());
      }
    }
  }
}

TEST_CASE("element order multisets") {
  using M = std::map<std::uint64_t, std::uint64_t>;
  CHECK(element_orders_multiset(group_from_generators({cyc("(0 1 2 3)", 4)})) == M{{1, 1}, {2, 1}, {4, 2}});
  CHECK(element_orders_multiset(group_from_generators({cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)})) ==
        M{{1, 1}, {2, 3}});
  CHECK(element_orders_multiset(group_from_generators({cyc("(0 1)", 3), cyc("(0 1 2)", 3)})) ==
        M{{1, 1}, {2, 3}, {3, 2}});
  CHECK_THROWS_AS(element_orders_multiset(a5(), 10), CapExceeded);
}
