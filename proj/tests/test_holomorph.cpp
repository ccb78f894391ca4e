#include <doctest.h>

#include <random>

#include "hgl/catalog.hpp"
#include "hgl/holomorph.hpp"
#include "hgl/iso_aut.hpp"
#include "hgl/structure.hpp"
#include "support/oracles.hpp"

using namespace hgl;

namespace {

PermGroup quaternion8() {
  // Left regular action of Q8 on itself, elements numbered as +-1, +-i, +-j, +-k.
  return PermGroup::from_generators({Permutation::from_cycles("(0 2 1 3)(4 6 5 7)", 8),
                                     Permutation::from_cycles("(0 4 1 5)(2 7 3 6)", 8)});
}

HolElement random_hol(const Holomorph& hol, std::mt19937_64& rng) {
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(hol.degree() - 1));
  return {pick(rng), hol.aut().random_element(rng)};
}

}  // namespace

TEST_CASE("index_group tables") {
  auto c3 = index_group(build_group("C3"));
  REQUIRE(c3->order() == 3);
  for (ElementIndex x = 0; x < 3; ++x) {
    CHECK(c3->mul(0, x) == x);
    CHECK(c3->mul(x, 0) == x);
  }
  CHECK(c3->element(0).is_identity());

  auto s3 = index_group(build_group("S3"));
  int involutions = 0;
  for (ElementIndex x = 0; x < 6; ++x) involutions += s3->elem_order(x) == 2;
  CHECK(involutions == 3);

  for (const char* s : {"A5", "S4", "D10", "F21", "E(2,3)", "C12", "A4xC5"}) {
    auto g = index_group(build_group(s));
    const auto n = g->order();
    CHECK(n == build_group(s).size());
    CHECK(g->has_table());
    for (ElementIndex a = 0; a < n; ++a) {
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->mul(g->inv(a), a) == 0);
      CHECK(g->element(a) * g->element(0) == g->element(a));
      for (ElementIndex b = 0; b < n; ++b)
        for (ElementIndex c = 0; c < n && n <= 60; ++c)
          REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
    for (ElementIndex i = 1; i < n; ++i)
      CHECK(g->element(i) == g->element(g->bfs_parent(i)) * g->element(g->generators()[g->bfs_generator(i)]));
  }
  // Determinism: reindexing the same generating set gives the same table.
  auto a = index_group(build_group("A5"));
  auto b = index_group(build_group("A5"));
  for (ElementIndex i = 0; i < 60; ++i) CHECK(a->element(i) == b->element(i));

  // Large groups fall back to lookups.
  auto big = index_group(build_group("A7"));
  CHECK_FALSE(big->has_table());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(big->order() - 1));
  for (int k = 0; k < 500; ++k) {
    ElementIndex x = pick(rng), y = pick(rng), z = pick(rng);
    CHECK(big->mul(big->mul(x, y), z) == big->mul(x, big->mul(y, z)));
  }
  CHECK_THROWS_AS(index_group(build_group("A8"), 1000), CapExceeded);
}

TEST_CASE("isomorphism tests") {
  CHECK_FALSE(are_isomorphic(build_group("C4"), build_group("E(2,2)")));
  auto a5 = are_isomorphic(build_group("PSL(2,4)"), build_group("A5"));
  REQUIRE(a5);
  CHECK(a5->verify());
  auto p = are_isomorphic(build_group("PSL(3,2)"), build_group("PSL(2,7)"));
  REQUIRE(p);
  CHECK(p->verify());
  CHECK(are_isomorphic(build_group("PSL(2,5)"), build_group("A5")));
  CHECK(are_isomorphic(build_group("PSL(2,9)"), build_group("A6")));
  CHECK(are_isomorphic(build_group("D6"), build_group("S3")));
  CHECK(are_isomorphic(build_group("C2xC3"), build_group("C6")));
  CHECK(are_isomorphic(build_group("D4"), build_group("E(2,2)")));
  CHECK_FALSE(are_isomorphic(build_group("D8"), quaternion8()));
  CHECK_FALSE(are_isomorphic(build_group("C4xC2"), build_group("D8")));
  CHECK_FALSE(are_isomorphic(build_group("A4"), build_group("D12")));
  CHECK_FALSE(are_isomorphic(build_group("S4"), build_group("A4xC2")));
  CHECK_FALSE(are_isomorphic(build_group("C6"), build_group("C5")));
  CHECK_THROWS_AS(are_isomorphic(build_group("PSL(2,7)"), build_group("PSL(3,2)"), 100), CapExceeded);

  // Reflexive, symmetric, and closed under composition.
  std::vector<std::string> specs{"S3", "D6", "C6", "C2xC3", "A4", "D8", "F21", "E(2,3)", "C2xC2xC2", "S4",
                                 "A5", "PSL(2,5)", "PSL(2,4)"};
  for (const auto& x : specs) {
    auto id = are_isomorphic(build_group(x), build_group(x));
    REQUIRE_MESSAGE(id, x);
    CHECK(id->verify());
    for (const auto& y : specs) {
      auto f = are_isomorphic(build_group(x), build_group(y));
      auto b = are_isomorphic(build_group(y), build_group(x));
      CHECK_MESSAGE(f.has_value() == b.has_value(), x << " vs " << y);
      if (f) {
        CHECK(f->verify());
        CHECK(f->inverse().verify());
        CHECK(f->compose(*b).verify());
      }
    }
  }
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(build_group("C4")).order() == 2);
  CHECK(automorphism_group(build_group("S3")).order() == 6);
  CHECK(automorphism_group(build_group("E(2,2)")).order() == 6);
  CHECK(automorphism_group(build_group("C9")).order() == 6);
  CHECK(automorphism_group(build_group("C1")).order() == 1);
  CHECK(automorphism_group(build_group("C2")).order() == 1);

  // Against the brute-force oracle.
  for (const char* s : {"C4", "C6", "C8", "S3", "E(2,2)", "D8", "A4", "C3xC3", "D10", "D12", "C4xC2", "C2xC6",
                        "E(2,3)", "F21", "S4", "E(2,4)", "C4xC4"}) {
    auto g = build_group(s);
    oracle::Table t(g.elements());
    auto brute = oracle::brute_automorphisms(t);
    CHECK_MESSAGE(automorphism_group(g).order() == brute.size(), s);
  }
  {
    oracle::Table t(quaternion8().elements());
    CHECK(automorphism_group(quaternion8()).order() == oracle::brute_automorphisms(t).size());
    CHECK(oracle::brute_automorphisms(t).size() == 24);
  }

  for (const char* s : {"S3", "D8", "A4", "F21", "S4", "A5", "E(3,2)"}) {
    auto g = index_group(build_group(s));
    auto aut = automorphism_group(*g);
    for (const auto& a : aut.generators()) CHECK(is_automorphism(*g, a));
    for (ElementIndex x = 0; x < g->order(); ++x) CHECK(aut.contains(conjugation_aut(*g, x)));
  }
  CHECK_THROWS_AS(automorphism_group(build_group("A7")), CapExceeded);
}

TEST_CASE("outer automorphism index") {
  struct Row {
    const char* spec;
    std::uint64_t out;
  };
  for (auto [s, out] : std::vector<Row>{{"A5", 2}, {"PSL(2,7)", 2}, {"PSL(2,8)", 3}, {"A6", 4}}) {
    auto g = index_group(build_group(s));
    auto aut = automorphism_group(*g);
    std::vector<Permutation> inner;
    for (ElementIndex x : g->generators()) inner.push_back(conjugation_aut(*g, x));
    auto inn = PermGroup::generated_by(g->order(), inner);
    CHECK_MESSAGE(inn.order() == g->order(), s);
    CHECK_MESSAGE(aut.order() == inn.order() * out, s);
    CHECK(aut.order() == known_aut_group(parse_spec(s)).aut.order());
  }
}

TEST_CASE("holomorph arithmetic") {
  auto g = index_group(build_group("S3"));
  auto hol = Holomorph::of(g);
  CHECK(hol->order() == 36);
  CHECK(hol->as_perm_group().order() == 36);
  CHECK(hol_group(build_group("C4")).order() == 8);
  CHECK(hol_group(build_group("C4")).degree() == 4);
  CHECK(hol_group(build_group("C9")).order() == 54);
  CHECK(hol_group(build_group("S3")).order() == 36);

  // The documented sample: [g, C(g^-1)] squared.
  for (ElementIndex x = 0; x < 6; ++x) {
    HolElement y{x, conjugation_aut(*g, g->inv(x))};
    auto sq = hol_mult(*hol, y, y);
    CHECK(sq.g == g->mul(x, g->mul(g->inv(x), g->mul(x, x))));
    CHECK(sq.alpha == conjugation_aut(*g, g->mul(g->inv(x), g->inv(x))));
    CHECK(hol->to_perm(sq) == hol->to_perm(y) * hol->to_perm(y));
  }
  // Conjugation by a 3-cycle has order 3.
  for (ElementIndex x = 0; x < 6; ++x) {
    if (g->elem_order(x) == 3) CHECK(conjugation_aut(*g, x).order() == 3);
  }
  CHECK(conjugation_aut(*g, 0).is_identity());
  auto c5 = index_group(build_group("C5"));
  for (ElementIndex x = 0; x < 5; ++x) CHECK(conjugation_aut(*c5, x).is_identity());

  std::mt19937_64 rng(11);
  for (const char* s : {"C4", "S3", "D8", "A4", "C2xC6", "E(2,3)", "S4", "C3xC3xC2", "D12"}) {
    auto gg = index_group(build_group(s));
    auto h = Holomorph::of(gg);
    const auto n = gg->order();
    auto perm_group = h->as_perm_group();
    CHECK_MESSAGE(perm_group.order() == h->order(), s);
    for (int k = 0; k < 40; ++k) {
      auto x = random_hol(*h, rng), y = random_hol(*h, rng);
      auto xy = hol_mult(*h, x, y);
      for (ElementIndex t = 0; t < n; ++t) REQUIRE(hol_action(*h, xy, t) == hol_action(*h, x, hol_action(*h, y, t)));
      CHECK(h->to_perm(xy) == h->to_perm(x) * h->to_perm(y));
      CHECK(hol_mult(*h, x, h->inverse(x)) == h->identity());
      CHECK(perm_group.contains(h->to_perm(x)));
      auto back = h->decode(h->to_perm(x));
      REQUIRE(back);
      CHECK(*back == x);
    }
    for (ElementIndex a = 0; a < n; ++a) {
      // lambda is left translation, rho is t -> t a^-1, [0, alpha] acts as alpha.
      for (ElementIndex t = 0; t < n; ++t) {
        CHECK(h->action(h->lambda(a), t) == gg->mul(a, t));
        CHECK(h->action(h->rho(a), t) == gg->mul(t, gg->inv(a)));
      }
      for (ElementIndex b = 0; b < n; ++b) {
        CHECK(hol_mult(*h, h->lambda(a), h->lambda(b)) == h->lambda(gg->mul(a, b)));
        CHECK(hol_mult(*h, h->rho(a), h->rho(b)) == h->rho(gg->mul(a, b)));
        CHECK(h->to_perm(h->lambda(a)) * h->to_perm(h->rho(b)) == h->to_perm(h->rho(b)) * h->to_perm(h->lambda(a)));
      }
    }
    for (const auto& a : h->aut().generators()) CHECK(h->to_perm(HolElement{0, a}) == a);
    // Decoding fails for a permutation outside Hol(G) when G is nonabelian.
    if (!build_group(s).is_abelian()) {
      auto inv_perm = Permutation::from_images_unchecked([&] {
        std::vector<Point> v(n);
        for (ElementIndex t = 0; t < n; ++t) v[t] = gg->inv(t);
        return v;
      }());
      CHECK_FALSE(h->decode(inv_perm));
    }
  }
  (void)rng;
}

TEST_CASE("lambda and rho verify as regular embeddings") {
  for (const char* s : {"C6", "S3", "A4", "D8", "E(2,3)", "A5"}) {
    auto src = build_group(s);
    auto gg = index_group(src);
    auto h = Holomorph::of(gg);
    RegularEmbedding lam{src, {}, std::nullopt, std::nullopt};
    RegularEmbedding rh{src, {}, std::nullopt, std::nullopt};
    for (const auto& x : src.generators()) {
      lam.images.push_back(h->lambda(gg->index_of(x)));
      rh.images.push_back(h->rho(gg->index_of(x)));
    }
    auto r1 = verify_embedding(*h, lam);
    auto r2 = verify_embedding(*h, rh);
    CHECK_MESSAGE(r1.ok(), s);
    CHECK_MESSAGE(r2.ok(), s);
    CHECK(r1.exhaustive_pairs);
    CHECK(r1.pairs_checked == src.size() * src.size());

    // The fixed-point free pair forms reproduce lambda and rho.
    std::vector<ElementIndex> id, triv(src.generators().size(), 0);
    for (const auto& x : src.generators()) id.push_back(gg->index_of(x));
    RegularEmbedding fl{src, lam.images, id, triv};
    RegularEmbedding fr{src, rh.images, triv, id};
    CHECK(verify_embedding(*h, fl).ok());
    CHECK(verify_embedding(*h, fr).ok());

    // Breaking one generator image is detected.
    if (!src.is_abelian()) {
      auto bad = lam;
      bad.images[0] = h->rho(gg->index_of(src.generators()[0]));
      CHECK_FALSE(verify_embedding(*h, bad).ok());
    }
    RegularEmbedding trivial{src, std::vector<HolElement>(src.generators().size(), h->identity()), std::nullopt,
                             std::nullopt};
    auto rt = verify_embedding(*h, trivial);
    CHECK(rt.homomorphism);
    CHECK_FALSE(rt.regular);
  }
}
