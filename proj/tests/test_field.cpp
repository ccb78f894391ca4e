#include <doctest.h>

#include <random>
#include <set>

#include "hgl/field.hpp"
#include "hgl/matrix_groups.hpp"

using namespace hgl;

namespace {

// GF(4) written out by hand: 0, 1, w, w^2 = w + 1 encoded as 0, 1, 2, 3.
constexpr unsigned kMul4[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
unsigned add4(unsigned a, unsigned b) { return a ^ b; }
unsigned conj4(unsigned a) { return kMul4[a][a]; }

unsigned pair4(const unsigned* v, const unsigned* w) {
  // (e_i, f_i) = 1 pairs coordinates 0-1 and 2-3.
  unsigned s = 0;
  s = add4(s, kMul4[v[0]][conj4(w[1])]);
  s = add4(s, kMul4[v[1]][conj4(w[0])]);
  s = add4(s, kMul4[v[2]][conj4(w[3])]);
  s = add4(s, kMul4[v[3]][conj4(w[2])]);
  return s;
}

}  // namespace

TEST_CASE("GF(4) uses w^2 = w + 1") {
  auto f = Field::make(2, 2);
  const Field::Elem w = 2;
  CHECK(f->mul(w, w) == f->add(w, 1));
  CHECK(f->add(f->add(f->mul(w, w), w), 1) == 0);
  CHECK(f->to_string(f->mul(w, w)) == "w2");
  CHECK(f->parse("w2") == 3);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) CHECK(f->mul(a, b) == kMul4[a][b]);
}

TEST_CASE("prime fields and Frobenius") {
  auto f7 = Field::make(7, 1);
  CHECK(f7->q() == 7);
  CHECK(f7->mul(3, 5) == 1);
  CHECK(f7->add(4, 5) == 2);
  CHECK(f7->generator() == 3);
  auto f9 = Field::make(3, 2);
  unsigned frob_order = 0;
  for (unsigned k = 1; k <= 4 && !frob_order; ++k) {
    bool id = true;
    for (Field::Elem x = 0; x < 9; ++x) {
      Field::Elem y = x;
      for (unsigned i = 0; i < k; ++i) y = f9->frobenius(y);
      id = id && y == x;
    }
    if (id) frob_order = k;
  }
  CHECK(frob_order == 2);
  CHECK_THROWS_AS(Field::make(4, 1), InvalidInput);
  CHECK_THROWS_AS(Field::make(2, 17), InvalidInput);
  CHECK(Field::make(2, 2) == Field::make(2, 2));
}

TEST_CASE("field axioms") {
  std::mt19937_64 rng(3);
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4},
           {5, 2}, {3, 3}, {7, 2}, {2, 10}, {13, 3}, {2, 16}}) {
    auto f = Field::make(p, e);
    const unsigned q = f->q();
    auto check = [&](Field::Elem a, Field::Elem b, Field::Elem c) {
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
      CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
    };
    if (q <= 16) {
      for (Field::Elem a = 0; a < q; ++a)
        for (Field::Elem b = 0; b < q; ++b)
          for (Field::Elem c = 0; c < q; ++c) check(a, b, c);
    } else {
      std::uniform_int_distribution<Field::Elem> d(0, q - 1);
      for (int t = 0; t < 300; ++t) check(d(rng), d(rng), d(rng));
    }
    std::uniform_int_distribution<Field::Elem> nz(1, q - 1);
    for (int t = 0; t < 50; ++t) CHECK(f->pow(nz(rng), q - 1) == 1);
    // The residue of x generates the multiplicative group.
    std::set<Field::Elem> powers;
    for (unsigned k = 0; k < q - 1; ++k) powers.insert(f->exp(k));
    CHECK(powers.size() == q - 1);
  }
}

TEST_CASE("projective group orders") {
  auto psl27 = projective_group(ProjectiveKind::PSL2, 7);
  CHECK(psl27.order() == 168);
  CHECK(psl27.degree() == 8);
  CHECK(projective_group(ProjectiveKind::PSL2, 4).order() == 60);
  CHECK(projective_group(ProjectiveKind::PGL2, 5).order() == 120);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u}) {
    std::uint64_t p;
    unsigned e;
    REQUIRE(prime_power(q, p, e));
    std::uint64_t pgl = std::uint64_t(q) * (q * q - 1);
    CHECK(projective_group(ProjectiveKind::PSL2, q).order() == pgl / gcd_u64(2, q - 1));
    CHECK(projective_group(ProjectiveKind::PGL2, q).order() == pgl);
    CHECK(projective_group(ProjectiveKind::PGammaL2, q).order() == pgl * e);
    CHECK(projective_group(ProjectiveKind::PSL2, q).is_transitive());
  }
  CHECK_THROWS_AS(projective_group(ProjectiveKind::PSL2, 6), InvalidInput);
}

TEST_CASE("matrix arithmetic") {
  auto f = Field::make(3, 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Field::Elem> d(0, 8);
  int invertible = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix m(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
    if (m.determinant() == 0) {
      CHECK(m.rank() < 3);
      CHECK_THROWS_AS(m.inverse(), DomainError);
      continue;
    }
    ++invertible;
    CHECK((m * m.inverse()).is_identity());
    CHECK((m.inverse() * m).is_identity());
    Matrix n(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) n(i, j) = d(rng);
    CHECK((m * n).determinant() == f->mul(m.determinant(), n.determinant()));
  }
  CHECK(invertible > 100);
}

TEST_CASE("SU_4(2) membership") {
  auto f = gf4();
  auto [A, B] = su42_witness_matrices();
  CHECK(su42_contains(Matrix::identity(f, 4)));
  CHECK(su42_contains(A));
  CHECK(su42_contains(B));
  Matrix d(f, {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  CHECK(d.determinant() == 2);  // w^4 = w
  CHECK_FALSE(su42_contains(d));
  CHECK_THROWS_AS(su42_contains(Matrix::identity(f, 3)), InvalidInput);

  CHECK(A.pow(9).is_identity());
  CHECK_FALSE(A.pow(3).is_identity());
  CHECK(B.pow(3).is_identity());
  CHECK(B * A == A.pow(4) * B);

  // Closure under products and inverses.
  auto gens = su42_generators(1);
  gens.push_back(A);
  gens.push_back(B);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Matrix m = gens[rng() % gens.size()] * gens[rng() % gens.size()] * gens[rng() % gens.size()];
    CHECK(su42_contains(m));
    CHECK(su42_contains(m.inverse()));
  }
}

TEST_CASE("isotropic planes") {
  const auto& planes = isotropic_planes();
  CHECK(planes.size() == 27);

  // Independent count: ordered isotropic bases divided by |GL_2(4)| = 180.
  std::uint64_t ordered = 0;
  for (unsigned a = 1; a < 256; ++a)
    for (unsigned b = 1; b < 256; ++b) {
      unsigned v[4], w[4];
      for (int j = 0; j < 4; ++j) {
        v[j] = (a >> (2 * j)) & 3;
        w[j] = (b >> (2 * j)) & 3;
      }
      bool dependent = false;
      for (unsigned c = 1; c < 4 && !dependent; ++c) {
        bool same = true;
        for (int j = 0; j < 4; ++j) same = same && kMul4[c][v[j]] == w[j];
        dependent = same;
      }
      if (dependent) continue;
      if (pair4(v, v) || pair4(v, w) || pair4(w, w)) continue;
      ++ordered;
    }
  CHECK(ordered == 27 * 180);

  auto f = gf4();
  Matrix F = su42_form();
  for (const auto& P : planes) {
    CHECK(P.basis.rank() == 2);
    CHECK(P.basis.rref() == P.basis);
    Matrix g = P.basis * F * P.basis.frobenius().transpose();
    CHECK(g == Matrix(f, 2, 2));
  }
  for (std::size_t i = 0; i + 1 < planes.size(); ++i)
    CHECK(planes[i].basis.entries() < planes[i + 1].basis.entries());
  std::size_t w = plane_w_index();
  CHECK(planes[w].basis == Matrix(f, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
}

TEST_CASE("action on planes") {
  auto f = gf4();
  CHECK(action_on_planes(Matrix::identity(f, 4)).is_identity());
  auto [A, B] = su42_witness_matrices();
  auto pa = action_on_planes(A), pb = action_on_planes(B);
  auto J = group_from_generators({pa, pb});
  CHECK(J.order() == 27);
  CHECK(J.is_regular());

  std::size_t w = plane_w_index();
  std::set<Point> images;
  for (unsigned m = 0; m < 9; ++m) {
    // The image of W under a matrix is spanned by its rows 1 and 3.
    Matrix am = A.pow(m);
    Matrix rows(f, {{am(0, 0), am(0, 1), am(0, 2), am(0, 3)}, {am(2, 0), am(2, 1), am(2, 2), am(2, 3)}});
    CHECK(plane_index(rows) == action_on_planes(am)(static_cast<Point>(w)));
    images.insert(action_on_planes(am)(static_cast<Point>(w)));
  }
  images.insert(pb(static_cast<Point>(w)));
  CHECK(images.size() == 10);

  auto gens = su42_generators(1);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const Matrix& m = gens[rng() % gens.size()];
    const Matrix& n = t % 2 ? A : gens[rng() % gens.size()];
    CHECK(action_on_planes(m * n) == action_on_planes(n) * action_on_planes(m));
  }

  auto G = su42_plane_group(1);
  CHECK(G.order() == 25920);
  CHECK(G.is_transitive());
  CHECK(G.contains_group(J));
  CHECK(G.stabilizer(static_cast<Point>(w)).order() == 960);
  CHECK_THROWS_AS(action_on_planes(Matrix(f, {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}})),
                  DomainError);
}
