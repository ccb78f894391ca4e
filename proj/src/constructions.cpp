#include "hgl/constructions.hpp"

#include <algorithm>

#include "hgl/catalog.hpp"
#include "hgl/iso_aut.hpp"
#include "hgl/matrix_groups.hpp"

namespace hgl {

namespace {

Permutation embed(const Permutation& p, std::size_t offset, std::size_t degree) {
  std::vector<Point> img(degree);
  for (Point x = 0; x < degree; ++x) img[x] = x;
  for (Point x = 0; x < p.degree(); ++x) img[offset + x] = static_cast<Point>(offset + p(x));
  return Permutation::from_images_unchecked(std::move(img));
}

std::size_t count_cycles_of_length(const Permutation& p, std::size_t len) {
  auto ct = p.cycle_type();
  return static_cast<std::size_t>(std::count(ct.begin(), ct.end(), len));
}

bool is_mersenne_prime(std::uint64_t p) {
  if (!is_prime(p)) return false;
  std::uint64_t q = p + 1;
  return (q & (q - 1)) == 0;
}

bool iso(const PermGroup& a, const PermGroup& b) { return are_isomorphic(a, b).has_value(); }

}  // namespace

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t d = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(embed(g, 0, d));
  for (const auto& g : b.generators()) gens.push_back(embed(g, a.degree(), d));
  return PermGroup::generated_by(d, std::move(gens));
}

bool is_complementary(const ComplementaryPair& pair) {
  if (pair.h.order() * pair.j.order() != pair.g.order()) return false;
  if (!pair.g.contains_group(pair.h) || !pair.g.contains_group(pair.j)) return false;
  const PermGroup& small = pair.h.order() <= pair.j.order() ? pair.h : pair.j;
  const PermGroup& other = pair.h.order() <= pair.j.order() ? pair.j : pair.h;
  for (const auto& x : small.elements())
    if (!x.is_identity() && other.contains(x)) return false;
  return true;
}

ConstructedEmbedding fpf_embedding(const FpfPair& pair, const VerifyOptions& opts) {
  const CayleyGroup& g = *pair.g;
  if (pair.gamma.order() != g.order()) throw DomainError("fpf_embedding: |Gamma| differs from |G|");
  const std::size_t k = pair.gamma.generators().size();
  if (pair.beta1.size() != k || pair.beta2.size() != k)
    throw InvalidInput("fpf_embedding: one image per generator required");
  ConstructedEmbedding out;
  out.hol = std::make_shared<const Holomorph>(pair.g, std::nullopt);
  out.embedding.source = pair.gamma;
  out.embedding.beta1 = pair.beta1;
  out.embedding.beta2 = pair.beta2;
  for (std::size_t i = 0; i < k; ++i)
    out.embedding.images.push_back(
        {g.mul(pair.beta1[i], g.inv(pair.beta2[i])), conjugation_aut(g, pair.beta2[i])});
  out.report = verify_embedding(*out.hol, out.embedding, opts);
  if (!out.report.homomorphism) throw DomainError("fpf_embedding: the maps are not homomorphisms");
  if (!out.report.regular) throw DomainError("fpf_embedding: the pair is not fixed-point free");
  return out;
}

FpfPair projection_pair(const ComplementaryPair& pair, const CayleyPtr& g) {
  FpfPair f;
  f.g = g;
  f.gamma = direct_product(pair.h, pair.j);
  for (const auto& h : pair.h.generators()) {
    f.beta1.push_back(g->index_of(h));
    f.beta2.push_back(0);
  }
  for (const auto& j : pair.j.generators()) {
    f.beta1.push_back(0);
    f.beta2.push_back(g->index_of(j));
  }
  return f;
}

ConstructedEmbedding untangle_embedding(const ComplementaryPair& pair, const VerifyOptions& opts, std::uint64_t cap) {
  if (!is_complementary(pair)) throw DomainError("untangle_embedding: H and J are not complementary in G");
  return fpf_embedding(projection_pair(pair, index_group(pair.g, cap)), opts);
}

TranslationGroup translation_group(std::uint64_t n) {
  if (n < 1) throw InvalidInput("translation_group: n must be positive");
  TranslationGroup t;
  while (((n >> t.e) & 1) == 0) ++t.e;
  t.m = n >> t.e;
  const std::uint64_t two_e = std::uint64_t{1} << t.e;
  auto point = [&](std::uint64_t v, std::uint64_t k) { return static_cast<Point>(v + two_e * k); };
  for (std::uint64_t v = 1; v < two_e; ++v) {
    std::vector<Point> img(n);
    for (std::uint64_t w = 0; w < two_e; ++w)
      for (std::uint64_t k = 0; k < t.m; ++k) img[point(w, k)] = point(w ^ v, k);
    t.v_translations.push_back(Permutation(img));
  }
  std::vector<Point> img(n);
  for (std::uint64_t w = 0; w < two_e; ++w)
    for (std::uint64_t k = 0; k < t.m; ++k) img[point(w, k)] = point(w, (k + 1) % t.m);
  t.k_shift = Permutation(img);
  for (unsigned b = 0; b < t.e; ++b) t.generators.push_back(t.v_translations[(std::uint64_t{1} << b) - 1]);
  if (t.m > 1) t.generators.push_back(t.k_shift);
  return t;
}

std::vector<ParityCheck> parity_checks(std::uint64_t n) {
  auto t = translation_group(n);
  std::vector<ParityCheck> out;
  for (std::size_t i = 0; i < t.v_translations.size(); ++i) {
    const auto& p = t.v_translations[i];
    ParityCheck c;
    c.element = "(" + std::to_string(i + 1) + ",0)";
    c.two_cycles = count_cycles_of_length(p, 2);
    c.even = p.is_even();
    c.ok = c.two_cycles == n / 2 && c.even;
    out.push_back(c);
  }
  if (t.m > 1) {
    ParityCheck c;
    c.element = "(0,1)";
    c.m_cycles = count_cycles_of_length(t.k_shift, t.m);
    c.even = t.k_shift.is_even();
    c.ok = c.m_cycles == (std::size_t{1} << t.e) && c.even;
    out.push_back(c);
  }
  return out;
}

AnGenResult an_gen_embedding(std::uint64_t n, const VerifyOptions& opts) {
  if (n < 4) throw InvalidInput("an_gen_embedding: n must be at least 4");
  if (n % 4 == 2) throw DomainError("n ≡ 2 mod 4: A_n has no subgroup complementary to A_{n-1}");
  AnGenResult r;
  r.n = n;
  auto t = translation_group(n);
  r.e = t.e;
  r.m = t.m;
  r.parity = parity_checks(n);
  for (const auto& c : r.parity)
    if (!c.ok) throw Error("an_gen_embedding: translation " + c.element + " failed the parity check");
  r.pair.g = build_group(GroupSpec::atom(GroupSpec::Kind::Alt, n), 10'000'000);
  r.pair.h = r.pair.g.stabilizer(static_cast<Point>(n - 1));
  r.pair.j = PermGroup::generated_by(n, t.generators);
  r.embedding = untangle_embedding(r.pair, opts);
  return r;
}

InvolutionCensus fpf_involutions(std::size_t n) {
  InvolutionCensus c;
  if (n % 2 != 0 || n == 0) return c;
  // Pair the least unmatched point with each later unmatched point in turn.
  std::vector<Point> img(n, 0);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    Point x = 0;
    while (x < n && used[x]) ++x;
    if (x == n) {
      ++c.count;
      if (!Permutation(img).is_even()) ++c.odd;
      return;
    }
    used[x] = true;
    for (Point y = x + 1; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      img[x] = y;
      img[y] = x;
      self(self);
      used[y] = false;
    }
    used[x] = false;
  };
  rec(rec);
  return c;
}

PermGroup psl2_11_a5_subgroup(const PermGroup& g) {
  if (g.order() != 660) throw InvalidInput("psl2_11_a5_subgroup: expected a group of order 660");
  auto elems = g.elements();
  std::sort(elems.begin(), elems.end());
  std::vector<Permutation> inv, ord3;
  for (const auto& x : elems) {
    if (x.order() == 2) inv.push_back(x);
    if (x.order() == 3) ord3.push_back(x);
  }
  for (const auto& x : inv)
    for (const auto& y : ord3) {
      if ((x * y).order() != 5) continue;
      auto h = PermGroup::from_generators({x, y});
      if (h.order() == 60) return h;
    }
  throw Error("psl2_11_a5_subgroup: no A5 found");
}

GuralnickPair guralnick_case_builder(GuralnickCase which, const std::string& param) {
  GuralnickPair out;
  out.which = which;
  auto& p = out.pair;
  switch (which) {
    case GuralnickCase::A: {
      std::uint64_t n = param.empty() ? 5 : std::stoull(param);
      if (n != 5 && n != 8 && n != 9) throw InvalidInput("case (a): n must be 5, 8 or 9");
      p.g = build_group(GroupSpec::atom(GroupSpec::Kind::Alt, n), 10'000'000);
      p.h = p.g.stabilizer(static_cast<Point>(n - 1));
      p.j = PermGroup::generated_by(n, translation_group(n).generators);
      out.description = "A" + std::to_string(n) + " with H = A" + std::to_string(n - 1);
      break;
    }
    case GuralnickCase::B: {
      std::string s = param.empty() ? "PSL(2,7)" : parse_spec(param).to_string();
      if (s == "PSL(2,11)") {
        out = guralnick_case_builder(GuralnickCase::C);
        out.description += " (index 11 is reached through case (c))";
        return out;
      }
      if (s == "PSL(2,7)") {
        p.g = build_group(s);
        p.h = p.g.stabilizer(0);
        p.j = sylow_subgroup(p.g, 2);
        out.description = "PSL(2,7) on 8 points, J a Sylow 2-subgroup";
      } else if (s == "PSL(3,2)") {
        p.g = build_group(s);
        p.h = p.g.stabilizer(0);
        p.j = sylow_subgroup(p.g, 7);
        out.description = "PSL(3,2) on 7 points, J a Sylow 7-subgroup";
      } else {
        throw InvalidInput("case (b): supported groups are PSL(2,7), PSL(3,2), PSL(2,11)");
      }
      break;
    }
    case GuralnickCase::C: {
      p.g = build_group("PSL(2,11)");
      p.h = psl2_11_a5_subgroup(p.g);
      p.j = sylow_subgroup(p.g, 11);
      out.description = "PSL(2,11) with H = A5 of index 11, J a Sylow 11-subgroup";
      break;
    }
    case GuralnickCase::D:
      throw InvalidInput("case (d): the Mathieu groups are out of scope");
    case GuralnickCase::E: {
      p.g = su42_plane_group();
      p.h = p.g.stabilizer(static_cast<Point>(plane_w_index()));
      auto [a, b] = su42_witness_matrices();
      p.j = PermGroup::from_generators({action_on_planes(a), action_on_planes(b)});
      out.description = "PSU(4,2) on 27 isotropic planes, H = Stab(W), J = <A, B>";
      break;
    }
  }
  if (!is_complementary(p)) throw Error("guralnick_case_builder: constructed subgroups are not complementary");
  return out;
}

bool SolInsolReport::ok() const {
  bool isos = std::all_of(iso_checks.begin(), iso_checks.end(), [](const auto& c) { return c.second; });
  return embedding.report.ok() && gamma_soluble && !g_nonabelian_factors.empty() && factors_differ && isos;
}

SolInsolReport sol_insol_verify(const std::string& which, std::uint64_t p, bool allow_large, const VerifyOptions& opts) {
  SolInsolReport r;
  r.which = which;
  auto& pr = r.pair;
  if (which == "i") {
    pr.g = build_group("A5");
    pr.h = pr.g.stabilizer(4);
    pr.j = PermGroup::from_generators({Permutation::from_cycles("(0 1 2 3 4)", 5)});
    r.iso_checks = {{"H ~ A4", iso(pr.h, build_group("A4"))}, {"J ~ C5", iso(pr.j, build_group("C5"))}};
  } else if (which == "ii") {
    pr.g = build_group("PSL(3,2)");
    pr.h = pr.g.stabilizer(0);
    pr.j = sylow_subgroup(pr.g, 7);
    r.iso_checks = {{"H ~ S4", iso(pr.h, build_group("S4"))}, {"J ~ C7", iso(pr.j, build_group("C7"))}};
  } else if (which == "iii") {
    if (!is_mersenne_prime(p) || p < 7) throw InvalidInput("sol_insol_verify: case iii needs a Mersenne prime p >= 7");
    if (p > 7 && !allow_large) throw InvalidInput("sol_insol_verify: p > 7 requires the large-instance flag");
    r.p = p;
    pr.g = build_group(GroupSpec::atom(GroupSpec::Kind::PSL2, p));
    pr.h = pr.g.stabilizer(0);
    pr.j = sylow_subgroup(pr.g, 2);
    auto f = GroupSpec::atom(GroupSpec::Kind::Frobenius, p);
    auto d = GroupSpec::atom(GroupSpec::Kind::Dihedral, p + 1);
    r.iso_checks = {{"H ~ " + f.to_string(), iso(pr.h, build_group(f))},
                    {"J ~ " + d.to_string(), iso(pr.j, build_group(d))}};
  } else {
    throw InvalidInput("sol_insol_verify: case must be i, ii or iii");
  }
  r.embedding = untangle_embedding(pr, opts);
  r.gamma_structure = structure_report(r.embedding.embedding.source);
  r.g_structure = structure_report(pr.g);
  r.gamma_soluble = r.gamma_structure.is_soluble;
  for (const auto& c : r.g_structure.composition_factors)
    if (c.family != "cyclic") r.g_nonabelian_factors.push_back(c.name);
  r.factors_differ = r.gamma_structure.composition_factors != r.g_structure.composition_factors;
  return r;
}

}  // namespace hgl
