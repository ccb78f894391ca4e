#include "hgl/hgs.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hgl/iso_aut.hpp"
#include "hgl/structure.hpp"

namespace hgl {

namespace {

// Greedy generators for a subgroup given by all of its elements.
std::vector<Permutation> generators_of(const std::vector<Permutation>& elems) {
  std::vector<Permutation> sorted = elems;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Permutation& a, const Permutation& b) { return a.order() > b.order(); });
  std::unordered_set<Permutation, PermutationHash> in;
  in.insert(Permutation::identity(elems.front().degree()));
  std::vector<Permutation> gens;
  for (const auto& e : sorted) {
    if (in.count(e)) continue;
    gens.push_back(e);
    std::vector<Permutation> list(in.begin(), in.end());
    for (std::size_t k = 0; k < list.size(); ++k)
      for (const auto& g : gens) {
        Permutation y = g * list[k];
        if (in.insert(y).second) list.push_back(std::move(y));
      }
    if (in.size() == elems.size()) break;
  }
  return gens;
}

std::map<std::uint64_t, std::uint64_t> order_profile(const CayleyGroup& g) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (ElementIndex i = 0; i < g.order(); ++i) ++m[g.elem_order(i)];
  return m;
}

struct TupleHash {
  std::size_t operator()(const std::vector<Permutation>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& p : v) h ^= p.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct HolSetup {
  CayleyPtr gamma_index;
  HolPtr hol;
};

HolSetup setup(const PermGroup& gamma, const PermGroup& g, const HgsOptions& opts) {
  if (gamma.order() != g.order())
    throw InvalidInput("count_hgs: orders differ (" + to_string(gamma.order()) + " vs " + to_string(g.order()) + ")");
  if (g.order() > opts.cap) throw CapExceeded("count_hgs: order exceeds cap " + std::to_string(opts.cap));
  return {index_group(gamma), Holomorph::of(index_group(g))};
}

RegularEnumeration enumerate_typed(const Holomorph& hol, const CayleyGroup& gamma, const HgsOptions& opts) {
  RegularSearchOptions so = opts.search;
  so.order_profile = order_profile(gamma);
  return enumerate_regular_subgroups(hol, so, opts.cap);
}

}  // namespace

std::uint64_t subgroup_fingerprint(const std::vector<Permutation>& sorted_elements) {
  return TupleHash{}(sorted_elements);
}

RegularEnumeration enumerate_regular_subgroups(const Holomorph& hol, const RegularSearchOptions& opts,
                                               std::uint64_t cap) {
  const CayleyGroup& g = hol.group();
  const std::size_t n = g.order();
  if (n > cap) throw CapExceeded("enumerate_regular_subgroups: |G| = " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
  std::vector<Permutation> auts = hol.aut().elements();
  std::sort(auts.begin(), auts.end());
  std::vector<std::vector<Permutation>> cands(n);
  for (ElementIndex x = 1; x < n; ++x) {
    cands[x].reserve(auts.size());
    for (const auto& a : auts) cands[x].push_back(hol.to_perm(HolElement{x, a}));
  }
  auto res = search_regular_subgroups(n, cands, opts);
  RegularEnumeration out;
  out.complete = res.complete;
  out.nodes = res.nodes;
  for (auto& elems : res.subgroups) {
    RegularSubgroupRecord r;
    r.fingerprint = subgroup_fingerprint(elems);
    r.subgroup = PermGroup::generated_by(n, generators_of(elems));
    r.elements = std::move(elems);
    out.records.push_back(std::move(r));
  }
  return out;
}

void label_iso_types(RegularEnumeration& e, const std::vector<std::pair<std::string, PermGroup>>& candidates) {
  std::vector<std::pair<std::string, CayleyPtr>> idx;
  for (const auto& [name, grp] : candidates) idx.emplace_back(name, index_group(grp));
  for (auto& r : e.records) {
    auto cn = index_group(r.subgroup);
    for (const auto& [name, c] : idx)
      if (c->order() == cn->order() && find_isomorphism(c, cn)) {
        r.iso_type = name;
        break;
      }
  }
}

HgsCount count_hgs(const PermGroup& gamma, const PermGroup& g, const HgsOptions& opts, const std::string& gamma_name,
                   const std::string& g_name) {
  auto [cg, hol] = setup(gamma, g, opts);
  HgsCount out;
  out.gamma = gamma_name;
  out.g = g_name;
  auto en = enumerate_typed(*hol, *cg, opts);
  out.complete = en.complete;
  out.nodes = en.nodes;

  PermGroup aut_gamma = automorphism_group(*cg, opts.cap);
  std::vector<Permutation> aut_gamma_elems = aut_gamma.elements();
  std::sort(aut_gamma_elems.begin(), aut_gamma_elems.end());
  out.aut_gamma = aut_gamma.order();
  out.aut_g = hol->aut().order();

  std::vector<ElementIndex> gen_idx;
  for (const auto& s : gamma.generators()) gen_idx.push_back(cg->index_of(s));

  // All embeddings, as tuples of generator images, in a deterministic order.
  std::vector<std::vector<Permutation>> embeddings;
  for (const auto& r : en.records) {
    auto cn = index_group(r.subgroup);
    auto phi = find_isomorphism(cg, cn);
    if (!phi) continue;
    ++out.regular_subgroups;
    for (const auto& a : aut_gamma_elems) {
      std::vector<Permutation> tuple;
      for (ElementIndex s : gen_idx) tuple.push_back(cn->element(phi->image[a(s)]));
      embeddings.push_back(std::move(tuple));
    }
  }

  const auto& aut_gens = hol->aut().generators();
  std::unordered_set<std::vector<Permutation>, TupleHash> seen;
  for (const auto& e : embeddings) {
    if (seen.count(e)) continue;
    ++out.count;
    std::vector<std::vector<Permutation>> orbit{e};
    seen.insert(e);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& a : aut_gens) {
        std::vector<Permutation> c;
        c.reserve(orbit[k].size());
        for (const auto& p : orbit[k]) c.push_back(p.conjugate_by(a));
        if (seen.insert(c).second) orbit.push_back(std::move(c));
      }
    RegularEmbedding w;
    w.source = gamma;
    for (const auto& p : e) {
      auto he = hol->decode(p);
      if (!he) throw Error("count_hgs: regular subgroup element outside Hol(G)");
      w.images.push_back(std::move(*he));
    }
    out.witnesses.push_back(std::move(w));
  }

  out.crosscheck = Rational(BigInt(out.aut_gamma * out.regular_subgroups), out.aut_g);
  out.crosscheck_matches = out.crosscheck == Rational(out.count);
  return out;
}

HgsCount count_hgs(const GroupSpec& gamma, const GroupSpec& g, const HgsOptions& opts) {
  return count_hgs(build_group(gamma), build_group(g), opts, gamma.to_string(), g.to_string());
}

Rational aut_orbit_crosscheck(const PermGroup& gamma, const PermGroup& g, const HgsOptions& opts) {
  auto [cg, hol] = setup(gamma, g, opts);
  auto en = enumerate_typed(*hol, *cg, opts);
  if (!en.complete) throw BudgetExceeded("aut_orbit_crosscheck: search budget exhausted");
  std::uint64_t f = 0;
  for (const auto& r : en.records)
    if (find_isomorphism(cg, index_group(r.subgroup))) ++f;
  return Rational(BigInt(automorphism_group(*cg, opts.cap).order() * f), hol->aut().order());
}

Rational aut_orbit_crosscheck(const GroupSpec& gamma, const GroupSpec& g, const HgsOptions& opts) {
  return aut_orbit_crosscheck(build_group(gamma), build_group(g), opts);
}

RegularEmbedding inclusion_embedding(const Holomorph& hol, const PermGroup& n) {
  RegularEmbedding e;
  e.source = n;
  for (const auto& p : n.generators()) {
    auto he = hol.decode(p);
    if (!he) throw DomainError("inclusion_embedding: generator outside Hol(G)");
    e.images.push_back(std::move(*he));
  }
  return e;
}

HallWitness delta_p(const Holomorph& hol, const RegularEmbedding& beta, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("delta_p: p must be prime");
  const CayleyGroup& g = hol.group();
  StructureOptions so;
  so.composition_factors = false;
  if (!structure_report(g.source(), so).is_nilpotent) throw DomainError("delta_p: G is not nilpotent");
  HallWitness w;
  w.p = p;
  std::vector<bool> in_hp(g.order(), false);
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (g.elem_order(x) % p != 0) {
      in_hp[x] = true;
      w.h_p.push_back(x);
    }
  auto src = index_group(beta.source);
  w.expected_order = src->order() / p_part(src->order(), p);
  auto table = tabulate_embedding(hol, beta, *src);
  for (ElementIndex s = 0; s < src->order(); ++s)
    if (in_hp[table[s].g]) w.delta_elements.push_back(src->element(s));
  std::sort(w.delta_elements.begin(), w.delta_elements.end());
  if (w.delta_elements.empty()) return w;
  w.delta = PermGroup::generated_by(beta.source.degree(), generators_of(w.delta_elements));
  w.is_subgroup = w.delta.order() == w.delta_elements.size();
  return w;
}

ComplementResult find_complement(const PermGroup& g, const PermGroup& h, const RegularSearchOptions& opts,
                                 std::uint64_t group_cap, std::uint64_t index_cap) {
  if (g.order() > group_cap) throw CapExceeded("find_complement: |G| exceeds cap " + std::to_string(group_cap));
  if (!g.contains_group(h)) throw DomainError("find_complement: H is not a subgroup of G");
  if (g.order() % h.order() != 0) throw DomainError("find_complement: |H| does not divide |G|");
  BigInt idx = g.order() / h.order();
  if (idx > index_cap) throw CapExceeded("find_complement: index exceeds cap " + std::to_string(index_cap));
  const std::size_t m = static_cast<std::size_t>(idx);
  if (m == 1) return {PermGroup::trivial(g.degree()), true, 0};

  std::vector<Permutation> elems = g.elements(group_cap);
  std::sort(elems.begin(), elems.end());
  std::vector<Permutation> helems = h.elements(group_cap);
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> coset;
  std::vector<Permutation> reps;
  auto label = [&](const Permutation& x) {
    reps.push_back(x);
    for (const auto& y : helems) coset.emplace(x * y, static_cast<std::uint32_t>(reps.size() - 1));
  };
  label(Permutation::identity(g.degree()));
  for (const auto& x : elems)
    if (!coset.count(x)) label(x);

  // Each element acts on cosets (points 0..m-1) and on the original points (shifted by m).
  const std::size_t d = g.degree();
  std::vector<std::vector<Permutation>> cands(m);
  for (const auto& x : elems) {
    std::vector<Point> img(m + d);
    for (std::size_t c = 0; c < m; ++c) img[c] = coset.at(x * reps[c]);
    for (Point t = 0; t < d; ++t) img[m + t] = static_cast<Point>(m + x(t));
    Permutation ext = Permutation::from_images_unchecked(std::move(img));
    Point to = ext(0);
    if (to != 0) cands[to].push_back(std::move(ext));
  }
  RegularSearchOptions so = opts;
  so.stop_at_first = true;
  auto res = search_regular_subgroups(m, cands, so);
  ComplementResult out;
  out.complete = res.complete;
  out.nodes = res.nodes;
  if (res.subgroups.empty()) return out;
  std::vector<Permutation> js;
  for (const auto& e : res.subgroups.front()) {
    std::vector<Point> img(d);
    for (Point t = 0; t < d; ++t) img[t] = static_cast<Point>(e(static_cast<Point>(m + t)) - m);
    js.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  out.j = PermGroup::generated_by(d, generators_of(js));
  return out;
}

}  // namespace hgl
