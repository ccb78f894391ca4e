#include "hgl/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "hgl/catalog.hpp"
#include "hgl/cayley.hpp"
#include "hgl/iso_aut.hpp"
#include "hgl/structure.hpp"

namespace hgl {

namespace {

// Branch and bound over abelian subgroups A with candidate extensions drawn
// from the centralizer C of A. Every abelian B containing A lies in C, so
// |C| bounds the branch; new generators are taken in increasing index order.
class AbelianSearch {
 public:
  AbelianSearch(const CayleyGroup& g, std::atomic<std::uint64_t>& shared) : g_(g), shared_(shared) {}

  void seed(ElementIndex x) {
    std::vector<ElementIndex> a = cyclic(x);
    std::vector<ElementIndex> c;
    for (ElementIndex y = 0; y < g_.order(); ++y)
      if (commute(x, y)) c.push_back(y);
    std::vector<ElementIndex> gens{x};
    descend(a, c, -1, gens);
  }

  std::uint64_t best() const { return best_; }
  std::uint64_t bound() const { return std::max(best_, shared_.load(std::memory_order_relaxed)); }
  const std::vector<ElementIndex>& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool commute(ElementIndex x, ElementIndex y) const { return g_.mul(x, y) == g_.mul(y, x); }

  std::vector<ElementIndex> cyclic(ElementIndex x) const {
    std::vector<ElementIndex> v{0};
    for (ElementIndex p = x; p != 0; p = g_.mul(p, x)) v.push_back(p);
    std::sort(v.begin(), v.end());
    return v;
  }

  // <A, y> = union of the cosets A y^k for an abelian A commuting with y.
  std::vector<ElementIndex> join(const std::vector<ElementIndex>& a, ElementIndex y) const {
    std::vector<ElementIndex> out = a;
    for (ElementIndex p = y; !std::binary_search(a.begin(), a.end(), p); p = g_.mul(p, y))
      for (ElementIndex s : a) out.push_back(g_.mul(s, p));
    std::sort(out.begin(), out.end());
    return out;
  }

  void descend(const std::vector<ElementIndex>& a, const std::vector<ElementIndex>& c, std::int64_t min_index,
               std::vector<ElementIndex>& gens) {
    ++nodes_;
    if (a.size() > best_) {
      best_ = a.size();
      witness_ = gens;
      std::uint64_t cur = shared_.load();
      while (cur < best_ && !shared_.compare_exchange_weak(cur, best_)) {
      }
    }
    for (ElementIndex y : c) {
      if (c.size() <= bound()) return;
      if (static_cast<std::int64_t>(y) <= min_index || std::binary_search(a.begin(), a.end(), y)) continue;
      std::vector<ElementIndex> c2;
      for (ElementIndex z : c)
        if (commute(y, z)) c2.push_back(z);
      if (c2.size() <= bound()) continue;
      gens.push_back(y);
      descend(join(a, y), c2, y, gens);
      gens.pop_back();
    }
  }

  const CayleyGroup& g_;
  // Best order found by any worker; only ever increases.
  std::atomic<std::uint64_t>& shared_;
  std::uint64_t best_ = 1;
  std::vector<ElementIndex> witness_;
  std::uint64_t nodes_ = 0;
};

std::uint64_t a_of(const PermGroup& g, std::uint64_t cap) { return max_abelian_order(g, cap).a_value; }


}  // namespace

AbelianBoundResult max_abelian_order(const PermGroup& g, std::uint64_t cap, unsigned threads) {
  if (g.order() > cap) throw CapExceeded("max_abelian_order: |G| exceeds cap " + std::to_string(cap));
  auto c = index_group(g, cap);
  // One seed per conjugacy class; higher element orders first give an early bound.
  std::vector<ElementIndex> seeds;
  for (const auto& cls : conjugacy_classes(g, cap)) seeds.push_back(c->index_of(*std::min_element(cls.begin(), cls.end())));
  auto sizes = class_sizes(*c);
  std::stable_sort(seeds.begin(), seeds.end(), [&](ElementIndex a, ElementIndex b) {
    return c->elem_order(a) != c->elem_order(b) ? c->elem_order(a) > c->elem_order(b) : sizes[a] < sizes[b];
  });
  seeds.erase(std::remove(seeds.begin(), seeds.end(), ElementIndex{0}), seeds.end());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(seeds.size(), 1))));
  std::atomic<std::uint64_t> shared{1};
  std::vector<AbelianSearch> workers(threads, AbelianSearch(*c, shared));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < seeds.size(); i += threads) workers[w].seed(seeds[i]);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  AbelianBoundResult r;
  const AbelianSearch* top = &workers[0];
  for (const auto& w : workers) {
    r.nodes += w.nodes();
    if (w.best() > top->best()) top = &w;
  }
  r.a_value = top->best();
  for (ElementIndex x : top->witness()) r.witness.push_back(c->element(x));
  return r;
}

AIneqResult check_a_ineq(const PermGroup& t, const PermGroup& aut_t, std::uint64_t cap) {
  AIneqResult r;
  r.a_t = a_of(t, cap);
  r.a_aut = a_of(aut_t, cap);
  r.order_t = t.order();
  BigInt prod = BigInt(r.a_t) * r.a_aut;
  r.lhs = 3 * prod * prod * prod;
  r.rhs = r.order_t * r.order_t * r.order_t;
  r.pass = r.lhs < r.rhs;
  return r;
}

VdovinResult check_vdovin(const PermGroup& t, std::uint64_t cap) {
  VdovinResult r;
  auto rep = structure_report(t);
  if (rep.composition_factors.size() != 1 || rep.composition_factors[0].family == "cyclic")
    throw DomainError("check_vdovin: T is not a nonabelian simple group");
  const BigInt order = t.order();
  // |PSL(2,q)| >= q(q^2-1)/2, which is increasing in q.
  for (std::uint64_t q = 4; BigInt(q) * (BigInt(q) * q - 1) / 2 <= order; ++q) {
    std::uint64_t p;
    unsigned e;
    if (!prime_power(q, p, e)) continue;
    BigInt o = BigInt(q) * (BigInt(q) * q - 1) / gcd_u64(2, q - 1);
    if (o != order) continue;
    if (are_isomorphic(t, build_group(GroupSpec::atom(GroupSpec::Kind::PSL2, q)), cap)) {
      r.excluded_reason = "isomorphic to PSL(2," + std::to_string(q) + ")";
      return r;
    }
  }
  r.applicable = true;
  r.a = a_of(t, cap);
  r.lhs = BigInt(r.a) * r.a * r.a;
  r.rhs = order;
  r.pass = r.lhs < r.rhs;
  return r;
}

PermGroup quotient_group(const PermGroup& g, const PermGroup& n, std::uint64_t cap) {
  if (!is_normal(g, n)) throw DomainError("quotient_group: N is not normal in G");
  auto nel = n.elements(cap);
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> coset;
  std::vector<Permutation> reps;
  auto label = [&](const Permutation& x) {
    reps.push_back(x);
    for (const auto& y : nel) coset.emplace(x * y, static_cast<std::uint32_t>(reps.size() - 1));
  };
  label(Permutation::identity(g.degree()));
  for (const auto& x : g.elements(cap))
    if (!coset.count(x)) label(x);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset.at(s * reps[c]);
    gens.push_back(Permutation(img));
  }
  return PermGroup::generated_by(reps.size(), std::move(gens));
}

APropReport a_prop_checks(const PermGroup& g, const PermGroup& h, const PermGroup& n, const PermGroup& p,
                          const PermGroup& q) {
  if (!is_subgroup(g, h)) throw DomainError("a_prop_checks: H is not a subgroup of G");
  APropReport r;
  r.a_g = a_of(g, 50'000);
  r.a_h = a_of(h, 50'000);
  r.subgroup_ok = r.a_h <= r.a_g;
  r.a_n = a_of(n, 50'000);
  r.a_quotient = a_of(quotient_group(g, n), 50'000);
  r.normal_ok = r.a_g <= r.a_n * r.a_quotient;
  // Direct product on disjoint point sets.
  const std::size_t d = p.degree() + q.degree();
  std::vector<Permutation> gens;
  for (const auto& x : p.generators()) {
    std::vector<Point> img(d);
    for (Point t = 0; t < d; ++t) img[t] = t < p.degree() ? x(t) : t;
    gens.push_back(Permutation(img));
  }
  for (const auto& x : q.generators()) {
    std::vector<Point> img(d);
    for (Point t = 0; t < d; ++t) img[t] = t < p.degree() ? t : static_cast<Point>(p.degree() + x(t - p.degree()));
    gens.push_back(Permutation(img));
  }
  r.a_p = a_of(p, 50'000);
  r.a_q = a_of(q, 50'000);
  r.a_product = a_of(PermGroup::generated_by(d, gens), 50'000);
  r.product_ok = r.a_product == r.a_p * r.a_q;
  return r;
}

}  // namespace hgl
