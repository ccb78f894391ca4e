#include <algorithm>
#include <unordered_map>

#include "hgl/structure.hpp"

namespace hgl {

namespace {

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

struct NamedSimple {
  std::uint64_t order;
  const char* family;
  const char* name;
};

// Nonabelian simple groups of order at most 10^5, keyed by order. Order
// 20160 is shared by A8 and PSL(3,4), so that entry carries both names.
constexpr NamedSimple kSimpleByOrder[] = {
    {60, "alternating", "A5"},       {168, "PSL2", "PSL(2,7)"},
    {360, "alternating", "A6"},      {504, "PSL2", "PSL(2,8)"},
    {660, "PSL2", "PSL(2,11)"},      {1092, "PSL2", "PSL(2,13)"},
    {2448, "PSL2", "PSL(2,17)"},     {2520, "alternating", "A7"},
    {3420, "PSL2", "PSL(2,19)"},     {4080, "PSL2", "PSL(2,16)"},
    {5616, "PSL3", "PSL(3,3)"},      {6048, "PSU3", "PSU(3,3)"},
    {6072, "PSL2", "PSL(2,23)"},     {7800, "PSL2", "PSL(2,25)"},
    {7920, "sporadic", "M11"},       {9828, "PSL2", "PSL(2,27)"},
    {12180, "PSL2", "PSL(2,29)"},    {14880, "PSL2", "PSL(2,31)"},
    {20160, "ambiguous", "A8|PSL(3,4)"}, {25308, "PSL2", "PSL(2,37)"},
    {25920, "PSU4", "PSU(4,2)"},     {29120, "Suzuki", "Sz(8)"},
    {32736, "PSL2", "PSL(2,32)"},    {34440, "PSL2", "PSL(2,41)"},
    {39732, "PSL2", "PSL(2,43)"},    {51888, "PSL2", "PSL(2,47)"},
    {58800, "PSL2", "PSL(2,49)"},    {62400, "PSU3", "PSU(3,4)"},
    {74412, "PSL2", "PSL(2,53)"},    {95040, "sporadic", "M12"},
};

void check_cap(const PermGroup& g, std::uint64_t cap, const char* what) {
  if (g.order() > cap)
    throw CapExceeded(std::string(what) + ": group order " + to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
}

// Maximal proper normal subgroup of a nontrivial group, by growing a normal
// subgroup one conjugacy class at a time.
PermGroup maximal_normal_subgroup(const PermGroup& g, std::size_t cap) {
  auto classes = conjugacy_classes(g, cap);
  PermGroup m = PermGroup::trivial(g.degree());
  BigInt full = g.order();
  for (const auto& cls : classes) {
    const Permutation& rep = cls.front();
    if (m.contains(rep)) continue;
    std::vector<Permutation> gens = m.generators();
    gens.push_back(rep);
    PermGroup candidate = normal_closure(g, gens);
    if (candidate.order() < full) m = candidate;
  }
  return m;
}

void refine_abelian_layer(const PermGroup& upper, const PermGroup& lower,
                          std::vector<PermGroup>& series_bottom_up,
                          std::vector<CompositionFactor>& factors) {
  // Subgroups between `lower` and `upper` are normal in `upper`, since the
  // quotient is abelian; add generators one at a time and split each step
  // into prime-index pieces using powers.
  PermGroup a = lower;
  for (const auto& g : upper.generators()) {
    if (a.contains(g)) continue;
    std::uint64_t r = 1;
    Permutation power = g;
    while (!a.contains(power)) {
      power = power * g;
      ++r;
    }
    // r = order of g modulo a.
    std::vector<std::uint64_t> primes;
    std::uint64_t m = r;
    for (std::uint64_t p : prime_divisors(r))
      while (m % p == 0) {
        primes.push_back(p);
        m /= p;
      }
    std::uint64_t remaining = r;
    for (std::uint64_t p : primes) {
      remaining /= p;
      a = a.with_generators({g.pow(static_cast<std::int64_t>(remaining))});
      series_bottom_up.push_back(a);
      factors.push_back(describe_simple_order(p));
    }
  }
}

void composition_bottom_up(const PermGroup& g, std::size_t cap,
                           std::vector<PermGroup>& series_bottom_up,
                           std::vector<CompositionFactor>& factors) {
  if (g.order() == 1) return;
  std::vector<PermGroup> derived{g};
  while (derived.back().order() > 1) {
    PermGroup next = derived_subgroup(derived.back());
    if (next.order() == derived.back().order()) break;
    derived.push_back(next);
  }
  const PermGroup& perfect = derived.back();
  if (perfect.order() > 1) {
    PermGroup m = maximal_normal_subgroup(perfect, cap);
    composition_bottom_up(m, cap, series_bottom_up, factors);
    series_bottom_up.push_back(perfect);
    std::uint64_t idx = static_cast<std::uint64_t>(perfect.order() / m.order());
    factors.push_back(describe_simple_order(idx));
  }
  for (std::size_t i = derived.size() - 1; i-- > 0;)
    refine_abelian_layer(derived[i], derived[i + 1], series_bottom_up, factors);
}

}  // namespace

CompositionFactor describe_simple_order(std::uint64_t order) {
  if (is_prime(order)) return {order, "cyclic", "C" + std::to_string(order)};
  for (const auto& s : kSimpleByOrder)
    if (s.order == order) return {order, s.family, s.name};
  return {order, "simple", "simple(" + std::to_string(order) + ")"};
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Permutation>& elems) {
  PermGroup n = PermGroup::generated_by(ambient.degree(), elems);
  std::vector<Permutation> queue = n.generators();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : ambient.generators()) {
      Permutation c = queue[k].conjugate_by(g);
      if (!n.contains(c)) {
        n = n.with_generators({c});
        queue.push_back(c);
      }
    }
  }
  return n;
}

PermGroup normal_closure(const PermGroup& ambient, const PermGroup& sub) {
  return normal_closure(ambient, sub.generators());
}

PermGroup commutator_subgroup(const PermGroup& n, const PermGroup& g) {
  std::vector<Permutation> comms;
  for (const auto& a : n.generators())
    for (const auto& b : g.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g); }

bool is_subgroup(const PermGroup& ambient, const PermGroup& sub) {
  return ambient.contains_group(sub);
}

bool is_normal(const PermGroup& ambient, const PermGroup& sub) {
  if (!is_subgroup(ambient, sub)) return false;
  for (const auto& n : sub.generators())
    for (const auto& g : ambient.generators())
      if (!sub.contains(n.conjugate_by(g))) return false;
  return true;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g, std::size_t cap) {
  auto elems = g.elements(cap);
  std::sort(elems.begin(), elems.end());
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> done(elems.size(), false);
  std::vector<std::vector<Permutation>> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit{i};
    done[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : g.generators()) {
        std::size_t j = index.at(elems[orbit[k]].conjugate_by(s));
        if (!done[j]) {
          done[j] = true;
          orbit.push_back(j);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Permutation> cls;
    for (std::size_t j : orbit) cls.push_back(elems[j]);
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return classes;
}

StructureReport structure_report(const PermGroup& g, const StructureOptions& opts) {
  check_cap(g, opts.series_cap, "structure_report");
  StructureReport r;
  r.order = g.order();
  r.is_abelian = g.is_abelian();

  PermGroup d = g;
  r.derived_series_orders.push_back(d.order());
  while (d.order() > 1) {
    PermGroup next = derived_subgroup(d);
    if (next.order() == d.order()) break;
    d = next;
    r.derived_series_orders.push_back(d.order());
  }
  r.is_soluble = d.order() == 1;

  PermGroup c = g;
  r.lower_central_series_orders.push_back(c.order());
  while (c.order() > 1) {
    PermGroup next = commutator_subgroup(c, g);
    if (next.order() == c.order()) break;
    c = next;
    r.lower_central_series_orders.push_back(c.order());
  }
  r.is_nilpotent = c.order() == 1;

  if (opts.composition_factors) {
    check_cap(g, opts.composition_cap, "composition factors");
    std::vector<PermGroup> bottom_up{PermGroup::trivial(g.degree())};
    composition_bottom_up(g, opts.composition_cap, bottom_up, r.composition_factors);
    r.composition_series.assign(bottom_up.rbegin(), bottom_up.rend());
    std::sort(r.composition_factors.begin(), r.composition_factors.end());
  }
  return r;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::size_t cap) {
  if (!is_prime(p)) throw InvalidInput("sylow_subgroup: p must be prime");
  std::uint64_t n = g.size();
  std::uint64_t target = p_part(n, p);
  PermGroup P = PermGroup::trivial(g.degree());
  if (target == 1) return P;
  auto elems = g.elements(cap);
  while (P.size() < target) {
    bool grown = false;
    for (const auto& x : elems) {
      if (P.contains(x)) continue;
      std::uint64_t o = x.order();
      Permutation y = x.pow(static_cast<std::int64_t>(o / p_part(o, p)));
      if (y.is_identity() || P.contains(y)) continue;
      bool normalizes = std::all_of(P.generators().begin(), P.generators().end(),
                                    [&](const Permutation& h) { return P.contains(h.conjugate_by(y)); });
      if (!normalizes) continue;
      P = P.with_generators({y});
      grown = true;
      break;
    }
    if (!grown) throw Error("sylow_subgroup: failed to extend p-subgroup");
  }
  return P;
}

std::map<std::uint64_t, std::uint64_t> element_orders_multiset(const PermGroup& g,
                                                               std::size_t cap) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (const auto& x : g.elements(cap)) ++m[x.order()];
  return m;
}

}  // namespace hgl
