#include "hgl/iso_aut.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "hgl/structure.hpp"

namespace hgl {

namespace {

constexpr ElementIndex kNone = std::numeric_limits<ElementIndex>::max();

// Backtracking over generator images from a source table into a target table.
class Matcher {
 public:
  Matcher(const CayleyGroup& g, const CayleyGroup& h)
      : g_(g), h_(h), xs_(small_generating_set(g)), ys_(xs_.size(), 0), phi_(g.order(), kNone),
        used_(h.order(), false) {
    auto cg = class_sizes(g);
    auto ch = class_sizes(h);
    cands_.resize(xs_.size());
    for (std::size_t j = 0; j < xs_.size(); ++j)
      for (ElementIndex y = 0; y < h.order(); ++y)
        if (h.elem_order(y) == g.elem_order(xs_[j]) && ch[y] == cg[xs_[j]]) cands_[j].push_back(y);
  }

  const std::vector<ElementIndex>& gens() const { return xs_; }

  // Finds one map with the first `fixed.size()` generator images prescribed.
  // On success the full image table is returned.
  std::optional<std::vector<ElementIndex>> search(const std::vector<ElementIndex>& fixed) {
    fixed_ = fixed;
    if (xs_.empty()) return std::vector<ElementIndex>{0};
    if (descend(0)) return phi_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t j) {
    auto try_one = [&](ElementIndex y) {
      ys_[j] = y;
      if (!extend(j)) return false;
      return j + 1 == xs_.size() || descend(j + 1);
    };
    if (j < fixed_.size()) {
      if (h_.elem_order(fixed_[j]) != g_.elem_order(xs_[j])) return false;
      return try_one(fixed_[j]);
    }
    for (ElementIndex y : cands_[j])
      if (try_one(y)) return true;
    return false;
  }

  // Defines the map on <x_0..x_j> by phi(w x_t) = phi(w) y_t and checks that
  // it is well defined and injective there.
  bool extend(std::size_t j) {
    for (ElementIndex w : reached_) {
      if (phi_[w] == kNone) continue;
      used_[phi_[w]] = false;
      phi_[w] = kNone;
    }
    reached_.assign(1, 0);
    phi_[0] = 0;
    used_[0] = true;
    for (std::size_t k = 0; k < reached_.size(); ++k) {
      ElementIndex w = reached_[k];
      for (std::size_t t = 0; t <= j; ++t) {
        ElementIndex u = g_.mul(w, xs_[t]);
        ElementIndex img = h_.mul(phi_[w], ys_[t]);
        if (phi_[u] == kNone) {
          if (used_[img]) return false;
          phi_[u] = img;
          used_[img] = true;
          reached_.push_back(u);
        } else if (phi_[u] != img) {
          return false;
        }
      }
    }
    return true;
  }

  const CayleyGroup& g_;
  const CayleyGroup& h_;
  std::vector<ElementIndex> xs_;
  std::vector<ElementIndex> ys_;
  std::vector<std::vector<ElementIndex>> cands_;
  std::vector<ElementIndex> fixed_;
  std::vector<ElementIndex> phi_;
  std::vector<bool> used_;
  std::vector<ElementIndex> reached_;
};

std::map<std::uint64_t, std::uint64_t> order_counts(const CayleyGroup& g) {
  std::map<std::uint64_t, std::uint64_t> m;
  for (ElementIndex i = 0; i < g.order(); ++i) ++m[g.elem_order(i)];
  return m;
}

std::vector<std::uint64_t> sorted_class_sizes(const CayleyGroup& g) {
  auto c = class_sizes(g);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

bool Isomorphism::verify() const {
  const std::size_t n = source->order();
  if (target->order() != n || image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (ElementIndex v : image) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = 0; b < n; ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b])) return false;
  return true;
}

Isomorphism Isomorphism::compose(const Isomorphism& after) const {
  Isomorphism r{source, after.target, std::vector<ElementIndex>(image.size())};
  for (std::size_t i = 0; i < image.size(); ++i) r.image[i] = after.image[image[i]];
  return r;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism r{target, source, std::vector<ElementIndex>(image.size())};
  for (std::size_t i = 0; i < image.size(); ++i) r.image[image[i]] = static_cast<ElementIndex>(i);
  return r;
}

std::vector<ElementIndex> small_generating_set(const CayleyGroup& g) {
  std::vector<ElementIndex> order(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementIndex a, ElementIndex b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<ElementIndex> gens;
  std::vector<bool> in = subgroup_mask(g, gens);
  std::size_t covered = 1;
  for (ElementIndex x : order) {
    if (covered == g.order()) break;
    if (in[x]) continue;
    gens.push_back(x);
    in = subgroup_mask(g, gens);
    covered = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  }
  return gens;
}

std::optional<Isomorphism> find_isomorphism(const CayleyPtr& g, const CayleyPtr& h) {
  if (g->order() != h->order()) return std::nullopt;
  if (order_counts(*g) != order_counts(*h)) return std::nullopt;
  if (sorted_class_sizes(*g) != sorted_class_sizes(*h)) return std::nullopt;
  if (derived_subgroup(g->source()).order() != derived_subgroup(h->source()).order()) return std::nullopt;
  Matcher m(*g, *h);
  auto phi = m.search({});
  if (!phi) return std::nullopt;
  return Isomorphism{g, h, std::move(*phi)};
}

std::optional<Isomorphism> are_isomorphic(const PermGroup& g, const PermGroup& h, std::uint64_t cap) {
  if (g.order() > cap || h.order() > cap)
    throw CapExceeded("are_isomorphic: group order exceeds cap " + std::to_string(cap));
  if (g.order() != h.order()) return std::nullopt;
  return find_isomorphism(index_group(g, cap), index_group(h, cap));
}

bool is_automorphism(const CayleyGroup& g, const Permutation& a) {
  const std::size_t n = g.order();
  if (a.degree() != n || a(0) != 0) return false;
  for (ElementIndex x = 0; x < n; ++x)
    for (ElementIndex y = 0; y < n; ++y)
      if (a(g.mul(x, y)) != g.mul(a(x), a(y))) return false;
  return true;
}

PermGroup automorphism_group(const CayleyGroup& g, std::uint64_t cap) {
  const std::size_t n = g.order();
  if (n > cap) throw CapExceeded("automorphism_group: order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n <= 2) return PermGroup::trivial(n == 0 ? 1 : n);
  Matcher m(g, g);
  const auto& xs = m.gens();

  // Walk the chain of pointwise stabilizers of x_0, x_1, ... from the bottom:
  // at level i every generator found so far fixes x_0..x_{i-1}, and one
  // automorphism is sought for each new orbit of x_i.
  std::vector<Permutation> gens;
  for (std::size_t i = xs.size(); i-- > 0;) {
    std::vector<ElementIndex> prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<bool> in_orbit(n, false);
    std::vector<ElementIndex> orbit;
    auto grow_orbit = [&](ElementIndex seed) {
      if (in_orbit[seed]) return;
      in_orbit[seed] = true;
      orbit.push_back(seed);
      for (std::size_t k = orbit.size() - 1; k < orbit.size(); ++k)
        for (const auto& a : gens) {
          ElementIndex y = a(orbit[k]);
          if (!in_orbit[y]) {
            in_orbit[y] = true;
            orbit.push_back(y);
          }
        }
    };
    grow_orbit(xs[i]);
    for (ElementIndex y = 0; y < n; ++y) {
      if (in_orbit[y]) continue;
      auto fixed = prefix;
      fixed.push_back(y);
      auto phi = m.search(fixed);
      if (!phi) continue;
      gens.push_back(Permutation::from_images_unchecked(std::vector<Point>(phi->begin(), phi->end())));
      // Recompute the whole orbit under the enlarged generating set.
      std::vector<ElementIndex> old = orbit;
      std::fill(in_orbit.begin(), in_orbit.end(), false);
      orbit.clear();
      for (ElementIndex s : old) grow_orbit(s);
      grow_orbit(y);
    }
  }
  return PermGroup::generated_by(n, std::move(gens));
}

PermGroup automorphism_group(const PermGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw CapExceeded("automorphism_group: order exceeds cap " + std::to_string(cap));
  return automorphism_group(*index_group(g, cap), cap);
}

}  // namespace hgl
