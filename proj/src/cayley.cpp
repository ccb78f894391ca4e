#include "hgl/cayley.hpp"

#include <algorithm>

namespace hgl {

std::shared_ptr<const CayleyGroup> CayleyGroup::index_group(const PermGroup& g, std::uint64_t cap) {
  if (g.order() > cap)
    throw CapExceeded("index_group: order " + to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  std::shared_ptr<CayleyGroup> c(new CayleyGroup());
  c->source_ = g;
  const std::size_t n = g.size();
  std::vector<Permutation> gens = g.generators();
  std::sort(gens.begin(), gens.end());

  c->elems_.reserve(n);
  c->index_.reserve(2 * n);
  c->elems_.push_back(Permutation::identity(g.degree()));
  c->index_.emplace(c->elems_[0], 0);
  c->parent_.push_back(0);
  c->parent_gen_.push_back(0);
  for (std::size_t k = 0; k < c->elems_.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = c->elems_[k] * gens[s];
      if (c->index_.count(y)) continue;
      auto idx = static_cast<ElementIndex>(c->elems_.size());
      c->index_.emplace(y, idx);
      c->elems_.push_back(std::move(y));
      c->parent_.push_back(static_cast<ElementIndex>(k));
      c->parent_gen_.push_back(s);
    }
  if (c->elems_.size() != n) throw Error("index_group: enumeration does not match the group order");
  for (const auto& s : gens) c->gens_.push_back(c->index_.at(s));

  if (n <= kDenseTableLimit) {
    c->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        c->table_[a * n + b] = c->index_.at(c->elems_[a] * c->elems_[b]);
  }
  c->inverse_.resize(n);
  c->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    c->inverse_[a] = c->index_.at(c->elems_[a].inverse());
    c->orders_[a] = c->elems_[a].order();
  }
  return c;
}

ElementIndex CayleyGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("permutation is not an element of the indexed group");
  return it->second;
}

CayleyPtr index_group(const PermGroup& g, std::uint64_t cap) { return CayleyGroup::index_group(g, cap); }

std::vector<std::uint64_t> class_sizes(const CayleyGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> size(n, 0);
  std::vector<bool> done(n, false);
  for (ElementIndex x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<ElementIndex> cls{x};
    done[x] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (ElementIndex s : g.generators()) {
        ElementIndex y = g.conj(s, cls[k]);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    for (ElementIndex y : cls) size[y] = cls.size();
  }
  return size;
}

std::vector<bool> subgroup_mask(const CayleyGroup& g, const std::vector<ElementIndex>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementIndex> list{0};
  in[0] = true;
  for (std::size_t k = 0; k < list.size(); ++k)
    for (ElementIndex s : gens) {
      ElementIndex y = g.mul(list[k], s);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
      }
    }
  return in;
}

}  // namespace hgl
