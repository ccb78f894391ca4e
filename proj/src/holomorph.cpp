#include "hgl/holomorph.hpp"

#include <random>
#include <unordered_map>

#include "hgl/iso_aut.hpp"

namespace hgl {

Holomorph::Holomorph(CayleyPtr g, std::optional<PermGroup> aut) : g_(std::move(g)), aut_(std::move(aut)) {
  if (aut_ && aut_->degree() != g_->order()) throw InvalidInput("Holomorph: Aut(G) must act on the element indices");
}

std::shared_ptr<const Holomorph> Holomorph::of(const CayleyPtr& g, std::uint64_t aut_cap) {
  return std::make_shared<const Holomorph>(g, automorphism_group(*g, aut_cap));
}

const PermGroup& Holomorph::aut() const {
  if (!aut_) throw DomainError("Holomorph was built without Aut(G)");
  return *aut_;
}

HolElement Holomorph::identity() const { return {0, Permutation::identity(g_->order())}; }

HolElement Holomorph::mult(const HolElement& x, const HolElement& y) const {
  return {g_->mul(x.g, x.alpha(y.g)), x.alpha * y.alpha};
}

HolElement Holomorph::inverse(const HolElement& x) const {
  Permutation ai = x.alpha.inverse();
  return {ai(g_->inv(x.g)), std::move(ai)};
}

Permutation Holomorph::to_perm(const HolElement& x) const {
  const std::size_t n = g_->order();
  std::vector<Point> img(n);
  for (ElementIndex t = 0; t < n; ++t) img[t] = action(x, t);
  return Permutation::from_images_unchecked(std::move(img));
}

std::optional<HolElement> Holomorph::decode(const Permutation& p) const {
  const std::size_t n = g_->order();
  if (p.degree() != n) return std::nullopt;
  ElementIndex g = p(0);
  ElementIndex gi = g_->inv(g);
  std::vector<Point> img(n);
  for (ElementIndex t = 0; t < n; ++t) img[t] = g_->mul(gi, p(t));
  Permutation alpha = Permutation::from_images_unchecked(std::move(img));
  bool ok = aut_ ? aut_->contains(alpha) : is_automorphism(*g_, alpha);
  if (!ok) return std::nullopt;
  return HolElement{g, std::move(alpha)};
}

Permutation Holomorph::conjugation_aut(ElementIndex g) const { return hgl::conjugation_aut(*g_, g); }

HolElement Holomorph::lambda(ElementIndex g) const { return {g, Permutation::identity(g_->order())}; }

HolElement Holomorph::rho(ElementIndex g) const { return {g_->inv(g), conjugation_aut(g)}; }

PermGroup Holomorph::as_perm_group() const {
  std::vector<Permutation> gens;
  for (ElementIndex s : g_->generators()) gens.push_back(to_perm(lambda(s)));
  for (const auto& a : aut().generators()) gens.push_back(a);
  return PermGroup::generated_by(g_->order(), std::move(gens));
}

HolElement hol_mult(const Holomorph& hol, const HolElement& x, const HolElement& y) { return hol.mult(x, y); }

ElementIndex hol_action(const Holomorph& hol, const HolElement& x, ElementIndex t) { return hol.action(x, t); }

Permutation conjugation_aut(const CayleyGroup& g, ElementIndex x) {
  const std::size_t n = g.order();
  std::vector<Point> img(n);
  for (ElementIndex t = 0; t < n; ++t) img[t] = g.conj(x, t);
  return Permutation::from_images_unchecked(std::move(img));
}

PermGroup hol_group(const PermGroup& g, std::uint64_t aut_cap) {
  return Holomorph::of(index_group(g, aut_cap), aut_cap)->as_perm_group();
}

namespace {

// For each source generator, the index of elem * gen in the source table.
struct EdgeWalker {
  const CayleyGroup& src;
  std::vector<Permutation> gens;

  template <class F>
  bool for_each_edge(F&& f) const {
    for (ElementIndex i = 0; i < src.order(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (!f(i, j, src.index_of(src.element(i) * gens[j]))) return false;
    return true;
  }
};

// Position of each sorted generator in the original generator list.
std::vector<std::size_t> sorted_to_original(const CayleyGroup& src) {
  const auto& orig = src.source().generators();
  std::vector<std::size_t> map;
  for (ElementIndex s : src.generators())
    for (std::size_t j = 0; j < orig.size(); ++j)
      if (orig[j] == src.element(s)) {
        map.push_back(j);
        break;
      }
  return map;
}

// Tabulates a map defined on generators by right multiplication along the
// indexing tree; returns false if some edge disagrees (not a homomorphism).
template <class T, class Mul>
bool tabulate(const CayleyGroup& src, const std::vector<T>& gen_images, const T& one, Mul mul, std::vector<T>& out) {
  auto pos = sorted_to_original(src);
  out.assign(src.order(), one);
  for (ElementIndex i = 1; i < src.order(); ++i)
    out[i] = mul(out[src.bfs_parent(i)], gen_images[pos[src.bfs_generator(i)]]);
  EdgeWalker w{src, src.source().generators()};
  return w.for_each_edge([&](ElementIndex i, std::size_t j, ElementIndex k) { return mul(out[i], gen_images[j]) == out[k]; });
}

class ConjCache {
 public:
  explicit ConjCache(const CayleyGroup& g) : g_(g) {}
  const Permutation& get(ElementIndex x) {
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, conjugation_aut(g_, x)).first;
    return it->second;
  }

 private:
  const CayleyGroup& g_;
  std::unordered_map<ElementIndex, Permutation> cache_;
};

template <class Value>
void check_pairs(const CayleyGroup& src, const VerifyOptions& opts, EmbeddingReport& rep, Value&& value,
                 const Holomorph& hol) {
  const std::uint64_t m = src.order();
  auto check = [&](ElementIndex a, ElementIndex b) {
    ++rep.pairs_checked;
    return hol.mult(value(a), value(b)) == value(src.mul(a, b));
  };
  if (m <= opts.exhaustive_limit) {
    rep.exhaustive_pairs = true;
    for (ElementIndex a = 0; a < m; ++a)
      for (ElementIndex b = 0; b < m; ++b)
        if (!check(a, b)) {
          rep.homomorphism = false;
          return;
        }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(m - 1));
    for (std::uint64_t k = 0; k < opts.random_pairs; ++k) {
      ElementIndex a = pick(rng), b = pick(rng);
      if (!check(a, b)) {
        rep.homomorphism = false;
        return;
      }
    }
  }
}

bool bijective_on_points(const std::vector<ElementIndex>& pts, std::size_t n) {
  if (pts.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (ElementIndex v : pts) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

EmbeddingReport verify_embedding(const Holomorph& hol, const RegularEmbedding& emb, const VerifyOptions& opts) {
  EmbeddingReport rep;
  const CayleyGroup& g = hol.group();
  const std::size_t n = g.order();
  const auto& sgens = emb.source.generators();
  if (emb.images.size() != sgens.size()) throw InvalidInput("verify_embedding: one image per source generator required");
  auto src = index_group(emb.source, 10'000'000);
  rep.source_order = src->order();

  if (emb.beta1 && emb.beta2) {
    std::vector<ElementIndex> b1, b2;
    auto gmul = [&](ElementIndex a, ElementIndex b) { return g.mul(a, b); };
    rep.homomorphism = tabulate<ElementIndex>(*src, *emb.beta1, 0, gmul, b1) &&
                       tabulate<ElementIndex>(*src, *emb.beta2, 0, gmul, b2);
    ConjCache cc(g);
    auto value = [&](ElementIndex s) { return HolElement{g.mul(b1[s], g.inv(b2[s])), cc.get(b2[s])}; };
    for (std::size_t j = 0; j < sgens.size() && rep.homomorphism; ++j) {
      ElementIndex s = src->index_of(sgens[j]);
      if (!(emb.images[j] == value(s))) rep.homomorphism = false;
    }
    std::vector<ElementIndex> pts(src->order());
    for (ElementIndex s = 0; s < src->order(); ++s) pts[s] = g.mul(b1[s], g.inv(b2[s]));
    rep.regular = bijective_on_points(pts, n);
    rep.injective = rep.regular;
    if (rep.homomorphism) check_pairs(*src, opts, rep, value, hol);
    return rep;
  }

  if (static_cast<std::uint64_t>(src->order()) * n > opts.table_entry_cap)
    throw CapExceeded("verify_embedding: tabulating the embedding exceeds the entry cap");
  for (const auto& im : emb.images) {
    bool in_aut = hol.has_aut() ? hol.aut().contains(im.alpha) : is_automorphism(g, im.alpha);
    if (im.alpha.degree() != n || im.g >= n || !in_aut) return rep;
  }
  std::vector<HolElement> table;
  auto hmul = [&](const HolElement& a, const HolElement& b) { return hol.mult(a, b); };
  rep.homomorphism = tabulate<HolElement>(*src, emb.images, hol.identity(), hmul, table);
  std::vector<ElementIndex> pts(src->order());
  for (ElementIndex s = 0; s < src->order(); ++s) pts[s] = table[s].g;
  rep.regular = bijective_on_points(pts, n);
  rep.injective = rep.regular;
  if (rep.homomorphism) check_pairs(*src, opts, rep, [&](ElementIndex s) -> const HolElement& { return table[s]; }, hol);
  return rep;
}

std::vector<HolElement> tabulate_embedding(const Holomorph& hol, const RegularEmbedding& emb,
                                           const CayleyGroup& source_index) {
  const CayleyGroup& g = hol.group();
  std::vector<HolElement> out;
  if (emb.beta1 && emb.beta2) {
    std::vector<ElementIndex> b1, b2;
    auto gmul = [&](ElementIndex a, ElementIndex b) { return g.mul(a, b); };
    if (!tabulate<ElementIndex>(source_index, *emb.beta1, 0, gmul, b1) ||
        !tabulate<ElementIndex>(source_index, *emb.beta2, 0, gmul, b2))
      throw DomainError("tabulate_embedding: generator images do not define homomorphisms");
    ConjCache cc(g);
    out.reserve(source_index.order());
    for (ElementIndex s = 0; s < source_index.order(); ++s)
      out.push_back({g.mul(b1[s], g.inv(b2[s])), cc.get(b2[s])});
    return out;
  }
  auto hmul = [&](const HolElement& a, const HolElement& b) { return hol.mult(a, b); };
  if (!tabulate<HolElement>(source_index, emb.images, hol.identity(), hmul, out))
    throw DomainError("tabulate_embedding: generator images do not define a homomorphism");
  return out;
}

}  // namespace hgl
