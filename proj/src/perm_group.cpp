#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "hgl/perm.hpp"
#include "stabilizer_chain.hpp"

namespace hgl {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Point>& base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw InvalidInput("base point out of range");
    for (const auto& L : levels_)
      if (L.base == b) throw InvalidInput("repeated base point");
    new_level(b);
  }
}

void StabilizerChain::new_level(Point base) {
  Level L;
  L.base = base;
  L.orbit = {base};
  L.orbit_pos.assign(degree_, -1);
  L.orbit_pos[base] = 0;
  L.transversal = {Permutation::identity(degree_)};
  L.inverse_transversal = {Permutation::identity(degree_)};
  L.tested = {0};
  levels_.push_back(std::move(L));
}

void StabilizerChain::extend_orbit(Level& L) {
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const auto& s : L.gens) {
      Point y = s(L.orbit[k]);
      if (L.orbit_pos[y] >= 0) continue;
      L.orbit_pos[y] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(y);
      Permutation u = s * L.transversal[k];
      L.inverse_transversal.push_back(u.inverse());
      L.transversal.push_back(std::move(u));
      L.tested.push_back(0);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    std::int32_t pos = L.orbit_pos[g(L.base)];
    if (pos < 0) return {std::move(g), l};
    if (pos > 0) g = L.inverse_transversal[static_cast<std::size_t>(pos)] * g;
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, level] = strip(g);
  return level == levels_.size() && h.is_identity();
}

void StabilizerChain::insert(const Permutation& h, std::size_t level) {
  if (level == levels_.size()) {
    // h fixes every existing base point; its smallest moved point extends the base.
    new_level(*h.first_moved_point());
  }
  for (std::size_t l = 0; l <= level; ++l) {
    levels_[l].gens.push_back(h);
    extend_orbit(levels_[l]);
  }
}

void StabilizerChain::complete(std::size_t from) {
  std::int64_t i = static_cast<std::int64_t>(from);
  while (i >= 0) {
    bool restarted = false;
    Level* L = &levels_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < L->orbit.size() && !restarted; ++k) {
      while (L->tested[k] < L->gens.size()) {
        const Permutation& s = L->gens[L->tested[k]];
        ++L->tested[k];
        Point y = s(L->orbit[k]);
        auto pos = static_cast<std::size_t>(L->orbit_pos[y]);
        Permutation schreier = L->inverse_transversal[pos] * (s * L->transversal[k]);
        auto [h, stop] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (stop < levels_.size() || !h.is_identity()) {
          insert(h, stop);
          i = static_cast<std::int64_t>(stop);
          restarted = true;
          break;
        }
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
  auto [h, stop] = strip(g);
  if (stop == levels_.size() && h.is_identity()) return;
  insert(h, stop);
  complete(stop);
}

StabilizerChain StabilizerChain::tail(std::size_t k) const {
  StabilizerChain out(degree_, {});
  out.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(std::min(k, levels_.size())),
                     levels_.end());
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

namespace {

std::vector<Permutation> drop_identities(std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  for (auto& g : gens)
    if (!g.is_identity() && std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  return out;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens,
                     std::shared_ptr<const StabilizerChain> chain)
    : degree_(degree), gens_(std::move(gens)), chain_(std::move(chain)) {}

PermGroup PermGroup::trivial(std::size_t degree) {
  if (degree == 0) throw InvalidInput("group of degree 0");
  return PermGroup(degree, {}, std::make_shared<StabilizerChain>(degree, std::vector<Point>{}));
}

PermGroup PermGroup::with_base(std::size_t degree, std::vector<Permutation> gens,
                               const std::vector<Point>& base_prefix) {
  if (degree == 0) throw InvalidInput("group of degree 0");
  for (const auto& g : gens)
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  gens = drop_identities(std::move(gens));
  auto chain = std::make_shared<StabilizerChain>(degree, base_prefix);
  for (const auto& g : gens) chain->add_generator(g);
  return PermGroup(degree, std::move(gens), std::move(chain));
}

PermGroup PermGroup::generated_by(std::size_t degree, std::vector<Permutation> gens) {
  return with_base(degree, std::move(gens), {});
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens) {
  if (gens.empty()) throw InvalidInput("empty generator list (use PermGroup::trivial)");
  std::size_t n = gens.front().degree();
  return generated_by(n, std::move(gens));
}

PermGroup group_from_generators(std::vector<Permutation> gens) {
  return PermGroup::from_generators(std::move(gens));
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const auto& L : chain_->levels()) o *= L.orbit.size();
  return o;
}

std::uint64_t PermGroup::size() const {
  BigInt o = order();
  if (o > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw CapExceeded("group order does not fit in 64 bits");
  return static_cast<std::uint64_t>(o);
}

bool PermGroup::contains(const Permutation& p) const { return chain_->contains(p); }

bool PermGroup::contains_group(const PermGroup& sub) const {
  if (sub.degree() != degree_) return false;
  return std::all_of(sub.gens_.begin(), sub.gens_.end(),
                     [&](const Permutation& g) { return contains(g); });
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& L : chain_->levels()) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& L : chain_->levels()) s.push_back(L.orbit.size());
  return s;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw InvalidInput("point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens_) {
      Point y = g(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (Point y : orb) seen[y] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermGroup::is_regular() const { return is_transitive() && order() == degree_; }

bool PermGroup::is_semiregular() const {
  // Point stabilizers are trivial exactly when every orbit has size |G|.
  BigInt o = order();
  for (const auto& orb : orbits())
    if (BigInt(orb.size()) != o) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

PermGroup PermGroup::stabilizer(Point x) const {
  if (x >= degree_) throw InvalidInput("point out of range");
  auto chain = std::make_shared<StabilizerChain>(degree_, std::vector<Point>{x});
  for (const auto& g : gens_) chain->add_generator(g);
  const auto& levels = chain->levels();
  std::vector<Permutation> gens;
  if (levels.size() > 1) gens = levels[1].gens;
  auto tail = std::make_shared<StabilizerChain>(chain->tail(1));
  return PermGroup(degree_, std::move(gens), std::move(tail));
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
  if (order() > cap) throw CapExceeded("element enumeration above cap " + std::to_string(cap));
  const auto& levels = chain_->levels();
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Elements are products u_0 u_1 ... u_k of transversal elements.
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->transversal.size());
    for (const auto& u : it->transversal)
      for (const auto& e : out) next.push_back(u * e);
    out = std::move(next);
  }
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation r = Permutation::identity(degree_);
  for (const auto& L : chain_->levels()) {
    std::uniform_int_distribution<std::size_t> pick(0, L.transversal.size() - 1);
    r = r * L.transversal[pick(rng)];
  }
  return r;
}

PermGroup PermGroup::with_generators(const std::vector<Permutation>& extra) const {
  auto chain = std::make_shared<StabilizerChain>(*chain_);
  std::vector<Permutation> gens = gens_;
  for (const auto& g : extra) {
    if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
    if (g.is_identity() || std::find(gens.begin(), gens.end(), g) != gens.end()) continue;
    chain->add_generator(g);
    gens.push_back(g);
  }
  return PermGroup(degree_, std::move(gens), std::move(chain));
}

}  // namespace hgl
