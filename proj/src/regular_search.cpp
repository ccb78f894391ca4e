#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "hgl/hgs.hpp"

namespace hgl {

namespace {

// A subgroup acting semiregularly on 0..m-1, with at0[x] the unique element
// sending 0 to x (or -1 when x lies outside the orbit of 0).
struct Partial {
  std::vector<Permutation> elems;
  std::vector<std::int32_t> at0;
  std::vector<Permutation> gens;
  std::map<std::uint64_t, std::uint64_t> orders;
};

// Cycles on 0..m-1 all of length order(h): <h> is semiregular there.
bool cyclic_semiregular(const Permutation& h, std::size_t m) {
  const std::uint64_t o = h.order();
  std::vector<bool> seen(m, false);
  for (Point x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    Point y = x;
    do {
      seen[y] = true;
      y = h(y);
      ++len;
    } while (y != x);
    if (len != o) return false;
  }
  return true;
}

class Search {
 public:
  Search(std::size_t m, const std::vector<std::vector<Permutation>>& cands, const RegularSearchOptions& opts)
      : m_(m), opts_(opts) {
    cands_.resize(m);
    for (std::size_t x = 1; x < m && x < cands.size(); ++x) {
      for (const auto& h : cands[x]) {
        if (h(0) != x || !cyclic_semiregular(h, m)) continue;
        if (opts.order_profile) {
          auto it = opts.order_profile->find(h.order());
          if (it == opts.order_profile->end() || it->second == 0) continue;
        }
        cands_[x].push_back(h);
      }
      std::sort(cands_[x].begin(), cands_[x].end());
      cands_[x].erase(std::unique(cands_[x].begin(), cands_[x].end()), cands_[x].end());
    }
  }

  RegularSearchResult run() {
    Partial root;
    std::size_t degree = 0;
    for (const auto& c : cands_)
      if (!c.empty()) degree = c.front().degree();
    RegularSearchResult out;
    if (m_ == 1) {
      out.subgroups.push_back({Permutation::identity(degree == 0 ? 1 : degree)});
      return out;
    }
    if (degree == 0) return out;
    root.elems.push_back(Permutation::identity(degree));
    root.at0.assign(m_, -1);
    root.at0[0] = 0;
    root.orders[1] = 1;

    // Top-level branches are dealt round-robin to the workers.
    const auto& top = cands_[1];
    unsigned k = std::max(1u, opts_.threads);
    if (k == 1) {
      for (const auto& h : top) branch(root, h);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < k; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < top.size(); i += k) branch(root, top[i]);
        });
      for (auto& t : pool) t.join();
    }
    out.subgroups.assign(found_.begin(), found_.end());
    out.complete = !budget_hit_.load();
    out.nodes = nodes_.load();
    return out;
  }

 private:
  bool stopped() const { return budget_hit_.load() || (opts_.stop_at_first && found_any_.load()); }

  void branch(const Partial& s, const Permutation& h) {
    if (stopped()) return;
    if (nodes_.fetch_add(1) + 1 > opts_.budget) {
      budget_hit_ = true;
      return;
    }
    Partial t;
    if (!extend(s, h, t)) return;
    if (t.elems.size() == m_) {
      std::sort(t.elems.begin(), t.elems.end());
      std::lock_guard<std::mutex> lock(mu_);
      found_.insert(std::move(t.elems));
      found_any_ = true;
      return;
    }
    std::size_t x = 1;
    while (t.at0[x] >= 0) ++x;
    for (const auto& c : cands_[x]) {
      if (stopped()) return;
      branch(t, c);
    }
  }

  bool add(Partial& t, Permutation y, std::vector<std::size_t>& fresh) const {
    Point p0 = y(0);
    if (t.at0[p0] >= 0) return t.elems[t.at0[p0]] == y;
    for (Point x = 0; x < m_; ++x)
      if (y(x) == x) return false;
    std::uint64_t o = y.order();
    std::uint64_t c = ++t.orders[o];
    if (opts_.order_profile) {
      auto it = opts_.order_profile->find(o);
      if (it == opts_.order_profile->end() || c > it->second) return false;
    }
    t.at0[p0] = static_cast<std::int32_t>(t.elems.size());
    fresh.push_back(t.elems.size());
    t.elems.push_back(std::move(y));
    return true;
  }

  // Closure of s with one more generator; false if it stops being semiregular.
  bool extend(const Partial& s, const Permutation& h, Partial& t) const {
    t = s;
    t.gens.push_back(h);
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < s.elems.size(); ++i)
      if (!add(t, h * t.elems[i], fresh)) return false;
    for (std::size_t k = 0; k < fresh.size(); ++k)
      for (const auto& g : t.gens)
        if (!add(t, g * t.elems[fresh[k]], fresh)) return false;
    return true;
  }

  std::size_t m_;
  RegularSearchOptions opts_;
  std::vector<std::vector<Permutation>> cands_;
  std::set<std::vector<Permutation>> found_;
  std::mutex mu_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> budget_hit_{false};
  std::atomic<bool> found_any_{false};
};

}  // namespace

RegularSearchResult search_regular_subgroups(std::size_t m, const std::vector<std::vector<Permutation>>& candidates,
                                             const RegularSearchOptions& opts) {
  if (m == 0) throw InvalidInput("search_regular_subgroups: empty point set");
  Search s(m, candidates, opts);
  return s.run();
}

}  // namespace hgl
