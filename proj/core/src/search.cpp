#include "sylab/search.hpp"

#include <algorithm>
#include <numeric>

#include "sylab/error.hpp"

namespace sylab {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns the surviving root.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return a;
  }
};

class Backtracker {
 public:
  Backtracker(const StabilizerChain& chain, const SearchProblem& problem)
      : chain_(chain), problem_(problem), base_(chain.base()), images_(base_.size()) {
    partial_.resize(base_.size() + 1);
  }

  // Depth-first over levels [level, k) with `t` the product chosen so far.
  // Calls `found` on accepted leaves; stops when it returns true.
  bool descend(std::size_t level, const Permutation& t,
               const std::function<bool(const Permutation&)>& found) {
    if (level == base_.size()) {
      if (problem_.accept && !problem_.accept(t)) return false;
      return found(t);
    }
    const ChainLevel& l = chain_.level(level);
    Permutation& next = partial_[level];
    for (Point d : l.orbit) {
      Point img = t[d];
      images_[level] = img;
      if (problem_.prune &&
          !problem_.prune(std::span(base_).first(level + 1), std::span(images_).first(level + 1)))
        continue;
      const Permutation* rep = chain_.explicit_rep(level, d);
      if (rep)
        multiply_into(next, *rep, t);
      else
        multiply_into(next, chain_.coset_rep(level, d), t);
      Permutation copy = next;  // partial_ is reused by deeper levels
      if (descend(level + 1, copy, found)) return true;
    }
    return false;
  }

  const std::vector<Point>& base() const { return base_; }
  std::vector<Point>& images() { return images_; }

 private:
  const StabilizerChain& chain_;
  const SearchProblem& problem_;
  std::vector<Point> base_;
  std::vector<Point> images_;
  std::vector<Permutation> partial_;
};

}  // namespace

StabilizerChain adapted_chain(const PermGroup& g, std::span<const Point> prefix) {
  ChainOptions opt;
  opt.base_prefix.assign(prefix.begin(), prefix.end());
  opt.known_order = g.order();
  opt.seed = g.seed() + prefix.size();
  return StabilizerChain::build(g.degree(), g.chain().strong_generators(), opt);
}

PermGroup subgroup_search(const StabilizerChain& chain, const SearchProblem& problem,
                          const std::vector<Permutation>& known) {
  const std::size_t n = chain.degree();
  const std::size_t k = chain.length();
  Backtracker bt(chain, problem);
  const auto& base = bt.base();
  std::vector<Permutation> found_gens;
  std::vector<Permutation> known_in;
  for (const auto& g : known)
    if (!g.is_identity()) known_in.push_back(g);
  Order order = 1;

  for (std::size_t i = k; i-- > 0;) {
    auto fixes_prefix = [&](const Permutation& g) {
      for (std::size_t j = 0; j < i; ++j)
        if (g[base[j]] != base[j]) return false;
      return true;
    };
    UnionFind uf(n);
    auto absorb = [&](const Permutation& g) {
      for (Point p = 0; p < n; ++p) uf.unite(p, g[p]);
    };
    for (const auto& g : found_gens)
      if (fixes_prefix(g)) absorb(g);
    for (const auto& g : known_in)
      if (fixes_prefix(g)) absorb(g);
    std::vector<char> processed(n, 0);
    processed[uf.find(base[i])] = 1;

    std::vector<Point> candidates = chain.level(i).orbit;
    std::sort(candidates.begin(), candidates.end());
    for (Point gamma : candidates) {
      auto root = uf.find(gamma);
      if (processed[root]) continue;
      for (std::size_t j = 0; j < i; ++j) bt.images()[j] = base[j];
      bt.images()[i] = gamma;
      bool ok = !problem.prune ||
                problem.prune(std::span(base).first(i + 1), std::span(bt.images()).first(i + 1));
      std::optional<Permutation> hit;
      if (ok) {
        Permutation t = chain.coset_rep(i, gamma);
        bt.descend(i + 1, t, [&](const Permutation& g) {
          hit = g;
          return true;
        });
      }
      bool was_processed = true;
      if (hit) {
        found_gens.push_back(*hit);
        // Merge orbits, carrying the processed flag.
        std::vector<char> flags(n, 0);
        for (Point p = 0; p < n; ++p)
          if (processed[uf.find(p)]) flags[p] = 1;
        absorb(*hit);
        std::fill(processed.begin(), processed.end(), 0);
        for (Point p = 0; p < n; ++p)
          if (flags[p]) processed[uf.find(p)] = 1;
      }
      processed[uf.find(gamma)] = was_processed;
    }
    std::size_t orbit_len = 0;
    auto broot = uf.find(base[i]);
    for (Point p : chain.level(i).orbit)
      if (uf.find(p) == broot) ++orbit_len;
    order *= orbit_len;
  }

  std::vector<Permutation> gens = known_in;
  for (auto& g : found_gens) gens.push_back(std::move(g));
  return PermGroup(n, std::move(gens), order);
}

std::optional<Permutation> element_search(const StabilizerChain& chain,
                                          const SearchProblem& problem) {
  Backtracker bt(chain, problem);
  std::optional<Permutation> hit;
  bt.descend(0, Permutation(chain.degree()), [&](const Permutation& g) {
    hit = g;
    return true;
  });
  return hit;
}

std::vector<Point> cycle_base(const Permutation& x) {
  auto cycles = x.cycles();
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<Point> out;
  std::vector<bool> seen(x.degree(), false);
  for (const auto& c : cycles)
    for (Point p : c) {
      out.push_back(p);
      seen[p] = true;
    }
  for (Point p = 0; p < x.degree(); ++p)
    if (!seen[p]) out.push_back(p);
  return out;
}

std::function<bool(std::span<const Point>, std::span<const Point>)> cycle_pruner(
    const Permutation& x, const Permutation& y) {
  struct CycleInfo {
    std::vector<std::uint32_t> id, pos, len;
  };
  auto info = [](const Permutation& p) {
    CycleInfo c;
    std::size_t n = p.degree();
    c.id.assign(n, UINT32_MAX);
    c.pos.assign(n, 0);
    c.len.assign(n, 0);
    std::uint32_t next = 0;
    for (Point s = 0; s < n; ++s) {
      if (c.id[s] != UINT32_MAX) continue;
      std::uint32_t k = 0;
      Point q = s;
      do {
        c.id[q] = next;
        c.pos[q] = k++;
        q = p[q];
      } while (q != s);
      q = s;
      do {
        c.len[q] = k;
        q = p[q];
      } while (q != s);
      ++next;
    }
    return c;
  };
  auto cx = std::make_shared<CycleInfo>(info(x));
  auto cy = std::make_shared<CycleInfo>(info(y));
  return [cx, cy](std::span<const Point> base, std::span<const Point> img) {
    std::size_t j = base.size() - 1;
    Point b = base[j], g = img[j];
    std::uint32_t len = cx->len[b];
    if (cy->len[g] != len) return false;
    for (std::size_t m = 0; m < j; ++m) {
      bool same_x = cx->id[base[m]] == cx->id[b];
      bool same_y = cy->id[img[m]] == cy->id[g];
      if (same_x != same_y) return false;
      if (same_x) {
        std::uint32_t ox = (cx->pos[b] + len - cx->pos[base[m]]) % len;
        std::uint32_t oy = (cy->pos[g] + len - cy->pos[img[m]]) % len;
        if (ox != oy) return false;
      }
    }
    return true;
  };
}

std::vector<std::uint32_t> orbit_ids(std::size_t degree, const std::vector<Permutation>& gens) {
  UnionFind uf(degree);
  for (const auto& g : gens)
    for (Point p = 0; p < degree; ++p) uf.unite(p, g[p]);
  std::vector<std::uint32_t> id(degree);
  for (Point p = 0; p < degree; ++p) id[p] = uf.find(p);
  return id;
}

std::vector<Point> orbit_base(const PermGroup& a) {
  auto id = orbit_ids(a.degree(), a.generators());
  std::vector<std::size_t> size(a.degree(), 0);
  for (auto r : id) ++size[r];
  std::vector<Point> pts(a.degree());
  std::iota(pts.begin(), pts.end(), Point{0});
  std::stable_sort(pts.begin(), pts.end(), [&](Point p, Point q) {
    if (size[id[p]] != size[id[q]]) return size[id[p]] > size[id[q]];
    return id[p] < id[q];
  });
  return pts;
}

std::function<bool(std::span<const Point>, std::span<const Point>)> orbit_pruner(
    const PermGroup& a, const PermGroup& b) {
  auto ida = std::make_shared<std::vector<std::uint32_t>>(orbit_ids(a.degree(), a.generators()));
  auto idb = std::make_shared<std::vector<std::uint32_t>>(orbit_ids(b.degree(), b.generators()));
  auto sizes = [](const std::vector<std::uint32_t>& id) {
    std::vector<std::uint32_t> s(id.size(), 0);
    for (auto r : id) ++s[r];
    return s;
  };
  auto sa = std::make_shared<std::vector<std::uint32_t>>(sizes(*ida));
  auto sb = std::make_shared<std::vector<std::uint32_t>>(sizes(*idb));
  return [ida, idb, sa, sb](std::span<const Point> base, std::span<const Point> img) {
    std::size_t j = base.size() - 1;
    auto oa = (*ida)[base[j]], ob = (*idb)[img[j]];
    if ((*sa)[oa] != (*sb)[ob]) return false;
    for (std::size_t m = 0; m < j; ++m) {
      bool same_a = (*ida)[base[m]] == oa;
      bool same_b = (*idb)[img[m]] == ob;
      if (same_a != same_b) return false;
    }
    return true;
  };
}

}  // namespace sylab
