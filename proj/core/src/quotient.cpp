#include "sylab/quotient.hpp"

#include <numeric>

#include "sylab/error.hpp"
#include "sylab/search.hpp"
#include "sylab/subgroups.hpp"

namespace sylab {

StabilizerChain coset_chain(const PermGroup& k) {
  ChainOptions opt;
  opt.base_prefix.resize(k.degree());
  std::iota(opt.base_prefix.begin(), opt.base_prefix.end(), Point{0});
  opt.known_order = k.order();
  opt.seed = k.seed();
  return StabilizerChain::build(k.degree(), k.generators(), opt);
}

Permutation min_coset_element(const StabilizerChain& k_chain, const Permutation& g) {
  Permutation h = g;
  for (std::size_t i = 0; i < k_chain.length(); ++i) {
    const auto& lv = k_chain.level(i);
    Point best = lv.orbit.front();
    for (Point d : lv.orbit)
      if (h[d] < h[best]) best = d;
    if (best != lv.base_point) h = k_chain.coset_rep(i, best) * h;
  }
  return h;
}

Permutation Quotient::map(const Permutation& x) const {
  switch (kind_) {
    case Kind::Identity:
      return x;
    case Kind::Blocks: {
      std::vector<Point> img(degree_);
      for (Point p = 0; p < x.degree(); ++p) img[block_of_[p]] = block_of_[x[p]];
      return Permutation(std::move(img));
    }
    case Kind::Cosets: {
      std::vector<Point> img(degree_);
      for (const auto& [key, idx] : coset_index_)
        img[idx] = coset_index_.at(min_coset_element(k_chain_, key * x));
      return Permutation(std::move(img));
    }
  }
  throw InternalError("unknown quotient kind");
}

std::unordered_map<Permutation, Point, PermutationHash> right_coset_keys(
    const PermGroup& g, const StabilizerChain& kc, Order bound) {
  std::unordered_map<Permutation, Point, PermutationHash> index;
  std::vector<Permutation> keys{min_coset_element(kc, Permutation(g.degree()))};
  index.emplace(keys.front(), 0);
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (const auto& s : g.generators()) {
      auto key = min_coset_element(kc, keys[i] * s);
      if (index.count(key)) continue;
      if (keys.size() >= bound) return {};
      index.emplace(key, static_cast<Point>(keys.size()));
      keys.push_back(std::move(key));
    }
  return index;
}

Quotient quotient_representation(const PermGroup& g, const PermGroup& n, const Limits& limits,
                                 const std::vector<PermGroup>& hints) {
  if (!is_normal(g, n)) throw DomainError("subgroup is not normal");
  const Order target = g.order() / n.order();
  Quotient q;
  if (n.is_trivial()) {
    q.kind_ = Quotient::Kind::Identity;
    q.image_ = g;
    return q;
  }

  auto accept = [&](std::size_t degree) {
    q.degree_ = degree;
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(q.map(s));
    PermGroup img(degree, std::move(gens));
    if (img.order() != target) return false;
    q.image_ = PermGroup(degree, img.generators(), target);
    return true;
  };

  // Orbits of N are blocks of G.
  auto ids = orbit_ids(g.degree(), n.generators());
  std::vector<Point> relabel(g.degree(), static_cast<Point>(-1));
  Point blocks = 0;
  for (Point p = 0; p < g.degree(); ++p) {
    if (relabel[ids[p]] == static_cast<Point>(-1)) relabel[ids[p]] = blocks++;
    ids[p] = relabel[ids[p]];
  }
  if (blocks > 1) {
    q.kind_ = Quotient::Kind::Blocks;
    q.block_of_.assign(ids.begin(), ids.end());
    if (accept(blocks)) return q;
  }

  std::vector<PermGroup> candidates = hints;
  candidates.push_back(n);
  for (const auto& k : candidates) {
    if (!k.contains(n) || g.order() / k.order() > limits.max_quotient_degree) continue;
    q.kind_ = Quotient::Kind::Cosets;
    q.k_chain_ = coset_chain(k);
    q.coset_index_ = right_coset_keys(g, q.k_chain_, limits.max_quotient_degree);
    if (q.coset_index_.empty()) continue;
    if (accept(q.coset_index_.size())) return q;
  }
  throw ResourceLimitError("quotient too large");
}

}  // namespace sylab
