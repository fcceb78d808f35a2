#include "sylab/stabilizer_chain.hpp"

#include <algorithm>
#include <deque>

#include "sylab/error.hpp"

namespace sylab {

namespace {

constexpr std::size_t kExplicitTransversalBudget = std::size_t{1} << 24;

// Product replacement generator over the given generators.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::size_t degree, std::uint64_t seed)
      : rng_(seed) {
    std::size_t slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i)
      state_.push_back(gens.empty() ? Permutation(degree) : gens[i % gens.size()]);
    acc_ = Permutation(degree);
    for (int i = 0; i < 50; ++i) next();
  }

  const Permutation& next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t a = pick(rng_), b = pick(rng_);
    while (b == a && state_.size() > 1) b = pick(rng_);
    if (rng_() & 1)
      state_[a] = state_[a] * state_[b];
    else
      state_[a] = state_[a] * state_[b].inverse();
    acc_ = acc_ * state_[a];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> state_;
  Permutation acc_;
};

}  // namespace

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

Order StabilizerChain::order() const {
  Order o = 1;
  for (const auto& l : levels_)
    if (__builtin_mul_overflow(o, static_cast<Order>(l.orbit.size()), &o))
      throw ResourceLimitError("group order exceeds 64-bit range");
  return o;
}

Permutation StabilizerChain::coset_rep(std::size_t li, Point pt) const {
  const ChainLevel& l = levels_[li];
  std::int32_t pos = l.orbit_pos[pt];
  if (pos < 0) throw DomainError("point not in basic orbit");
  if (!l.transversal.empty()) return l.transversal[static_cast<std::size_t>(pos)];
  std::vector<std::int32_t> path;
  for (Point x = pt; l.label[x] >= 0; x = l.parent[x]) path.push_back(l.label[x]);
  Permutation r(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) r = r * l.generators[*it];
  return r;
}

const Permutation* StabilizerChain::explicit_rep(std::size_t li, Point pt) const {
  const ChainLevel& l = levels_[li];
  std::int32_t pos = l.orbit_pos[pt];
  if (pos < 0 || l.transversal.empty()) return nullptr;
  return &l.transversal[static_cast<std::size_t>(pos)];
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const {
  Permutation tmp;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const ChainLevel& l = levels_[i];
    Point d = g[l.base_point];
    std::int32_t pos = l.orbit_pos[d];
    if (pos < 0) return {std::move(g), i};
    if (d == l.base_point) continue;
    if (!l.transversal_inv.empty()) {
      multiply_into(tmp, g, l.transversal_inv[static_cast<std::size_t>(pos)]);
    } else {
      multiply_into(tmp, g, coset_rep(i, d).inverse());
    }
    std::swap(g, tmp);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [r, lvl] = sift(g);
  return lvl == levels_.size() && r.is_identity();
}

void StabilizerChain::rebuild_orbit(std::size_t li) {
  ChainLevel& l = levels_[li];
  l.orbit.clear();
  l.orbit_pos.assign(degree_, -1);
  l.label.assign(degree_, -1);
  l.parent.assign(degree_, 0);
  l.orbit.push_back(l.base_point);
  l.orbit_pos[l.base_point] = 0;
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    Point x = l.orbit[k];
    for (std::size_t s = 0; s < l.generators.size(); ++s) {
      Point y = l.generators[s][x];
      if (l.orbit_pos[y] < 0) {
        l.orbit_pos[y] = static_cast<std::int32_t>(l.orbit.size());
        l.label[y] = static_cast<std::int32_t>(s);
        l.parent[y] = x;
        l.orbit.push_back(y);
      }
    }
  }
  l.transversal.clear();
  l.transversal_inv.clear();
  if (l.orbit.size() * degree_ <= kExplicitTransversalBudget) {
    l.transversal.resize(l.orbit.size());
    l.transversal[0] = Permutation(degree_);
    for (std::size_t k = 1; k < l.orbit.size(); ++k) {
      Point y = l.orbit[k];
      l.transversal[k] = l.transversal[static_cast<std::size_t>(l.orbit_pos[l.parent[y]])] *
                         l.generators[static_cast<std::size_t>(l.label[y])];
    }
    l.transversal_inv.reserve(l.orbit.size());
    for (const auto& t : l.transversal) l.transversal_inv.push_back(t.inverse());
  }
}

Point StabilizerChain::choose_new_base_point(const Permutation& g) const {
  for (Point p : priority_)
    if (g[p] != p) return p;
  throw InternalError("identity cannot extend the base");
}

void StabilizerChain::add_generator(Permutation g, std::size_t level) {
  if (level == levels_.size()) {
    ChainLevel nl;
    nl.base_point = choose_new_base_point(g);
    levels_.push_back(std::move(nl));
  }
  strong_.push_back(g);
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].generators.push_back(g);
    rebuild_orbit(i);
  }
}

StabilizerChain StabilizerChain::from_bsgs(std::size_t degree, std::vector<Point> base,
                                           std::vector<Permutation> strong) {
  StabilizerChain c;
  c.degree_ = degree;
  c.strong_ = std::move(strong);
  for (std::size_t i = 0; i < base.size(); ++i) {
    ChainLevel l;
    l.base_point = base[i];
    for (const auto& s : c.strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = s[base[j]] == base[j];
      if (fixes) l.generators.push_back(s);
    }
    c.levels_.push_back(std::move(l));
    c.rebuild_orbit(i);
  }
  return c;
}

StabilizerChain StabilizerChain::build(std::size_t degree, std::span<const Permutation> gens,
                                       const ChainOptions& opt) {
  StabilizerChain c;
  c.degree_ = degree;
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (!g.is_identity()) nontrivial.push_back(g);
  }

  // Base extension order: prefix first, then points moved by the most
  // generators, ties by smallest point.
  std::vector<std::size_t> moved(degree, 0);
  for (const auto& g : nontrivial)
    for (Point p = 0; p < degree; ++p)
      if (g[p] != p) ++moved[p];
  std::vector<Point> rest(degree);
  for (Point p = 0; p < degree; ++p) rest[p] = p;
  std::stable_sort(rest.begin(), rest.end(),
                   [&](Point a, Point b) { return moved[a] > moved[b]; });
  std::vector<bool> in_prefix(degree, false);
  for (Point p : opt.base_prefix) {
    if (p >= degree) throw DomainError("base point out of range");
    if (!in_prefix[p]) {
      in_prefix[p] = true;
      c.priority_.push_back(p);
    }
  }
  for (Point p : rest)
    if (!in_prefix[p]) c.priority_.push_back(p);

  if (nontrivial.empty()) return c;

  // The base prefix is used verbatim so that searches can rely on it; levels
  // with trivial orbits are removed at the end.
  for (Point p : c.priority_) {
    if (!in_prefix[p]) break;
    ChainLevel l;
    l.base_point = p;
    c.levels_.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < c.levels_.size(); ++i) c.rebuild_orbit(i);

  auto sift_and_add = [&](const Permutation& g) -> bool {
    auto [r, lvl] = c.sift(g);
    if (lvl == c.levels_.size() && r.is_identity()) return false;
    c.add_generator(std::move(r), lvl);
    return true;
  };
  for (const auto& g : nontrivial) sift_and_add(g);

  bool certified = false;
  if (opt.known_order != 0) {
    ProductReplacement pr(nontrivial, degree, opt.seed);
    std::size_t quiet = 0;
    while (true) {
      Order o = c.order();
      if (o == opt.known_order) {
        certified = true;
        break;
      }
      if (o > opt.known_order) throw InternalError("chain order exceeds the stated group order");
      if (sift_and_add(pr.next()))
        quiet = 0;
      else if (++quiet > 200)
        break;
    }
  } else {
    ProductReplacement pr(nontrivial, degree, opt.seed);
    std::size_t quiet = 0;
    while (quiet < 30) {
      if (sift_and_add(pr.next()))
        quiet = 0;
      else
        ++quiet;
    }
  }

  if (!certified) {
    // Deterministic completion: every Schreier generator must sift to identity.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(c.levels_.size()) - 1;
    while (i >= 0) {
      bool added = false;
      std::size_t li = static_cast<std::size_t>(i);
      for (std::size_t k = 0; k < c.levels_[li].orbit.size() && !added; ++k) {
        Point d = c.levels_[li].orbit[k];
        Permutation ud = c.coset_rep(li, d);
        for (std::size_t s = 0; s < c.levels_[li].generators.size(); ++s) {
          const Permutation& gen = c.levels_[li].generators[s];
          Point e = gen[d];
          Permutation h = ud * gen * c.coset_rep(li, e).inverse();
          auto [r, lvl] = c.sift(std::move(h), li + 1);
          if (lvl == c.levels_.size() && r.is_identity()) continue;
          c.add_generator(std::move(r), lvl);
          i = static_cast<std::ptrdiff_t>(lvl);
          added = true;
          break;
        }
      }
      if (!added) --i;
    }
  }

  // Drop redundant levels (orbit of size one) from the prefix.
  std::vector<Point> base;
  for (const auto& l : c.levels_)
    if (l.orbit.size() > 1) base.push_back(l.base_point);
  if (base.size() != c.levels_.size()) {
    auto strong = c.strong_;
    auto prio = c.priority_;
    c = from_bsgs(degree, std::move(base), std::move(strong));
    c.priority_ = std::move(prio);
  }
  return c;
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto& l = levels_[i];
    std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
    g = g * coset_rep(i, l.orbit[pick(rng)]);
  }
  return g;
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  std::size_t k = levels_.size();
  if (k == 0) {
    visit(Permutation(degree_));
    return;
  }
  // g = u_{k-1} * ... * u_0; walk levels from the top.
  std::vector<Permutation> partial(k + 1);
  partial[k] = Permutation(degree_);
  std::vector<std::size_t> idx(k, 0);
  std::ptrdiff_t lvl = static_cast<std::ptrdiff_t>(k) - 1;
  while (true) {
    std::size_t li = static_cast<std::size_t>(lvl);
    const auto& l = levels_[li];
    multiply_into(partial[li], partial[li + 1], coset_rep(li, l.orbit[idx[li]]));
    if (li == 0) {
      if (!visit(partial[0])) return;
      // advance
      std::size_t j = 0;
      while (j < k && ++idx[j] == levels_[j].orbit.size()) {
        idx[j] = 0;
        ++j;
      }
      if (j == k) return;
      lvl = static_cast<std::ptrdiff_t>(j);
    } else {
      --lvl;
    }
  }
}

}  // namespace sylab
