#include "sylab/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sylab/error.hpp"
#include "sylab/search.hpp"

namespace sylab {

namespace {

// Groups above this order get the characteristic-subgroup reduction before
// a direct normalizer backtrack.
constexpr Order kDirectNormalizerOrder = 50'000;

PermGroup centralizer_any(const PermGroup& g, const Permutation& x, bool x_in_g) {
  if (x.is_identity() || g.is_trivial()) return g;
  auto chain = adapted_chain(g, cycle_base(x));
  SearchProblem prob;
  prob.prune = cycle_pruner(x, x);
  prob.accept = [&x](const Permutation& t) { return x * t == t * x; };
  std::vector<Permutation> known;
  if (x_in_g) known.push_back(x);
  return subgroup_search(chain, prob, known);
}

PermGroup normalizer_backtrack(const PermGroup& g, const PermGroup& h) {
  auto chain = adapted_chain(g, orbit_base(h));
  SearchProblem prob;
  prob.prune = orbit_pruner(h, h);
  prob.accept = [&h](const Permutation& t) {
    for (const auto& x : h.generators())
      if (!h.contains(x.conjugate(t))) return false;
    return true;
  };
  return subgroup_search(chain, prob, h.generators());
}

PermGroup normalizer_cyclic(const PermGroup& g, const Permutation& x) {
  Order m = x.order();
  PermGroup c = centralizer_any(g, x, true);
  std::vector<Permutation> gens = c.generators();
  auto chain = adapted_chain(g, cycle_base(x));
  std::set<Order> reached{1};
  for (Order k = 2; k < m; ++k) {
    if (std::gcd(k, m) != 1 || reached.count(k)) continue;
    Permutation y = x.pow(static_cast<std::int64_t>(k));
    SearchProblem prob;
    prob.prune = cycle_pruner(x, y);
    prob.accept = [&](const Permutation& t) { return x.conjugate(t) == y; };
    auto hit = element_search(chain, prob);
    if (!hit) continue;
    gens.push_back(*hit);
    // Close the set of realized exponents under multiplication mod m.
    reached.insert(k);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Order> cur(reached.begin(), reached.end());
      for (Order a : cur)
        for (Order b : cur)
          if (reached.insert(a * b % m).second) grew = true;
    }
  }
  return PermGroup(g.degree(), std::move(gens), c.order() * reached.size());
}

}  // namespace

OrbitTransversal orbit_transversal(const PermGroup& g, Point pt) {
  if (pt >= g.degree()) throw DomainError("point out of range");
  OrbitTransversal ot;
  std::vector<std::int32_t> pos(g.degree(), -1);
  ot.orbit.push_back(pt);
  ot.transversal.push_back(Permutation(g.degree()));
  pos[pt] = 0;
  for (std::size_t k = 0; k < ot.orbit.size(); ++k)
    for (const auto& s : g.generators()) {
      Point y = s[ot.orbit[k]];
      if (pos[y] >= 0) continue;
      pos[y] = static_cast<std::int32_t>(ot.orbit.size());
      ot.orbit.push_back(y);
      ot.transversal.push_back(ot.transversal[k] * s);
    }
  return ot;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw DomainError("element is not in the group");
  return centralizer_any(g, x, true);
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h) {
  PermGroup c = g;
  for (const auto& x : h.generators()) c = centralizer_any(c, x, c.contains(x));
  return c;
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!g.contains(h)) throw DomainError("subgroup is not contained in the group");
  if (h.order() == 1 || h.order() == g.order()) return g;
  if (auto x = cyclic_generator(h)) return normalizer_cyclic(g, *x);
  if (g.order() > kDirectNormalizerOrder) {
    // N_G(H) ≤ N_G(X) for every characteristic subgroup X of H.
    std::optional<PermGroup> charsub;
    PermGroup z = center(h);
    if (!z.is_trivial() && z.order() < h.order()) {
      charsub = z;
    } else if (h.is_abelian()) {
      // Subgroup generated by p-th powers; characteristic in abelian H.
      std::vector<Permutation> pw;
      for (auto p : prime_divisors(h.order()))
        for (const auto& x : h.generators()) pw.push_back(x.pow(static_cast<std::int64_t>(p)));
      PermGroup q = make_subgroup(h.degree(), pw);
      if (!q.is_trivial() && q.order() < h.order()) charsub = q;
    }
    if (charsub) {
      PermGroup k = normalizer(g, *charsub);
      if (k.order() < g.order()) return normalizer(k, h);
    }
  }
  return normalizer_backtrack(g, h);
}

std::optional<Permutation> conjugator(const PermGroup& g, const Permutation& x,
                                      const Permutation& y) {
  if (!g.contains(x) || !g.contains(y)) throw DomainError("element is not in the group");
  if (x == y) return Permutation(g.degree());
  if (x.cycle_type() != y.cycle_type()) return std::nullopt;
  auto chain = adapted_chain(g, cycle_base(x));
  SearchProblem prob;
  prob.prune = cycle_pruner(x, y);
  prob.accept = [&](const Permutation& t) { return x.conjugate(t) == y; };
  return element_search(chain, prob);
}

std::optional<Permutation> subgroup_conjugator(const PermGroup& g, const PermGroup& a,
                                               const PermGroup& b) {
  if (!g.contains(a) || !g.contains(b)) throw DomainError("subgroup is not contained in the group");
  if (a.order() != b.order()) return std::nullopt;
  if (b.contains(a)) return Permutation(g.degree());
  auto chain = adapted_chain(g, orbit_base(a));
  SearchProblem prob;
  prob.prune = orbit_pruner(a, b);
  prob.accept = [&](const Permutation& t) {
    for (const auto& x : a.generators())
      if (!b.contains(x.conjugate(t))) return false;
    return true;
  };
  return element_search(chain, prob);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = a.order() <= b.order() ? b : a;
  if (other.contains(small)) return small;
  auto ids = orbit_ids(other.degree(), other.generators());
  SearchProblem prob;
  prob.prune = [ids](std::span<const Point> base, std::span<const Point> img) {
    return ids[base.back()] == ids[img.back()];
  };
  prob.accept = [&other](const Permutation& t) { return other.contains(t); };
  return subgroup_search(small.chain(), prob);
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
  std::vector<Permutation> gens;
  for (const auto& x : s)
    if (!x.is_identity()) gens.push_back(x);
  PermGroup h(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : g.generators()) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Permutation y = gens[i].conjugate(c);
        if (!h.contains(y)) {
          gens.push_back(std::move(y));
          h = PermGroup(g.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

PermGroup center(const PermGroup& g) {
  PermGroup c = g;
  for (const auto& x : g.generators()) c = centralizer_any(c, x, c.contains(x));
  return c;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!g.contains(h)) return false;
  for (const auto& c : g.generators())
    for (const auto& x : h.generators())
      if (!h.contains(x.conjugate(c))) return false;
  return true;
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens = a.generators();
  for (const auto& x : b.generators())
    if (!a.contains(x)) gens.push_back(x);
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& c) {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(x.conjugate(c));
  return PermGroup(h.degree(), std::move(gens), h.order());
}

std::optional<Permutation> cyclic_generator(const PermGroup& h) {
  if (!h.is_abelian()) return std::nullopt;
  Order n = h.order();
  Permutation gen(h.degree());
  for (auto p : prime_divisors(n)) {
    Permutation best(h.degree());
    for (const auto& x : h.generators()) {
      Permutation y = p_part(x, p);
      if (y.order() > best.order()) best = y;
    }
    gen = gen * best;
  }
  if (gen.order() != n) return std::nullopt;
  return gen;
}

Permutation p_part(const Permutation& g, std::uint64_t p) {
  Order o = g.order();
  Order m = o;
  while (m % p == 0) m /= p;
  return g.pow(static_cast<std::int64_t>(m));
}

unsigned nu_p(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t p_part_of(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace sylab
