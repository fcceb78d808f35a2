#include "sylab/sylow.hpp"

#include <random>
#include <map>
#include <set>

#include "sylab/classes.hpp"
#include "sylab/error.hpp"
#include "sylab/quotient.hpp"
#include "sylab/subgroups.hpp"

namespace sylab {

namespace {

constexpr int kSeedAttempts = 64;
constexpr int kGrowAttempts = 20000;
/// Above this order the search first descends into the centralizer of a
/// p-central element.
constexpr Order kReduceOrder = 20000;

PermGroup cyclic_subgroup(const Permutation& x) {
  return PermGroup(x.degree(), {x}, x.order());
}

/// Grows the p-subgroup q inside g until it reaches order `target`.
PermGroup grow(const PermGroup& g, PermGroup q, std::uint64_t p, Order target,
               std::mt19937_64& rng);

PermGroup sylow_impl(const PermGroup& g, std::uint64_t p, std::mt19937_64& rng) {
  const Order target = p_part_of(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());
  if (target == g.order()) return g;

  PermGroup seed = PermGroup::trivial(g.degree());
  for (int i = 0; i < kSeedAttempts; ++i) {
    auto y = p_part(g.chain().random_element(rng), p);
    const Order oy = y.order();
    if (oy == 1) continue;
    if (oy == target) return cyclic_subgroup(y);
    if (g.order() <= kReduceOrder) {
      seed = cyclic_subgroup(y);
      break;
    }
    auto z = y.pow(static_cast<std::int64_t>(oy / p));
    auto c = centralizer(g, z);
    if (p_part_of(c.order(), p) != target) continue;
    if (c.order() < g.order()) return sylow_impl(c, p, rng);
    seed = cyclic_subgroup(z);
    break;
  }
  return grow(g, seed, p, target, rng);
}

PermGroup grow(const PermGroup& g, PermGroup q, std::uint64_t p, Order target,
               std::mt19937_64& rng) {
  while (q.order() < target) {
    PermGroup n = q.is_trivial() ? g : normalizer(g, q);
    if (n.order() < g.order()) {
      // q is normal in n, so every Sylow subgroup of n contains it.
      q = sylow_impl(n, p, rng);
      continue;
    }
    bool grown = false;
    for (int i = 0; i < kGrowAttempts && !grown; ++i) {
      auto y = p_part(g.chain().random_element(rng), p);
      if (q.contains(y)) continue;
      auto gens = q.generators();
      gens.push_back(y);
      q = PermGroup(g.degree(), std::move(gens));
      grown = true;
    }
    if (!grown) throw InternalError("no p-element found outside a normal p-subgroup");
  }
  return q;
}

}  // namespace

PermGroup sylow(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::mt19937_64 rng(g.seed() ^ (p * 0x9e3779b97f4a7c15ULL));
  auto s = sylow_impl(g, p, rng);
  if (s.order() != p_part_of(g.order(), p)) throw InternalError("Sylow subgroup has wrong order");
  return PermGroup(g.degree(), s.generators(), s.order(),
                   g.name().empty() ? std::string{} : "Syl" + std::to_string(p) + "(" + g.name() + ")");
}

LocalData local_data(const PermGroup& g, std::uint64_t p) { return local_data(g, sylow(g, p), p); }

LocalData local_data(const PermGroup& g, const PermGroup& s, std::uint64_t p) {
  LocalData d;
  d.p = p;
  d.P = s;
  d.N = normalizer(g, s);
  d.C = centralizer(g, s);
  d.ZP = center(s);
  // P ∩ C_G(P) = Z(P), so |P C_G(P)| = |P||C| / |Z(P)|.
  const Order pc = d.P.order() / d.ZP.order() * d.C.order();
  if (d.N.order() % pc != 0 || d.N.order() % d.C.order() != 0)
    throw InternalError("local subgroup orders are inconsistent");
  d.automizer_order = d.N.order() / pc;
  d.nc_order = d.N.order() / d.C.order();
  if (p % 2 == 1 && (d.automizer_order % 2) != (d.nc_order % 2))
    throw InternalError("automizer and N/C parities disagree");
  return d;
}

bool odd_automizer(const PermGroup& g, std::uint64_t p) {
  if (p == 2) throw DomainError("odd_automizer needs an odd prime");
  return local_data(g, p).automizer_order % 2 == 1;
}

bool is_real(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw DomainError("element is not in the group");
  return conjugator(g, x, x.inverse()).has_value();
}

VerificationReport check_central_elements_not_real(const PermGroup& g, std::uint64_t p) {
  auto r = make_report("lemma23", g, p);
  ReportTimer timer(r);
  auto d = local_data(g, p);
  r.set("automizer_order", static_cast<std::int64_t>(d.automizer_order));
  r.set("center_order", static_cast<std::int64_t>(d.ZP.order()));
  r.hypothesis_holds = d.automizer_order % 2 == 1 && !d.P.is_trivial();
  if (!r.hypothesis_holds) {
    r.verdict = Verdict::Vacuous;
    return r;
  }
  // Realness is a class property, so one representative per G-class meeting Z(P) suffices.
  const auto& classes = g.classes();
  std::set<std::size_t> seen;
  std::int64_t checked = 0;
  r.verdict = Verdict::Pass;
  d.ZP.chain().for_each_element([&](const Permutation& z) {
    if (z.is_identity()) return true;
    auto c = classes.class_of(z);
    if (!seen.insert(c).second) return true;
    ++checked;
    if (classes.inverse_map()[c] == c) {
      r.verdict = Verdict::Fail;
      r.witness.emplace_back("element", z.to_string());
      return false;
    }
    return true;
  });
  r.set("central_classes_checked", checked);
  return r;
}

namespace {

bool is_p_power(Order n, std::uint64_t p) { return p_part_of(n, p) == n; }

}  // namespace

VerificationReport check_normal_subgroup_automizer_map(const PermGroup& g, const PermGroup& h, std::uint64_t p,
                                   const Limits& limits) {
  auto r = make_report("lemma21", g, p);
  ReportTimer timer(r);
  auto precondition = [&](const std::string& why) {
    r.hypothesis_holds = false;
    r.verdict = Verdict::Error;
    r.error_kind = "precondition";
    r.message = why;
    return r;
  };
  if (!g.contains(h) || !is_normal(g, h)) return precondition("H is not normal in G");
  auto P = sylow(g, p);
  auto Q = intersection(P, h);
  if (P.order() / Q.order() * h.order() != g.order()) return precondition("G != PH");
  r.hypothesis_holds = true;

  auto X = normalizer(h, Q);
  auto CHQ = centralizer(h, Q);
  auto K = join(Q, CHQ);
  auto d = local_data(g, P, p);
  auto NHP = intersection(d.N, h);
  auto L = join(P, d.C);
  const Order bound = limits.max_automizer_map_cosets;
  if (X.order() / K.order() > bound || d.automizer_order > bound)
    throw ResourceLimitError("quotient too large");

  // (i) P-fixed cosets of K in X versus the cosets meeting N_H(P).
  auto kc = coset_chain(K);
  auto cosets = right_coset_keys(X, kc, bound + 1);
  std::set<Permutation> fixed;
  for (const auto& [x, idx] : cosets) {
    bool ok = true;
    for (const auto& u : P.generators())
      if (!K.contains(x.conjugate(u) * x.inverse())) {
        ok = false;
        break;
      }
    if (ok) fixed.insert(x);
  }
  auto from_nhp = right_coset_keys(NHP, kc, bound + 1);
  std::set<Permutation> image_of_nhp;
  for (const auto& [x, idx] : from_nhp) image_of_nhp.insert(x);
  const bool fixed_ok = fixed == image_of_nhp;

  // (ii)/(iii) The map K y -> L y for y in N_H(P), explored over pairs of keys.
  auto lc = coset_chain(L);
  auto key_pair = [&](const Permutation& y) {
    return std::make_pair(min_coset_element(kc, y), min_coset_element(lc, y));
  };
  std::set<std::pair<Permutation, Permutation>> pairs{key_pair(Permutation(g.degree()))};
  std::vector<Permutation> frontier{Permutation(g.degree())};
  const std::size_t pair_cap = static_cast<std::size_t>(bound) * bound;
  while (!frontier.empty()) {
    auto y = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : NHP.generators()) {
      auto ys = y * s;
      if (pairs.insert(key_pair(ys)).second) {
        if (pairs.size() > pair_cap) throw ResourceLimitError("quotient too large");
        frontier.push_back(std::move(ys));
      }
    }
  }
  std::map<Permutation, Permutation> phi;
  bool well_defined = true;
  std::set<Permutation> image;
  for (const auto& [kk, lk] : pairs) {
    auto [it, inserted] = phi.emplace(kk, lk);
    if (!inserted && it->second != lk) well_defined = false;
    image.insert(lk);
  }
  const auto identity_l = min_coset_element(lc, Permutation(g.degree()));
  Order kernel = 0;
  for (const auto& [kk, lk] : phi)
    if (lk == identity_l) ++kernel;

  const bool surjective = image.size() == d.automizer_order;
  const bool p_kernel = is_p_power(kernel, p);
  r.set("sylow_order", static_cast<std::int64_t>(P.order()));
  r.set("q_order", static_cast<std::int64_t>(Q.order()));
  r.set("quotient_order", static_cast<std::int64_t>(cosets.size()));
  r.set("fixed_cosets", static_cast<std::int64_t>(fixed.size()));
  r.set("nhp_cosets", static_cast<std::int64_t>(image_of_nhp.size()));
  r.set("automizer_order", static_cast<std::int64_t>(d.automizer_order));
  r.set("image_order", static_cast<std::int64_t>(image.size()));
  r.set("kernel_order", static_cast<std::int64_t>(kernel));
  r.set("well_defined", well_defined);
  r.verdict = fixed_ok && well_defined && surjective && p_kernel ? Verdict::Pass : Verdict::Fail;
  if (r.verdict == Verdict::Fail) {
    r.witness.emplace_back("h_generators", [&] {
      std::string s;
      for (const auto& x : h.generators()) s += (s.empty() ? "" : " ") + x.to_string();
      return s;
    }());
    r.witness.emplace_back("failed", std::string(!fixed_ok       ? "fixed-points"
                                                 : !well_defined ? "well-defined"
                                                 : !surjective   ? "surjective"
                                                                 : "p-kernel"));
  }
  return r;
}

}  // namespace sylab
