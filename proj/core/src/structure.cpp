#include "sylab/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sylab/classes.hpp"
#include "sylab/error.hpp"
#include "sylab/field.hpp"
#include "sylab/subgroups.hpp"
#include "sylab/sylow.hpp"

namespace sylab {

std::string SimpleFactorId::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(n);
    case Kind::Alternating: return "A" + std::to_string(n);
    case Kind::Psl2: return "PSL2(" + std::to_string(q) + ")";
    case Kind::Named: return label;
    case Kind::Unidentified: return "unidentified(" + std::to_string(order) + ")";
  }
  return "?";
}

namespace {

using u128 = unsigned __int128;

SimpleFactorId named(std::string label, Order order) {
  SimpleFactorId id;
  id.kind = SimpleFactorId::Kind::Named;
  id.label = std::move(label);
  id.order = order;
  return id;
}

u128 ipow(u128 q, unsigned e) {
  u128 r = 1;
  while (e--) r *= q;
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return gcd_u64(a, b); }

std::vector<SimpleFactorId> build_table() {
  std::vector<SimpleFactorId> t;
  auto add = [&](u128 order, SimpleFactorId id) {
    if (order >= kSimpleTableBound) return;
    id.order = static_cast<Order>(order);
    t.push_back(std::move(id));
  };
  for (std::uint64_t n = 5; n <= 12; ++n) {
    u128 o = 1;
    for (std::uint64_t i = 3; i <= n; ++i) o *= i;
    SimpleFactorId id;
    id.kind = SimpleFactorId::Kind::Alternating;
    id.n = n;
    add(o, id);
  }
  for (std::uint64_t q = 2; q < 1000; ++q) {
    auto [p, f] = prime_power(q);
    if (p == 0) continue;
    const u128 Q = q;
    const std::string s = "(" + std::to_string(q) + ")";
    if (q >= 7 && q != 9) {
      SimpleFactorId id;
      id.kind = SimpleFactorId::Kind::Psl2;
      id.q = q, id.p = p, id.f = f;
      add(Q * (Q * Q - 1) / gcd(2, q - 1), id);
    }
    if (q >= 3) add(ipow(Q, 3) * (ipow(Q, 3) - 1) * (Q * Q - 1) / gcd(3, q - 1), named("PSL3" + s, 0));
    if (q >= 3) add(ipow(Q, 3) * (ipow(Q, 3) + 1) * (Q * Q - 1) / gcd(3, q + 1), named("PSU3" + s, 0));
    if (q >= 3)
      add(ipow(Q, 6) * (ipow(Q, 4) - 1) * (ipow(Q, 3) - 1) * (Q * Q - 1) / gcd(4, q - 1),
          named("PSL4" + s, 0));
    if (q >= 3)
      add(ipow(Q, 6) * (ipow(Q, 4) - 1) * (ipow(Q, 3) + 1) * (Q * Q - 1) / gcd(4, q + 1),
          named("PSU4" + s, 0));
    if (q >= 3) add(ipow(Q, 4) * (ipow(Q, 4) - 1) * (Q * Q - 1) / gcd(2, q - 1), named("PSp4" + s, 0));
    add(ipow(Q, 10) * (ipow(Q, 5) - 1) * (ipow(Q, 4) - 1) * (ipow(Q, 3) - 1) * (Q * Q - 1) / gcd(5, q - 1),
        named("PSL5" + s, 0));
    add(ipow(Q, 10) * (ipow(Q, 5) + 1) * (ipow(Q, 4) - 1) * (ipow(Q, 3) + 1) * (Q * Q - 1) / gcd(5, q + 1),
        named("PSU5" + s, 0));
    add(ipow(Q, 9) * (ipow(Q, 6) - 1) * (ipow(Q, 4) - 1) * (Q * Q - 1) / gcd(2, q - 1), named("PSp6" + s, 0));
    if (q >= 3 && p != 2)
      add(ipow(Q, 9) * (ipow(Q, 6) - 1) * (ipow(Q, 4) - 1) * (Q * Q - 1) / 2, named("O7" + s, 0));
    if (q >= 3) add(ipow(Q, 6) * (ipow(Q, 6) - 1) * (Q * Q - 1), named("G2" + s, 0));
    if (p == 2 && f % 2 == 1 && q >= 8) add(Q * Q * (Q * Q + 1) * (Q - 1), named("Sz" + s, 0));
  }
  add(17971200, named("2F4(2)'", 0));
  for (auto [label, order] : std::vector<std::pair<const char*, Order>>{
           {"M11", 7920}, {"M12", 95040}, {"J1", 175560}, {"M22", 443520}, {"J2", 604800},
           {"M23", 10200960}, {"HS", 44352000}, {"J3", 50232960}})
    add(order, named(label, 0));
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.order < b.order; });
  return t;
}

}  // namespace

std::vector<SimpleFactorId> simple_order_table() {
  static const std::vector<SimpleFactorId> table = build_table();
  return table;
}

SimpleFactorId identify_simple_order(Order order, const std::function<bool(Order)>& has_element_order) {
  SimpleFactorId id;
  id.order = order;
  if (is_prime(order)) {
    id.kind = SimpleFactorId::Kind::Cyclic;
    id.n = order;
    return id;
  }
  if (order >= kSimpleTableBound) return id;
  std::vector<SimpleFactorId> hits;
  for (const auto& e : simple_order_table())
    if (e.order == order) hits.push_back(e);
  if (hits.empty()) return id;
  if (hits.size() == 1) return hits.front();
  if (order == 20160) {
    bool a8 = has_element_order(15);
    for (const auto& h : hits)
      if ((h.kind == SimpleFactorId::Kind::Alternating) == a8) return h;
  }
  throw InternalError("unresolved simple order coincidence at " + std::to_string(order));
}

namespace {

/// Same subgroup, assuming both lie in a common group.
bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.contains(b);
}

void add_unique(std::vector<PermGroup>& list, PermGroup h, std::size_t limit) {
  for (const auto& x : list)
    if (same_subgroup(x, h)) return;
  if (list.size() >= limit) throw ResourceLimitError("too many normal subgroups");
  list.push_back(std::move(h));
}

/// Order of the image of x in M/N.
Order order_mod(const Permutation& x, const PermGroup& n) {
  const Order o = x.order();
  Order best = o;
  for (Order d = 1; d <= o; ++d)
    if (o % d == 0 && n.contains(x.pow(static_cast<std::int64_t>(d)))) {
      best = d;
      break;
    }
  return best;
}

/// Element orders of M/N via the class representatives of M.
std::set<Order> section_element_orders(const PermGroup& m, const PermGroup& n) {
  std::set<Order> out;
  for (const auto& c : m.classes().classes()) out.insert(order_mod(c.representative, n));
  return out;
}

SimpleFactorId identify_section(const PermGroup& m, const PermGroup& n) {
  const Order order = m.order() / n.order();
  std::optional<std::set<Order>> orders;
  auto element_orders = [&]() -> const std::set<Order>& {
    if (!orders) orders = section_element_orders(m, n);
    return *orders;
  };
  auto id = identify_simple_order(order, [&](Order k) { return element_orders().count(k) > 0; });
  if (n.is_trivial() && id.kind != SimpleFactorId::Kind::Cyclic && order < kSimpleTableBound) {
    id.class_count = m.classes().count();
    id.max_element_order = *element_orders().rbegin();
  }
  return id;
}

/// A subgroup of index p containing G' for the chosen prime p dividing |G:G'|.
PermGroup abelian_quotient_kernel(const PermGroup& g, const PermGroup& derived, SeriesOrder order) {
  auto primes = prime_divisors(g.order() / derived.order());
  const std::uint64_t p = order == SeriesOrder::LargestFirst ? primes.front() : primes.back();
  std::vector<Permutation> gens = derived.generators();
  for (const auto& s : g.generators()) gens.push_back(s.pow(static_cast<std::int64_t>(p)));
  PermGroup n = make_subgroup(g.degree(), gens);
  for (const auto& s : g.generators()) {
    if (n.contains(s)) continue;
    auto more = n.generators();
    more.push_back(s);
    PermGroup bigger = make_subgroup(g.degree(), more);
    if (bigger.order() < g.order()) n = bigger;
  }
  if (n.order() * p != g.order()) throw InternalError("abelian quotient kernel has wrong index");
  return n;
}

}  // namespace

std::vector<PermGroup> normal_subgroups(const PermGroup& g, std::size_t limit) {
  std::vector<PermGroup> closures;
  add_unique(closures, PermGroup::trivial(g.degree()), limit);
  for (const auto& c : g.classes().classes())
    if (!c.representative.is_identity())
      add_unique(closures, normal_closure(g, {c.representative}), limit);
  std::vector<PermGroup> all = closures;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 1; j < closures.size(); ++j) {
      if (all[i].contains(closures[j])) continue;
      add_unique(all, join(all[i], closures[j]), limit);
    }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return all;
}

std::optional<PermGroup> maximal_normal_subgroup(const PermGroup& g, SeriesOrder order) {
  if (g.order() <= 1) throw DomainError("trivial group has no maximal normal subgroup");
  if (is_prime(g.order())) return PermGroup::trivial(g.degree());
  if (order == SeriesOrder::LargestFirst) {
    // An index-p subgroup is larger than any kernel of a nonabelian simple
    // quotient, so it wins whenever G is not perfect.
    auto derived = derived_subgroup(g);
    if (derived.order() < g.order()) return abelian_quotient_kernel(g, derived, order);
  }
  auto all = normal_subgroups(g);
  std::vector<PermGroup> proper(all.begin(), all.end() - 1);
  if (!same_subgroup(all.back(), g)) throw InternalError("normal lattice misses the group");
  std::vector<PermGroup> maximal;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool top = true;
    for (std::size_t j = i + 1; j < proper.size() && top; ++j)
      if (proper[j].order() > proper[i].order() && proper[j].contains(proper[i])) top = false;
    if (top) maximal.push_back(proper[i]);
  }
  if (maximal.size() == 1 && maximal.front().is_trivial()) return std::nullopt;
  return order == SeriesOrder::LargestFirst ? maximal.back() : maximal.front();
}

std::vector<CompositionFactor> composition_series(const PermGroup& g, SeriesOrder order) {
  std::vector<CompositionFactor> out;
  PermGroup current = g;
  while (current.order() > 1) {
    auto n = maximal_normal_subgroup(current, order);
    PermGroup lower = n ? *n : PermGroup::trivial(g.degree());
    CompositionFactor f{identify_section(current, lower), current, lower};
    out.push_back(std::move(f));
    current = lower;
  }
  return out;
}

std::vector<SimpleFactorId> composition_factors(const PermGroup& g, SeriesOrder order) {
  std::vector<SimpleFactorId> ids;
  for (auto& f : composition_series(g, order)) ids.push_back(std::move(f.id));
  return ids;
}

SimpleFactorId identify_simple(const PermGroup& s) {
  if (s.order() <= 1) throw DomainError("trivial group is not simple");
  if (!is_prime(s.order())) {
    if (derived_subgroup(s).order() < s.order()) throw DomainError("group is not simple");
    for (const auto& c : s.classes().classes())
      if (!c.representative.is_identity() && normal_closure(s, {c.representative}).order() < s.order())
        throw DomainError("group is not simple");
  }
  return identify_section(s, PermGroup::trivial(s.degree()));
}

bool sylow_cyclic(const PermGroup& s, std::uint64_t p) {
  auto P = sylow(s, p);
  return P.is_trivial() || cyclic_generator(P).has_value();
}

bool sylow_cyclic(const PermGroup& m, const PermGroup& n, std::uint64_t p) {
  if (n.is_trivial()) return sylow_cyclic(m, p);
  auto P = sylow(m, p);
  auto K = intersection(P, n);
  const Order index = P.order() / K.order();
  if (index <= p) return true;
  if (P.order() > default_limits().max_enumerated_order)
    throw ResourceLimitError("Sylow subgroup too large to enumerate");
  bool found = false;
  P.chain().for_each_element([&](const Permutation& x) {
    if (!K.contains(x.pow(static_cast<std::int64_t>(index / p)))) found = true;
    return !found;
  });
  return found;
}

namespace {

bool psl2_branch(std::uint64_t q, std::uint64_t p) {
  return prime_power(q).first == p && q % 4 == 3;
}

bool psl2_label_branch(const SimpleFactorId& id, std::uint64_t p) {
  using K = SimpleFactorId::Kind;
  if (id.kind == K::Psl2) return psl2_branch(id.q, p);
  if (id.kind == K::Alternating && id.n == 5) return psl2_branch(4, p) || psl2_branch(5, p);
  if (id.kind == K::Alternating && id.n == 6) return psl2_branch(9, p);
  if (id.kind == K::Named && id.label == "PSL3(2)") return psl2_branch(7, p);
  return false;
}

}  // namespace

bool factor_is_cyclic_sylow_or_psl2(const SimpleFactorId& id, const PermGroup& s, std::uint64_t p) {
  return psl2_label_branch(id, p) || sylow_cyclic(s, p);
}

bool factor_is_cyclic_sylow_or_psl2(const CompositionFactor& f, std::uint64_t p) {
  return psl2_label_branch(f.id, p) || sylow_cyclic(f.upper, f.lower, p);
}

VerificationReport check_simple_factor_classification(const PermGroup& g, std::uint64_t p) {
  auto r = make_report("t11", g, p);
  ReportTimer timer(r);
  if (p % 2 == 0 || !is_prime(p)) throw DomainError("t11 needs an odd prime");
  auto d = local_data(g, p);
  r.hypothesis_holds = d.automizer_order % 2 == 1;
  r.set("automizer_order", static_cast<std::int64_t>(d.automizer_order));
  r.set("nc_order", static_cast<std::int64_t>(d.nc_order));
  auto series = composition_series(g);
  std::string factors, failing;
  for (const auto& f : series) {
    factors += (factors.empty() ? "" : " ") + f.id.to_string();
    if (f.id.order % p == 0 && !factor_is_cyclic_sylow_or_psl2(f, p))
      failing += (failing.empty() ? "" : " ") + f.id.to_string();
  }
  r.set("factors", factors);
  r.set("failing_factors", failing);
  // Contrapositive: a failing factor forces an even automizer.
  r.set("contrapositive_consistent", failing.empty() || !r.hypothesis_holds);
  if (!r.hypothesis_holds) {
    r.verdict = Verdict::Vacuous;
    return r;
  }
  r.verdict = failing.empty() ? Verdict::Pass : Verdict::Fail;
  if (!failing.empty()) r.witness.emplace_back("factor", failing);
  return r;
}

}  // namespace sylab
