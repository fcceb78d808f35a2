#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/blocks.hpp"
#include "sylab/error.hpp"
#include "sylab/groups.hpp"
#include "sylab/subgroups.hpp"
#include "sylab/sylow.hpp"

using namespace sylab;

namespace {

using Set = std::set<Permutation>;

Set closure(Set s) {
  std::vector<Permutation> q(s.begin(), s.end());
  std::vector<Permutation> gens = q;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (const auto& g : gens) {
      auto y = q[i] * g;
      if (s.insert(y).second) q.push_back(y);
    }
  return s;
}

bool is_p_power(std::size_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

/// All p-subgroups of G by exhaustive extension.
std::vector<Set> p_subgroups(const std::vector<Permutation>& all, std::uint64_t p) {
  std::set<Set> seen{Set{all[0] * all[0].inverse()}};
  std::vector<Set> out(seen.begin(), seen.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& x : all) {
      if (out[i].count(x)) continue;
      Set s = out[i];
      s.insert(x);
      s = closure(s);
      if (is_p_power(s.size(), p) && seen.insert(s).second) out.push_back(s);
    }
  return out;
}

Set conj(const Set& s, const Permutation& g) {
  Set t;
  for (const auto& x : s) t.insert(g.inverse() * x * g);
  return t;
}

/// Sorted orders of G-class representatives of radical p-subgroups.
std::vector<std::size_t> brute_radicals(const PermGroup& g, std::uint64_t p) {
  auto all = oracle::elements(g.degree(), g.generators());
  auto subs = p_subgroups(all, p);
  std::vector<Set> reps;
  std::vector<std::size_t> orders;
  for (const auto& q : subs) {
    std::vector<Permutation> n;
    for (const auto& x : all)
      if (conj(q, x) == q) n.push_back(x);
    Set nset(n.begin(), n.end());
    // O_p(N): largest normal p-subgroup of N among all p-subgroups.
    std::size_t core = 1;
    for (const auto& r : subs) {
      if (!std::includes(nset.begin(), nset.end(), r.begin(), r.end())) continue;
      bool normal = true;
      for (const auto& x : n)
        if (conj(r, x) != r) {
          normal = false;
          break;
        }
      if (normal) core = std::max(core, r.size());
    }
    if (core != q.size()) continue;
    bool fresh = true;
    for (const auto& r : reps)
      if (r.size() == q.size())
        for (const auto& x : all)
          if (conj(r, x) == q) {
            fresh = false;
            break;
          }
    if (fresh) {
      reps.push_back(q);
      orders.push_back(q.size());
    }
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<std::vector<Order>> block_degrees(const CharacterTable& t, const BlockPartition& part) {
  std::vector<std::vector<Order>> out;
  for (const auto& b : part.blocks) {
    std::vector<Order> d;
    for (auto chi : b.characters) d.push_back(t.degree(chi));
    std::sort(d.begin(), d.end());
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Blocks from rational central characters reduced mod p.
std::vector<std::vector<Order>> rational_blocks(const CharacterTable& t, std::uint64_t p) {
  std::map<std::vector<std::int64_t>, std::vector<Order>> groups;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    std::vector<std::int64_t> key;
    for (std::size_t i = 0; i < t.size(); ++i) {
      REQUIRE(t.value(chi, i).is_rational());
      auto w = static_cast<std::int64_t>(t.class_sizes()[i]) * t.value(chi, i).c[0];
      auto d = static_cast<std::int64_t>(t.degree(chi));
      REQUIRE(w % d == 0);
      key.push_back(((w / d) % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
    }
    groups[key].push_back(t.degree(chi));
  }
  std::vector<std::vector<Order>> out;
  for (auto& [k, v] : groups) {
    std::sort(v.begin(), v.end());
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("residue map sends roots of unity to roots of unity") {
  ResidueMap r(3);
  CHECK(r.degree(1320) == 160);
  CHECK(r.degree(9) == 1);
  // ζ_3 ≡ 1 modulo every prime above 3.
  CHECK(r.reduce({0, 1}, 3) == ResidueMap::Elem{1});
  // ζ_5 in the ring for order 15 is X^3.
  CHECK(r.reduce({0, 1, 0, 0}, 5, 15) == ResidueMap::Elem{0, 0, 0, 1});
  ResidueMap one(5);
  CHECK(one.degree(5) == 1);
  CHECK(one.reduce({0, 1, 0, 0}, 5) == ResidueMap::Elem{1});
  CHECK_THROWS_AS(ResidueMap(6), DomainError);
}

TEST_CASE("block distributions") {
  auto s4 = character_table(symmetric(4));
  auto b3 = block_distribution(s4, 3);
  CHECK(block_degrees(s4, b3) == std::vector<std::vector<Order>>{{1, 1, 2}, {3}, {3}});
  CHECK(b3.blocks[b3.principal].defect == 1);
  auto l27 = character_table(psl2(7));
  auto b7 = block_distribution(l27, 7);
  CHECK(block_degrees(l27, b7) == std::vector<std::vector<Order>>{{1, 3, 3, 6, 8}, {7}});
  // Blocks of an abelian group are the cosets of the p'-characters.
  auto c15 = character_table(cyclic(15));
  auto b15 = block_distribution(c15, 3);
  CHECK(b15.blocks.size() == 5);
  for (const auto& b : b15.blocks) CHECK(b.characters.size() == 3);
  auto c5 = character_table(cyclic(5));
  auto b2 = block_distribution(c5, 2);
  CHECK(b2.blocks.size() == 5);
  for (const auto& b : b2.blocks) CHECK(b.defect == 0);
}

TEST_CASE("blocks of rational groups agree with direct reduction") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"s4", 2}, {"s5", 2}, {"s5", 3}, {"s6", 3}, {"s6", 2}}) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto t = character_table(builtin_group(name));
    CHECK(block_degrees(t, block_distribution(t, p)) == rational_blocks(t, p));
  }
}

TEST_CASE("block invariants and defect groups") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{
           {"s5", 2}, {"psl2_11", 11}, {"psl2_11", 5}, {"a7", 3}, {"m11", 3}, {"psl2_9", 2}, {"d7", 7}}) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto g = builtin_group(name);
    auto t = character_table(g);
    auto part = block_distribution(t, p);
    Order sum = 0;
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
      const auto& blk = part.blocks[b];
      for (auto chi : blk.characters) sum += t.degree(chi) * t.degree(chi);
      CHECK((blk.characters.size() == 1) == (blk.defect == 0));
      auto d = defect_group(g, part, b);
      Order want = 1;
      for (unsigned i = 0; i < blk.defect; ++i) want *= p;
      CHECK(d.order() == want);
    }
    CHECK(sum == g.order());
    CHECK(part.block_of[0] == part.principal);
    CHECK(defect_group(g, part, part.principal).order() == p_part_of(g.order(), p));
  }
}

TEST_CASE("Brauer correspondents") {
  auto g = psl2(7);
  auto t = character_table(g);
  ResidueMap rm(7);
  auto part = block_distribution(t, rm);
  auto d = defect_group(g, part, part.principal);
  auto h = normalizer(g, d);
  CHECK(h.order() == 21);
  auto th = character_table(h);
  auto ph = block_distribution(th, rm);
  CHECK(ph.blocks.size() == 1);
  CHECK(brauer_correspondent(g, part, part.principal, h, ph) == ph.principal);
}

TEST_CASE("Alperin-McKay counts") {
  auto r = amk_check(psl2(7), 7);
  CHECK(r.verdict == Verdict::Pass);
  auto lhs = std::get<std::vector<std::int64_t>>(*r.get("height_zero_G"));
  auto rhs = std::get<std::vector<std::int64_t>>(*r.get("height_zero_N"));
  CHECK(lhs == rhs);
  std::sort(lhs.begin(), lhs.end());
  CHECK(lhs == std::vector<std::int64_t>{1, 5});
  auto r11 = amk_check(psl2(11), 11);
  CHECK(r11.verdict == Verdict::Pass);
  auto l11 = std::get<std::vector<std::int64_t>>(*r11.get("height_zero_G"));
  CHECK(std::count(l11.begin(), l11.end(), 7) == 1);
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"s5", 3}, {"a7", 5}, {"m11", 3}, {"c15", 7}, {"s4", 2}}) {
    CAPTURE(std::string(name));
    CHECK(amk_check(builtin_group(name), p).verdict != Verdict::Fail);
  }
}

TEST_CASE("p-regular classes") {
  CHECK(p_regular_class_count(psl2(7), 7) == 4);
  CHECK(p_regular_class_count(symmetric(4), 2) == 2);
  CHECK(p_regular_class_count(symmetric(4), 5) == 5);
}

TEST_CASE("radical subgroups match exhaustive search") {
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{
           {"s4", 2}, {"s4", 3}, {"psl2_7", 7}, {"psl2_7", 2}, {"a5", 2}, {"s3xc3", 3}, {"d6", 2}, {"a4xc3", 2}}) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto g = builtin_group(name);
    auto rad = p_radical_subgroups(g, p);
    std::vector<std::size_t> orders;
    for (const auto& q : rad) {
      orders.push_back(q.order());
      CHECK(p_core(normalizer(g, q), p).order() == q.order());
    }
    std::sort(orders.begin(), orders.end());
    CHECK(orders == brute_radicals(g, p));
  }
  CHECK(p_radical_subgroups(psl2(7), 7).size() == 2);
  CHECK(p_radical_subgroups(cyclic(5), 2).size() == 1);
}

TEST_CASE("weights equal p-regular classes") {
  auto w = weight_count(psl2(7), 7);
  CHECK(w.total == 4);
  REQUIRE(w.radicals.size() == 2);
  CHECK(w.radicals[0].weights == 1);
  CHECK(w.radicals[1].weights == 3);
  CHECK(weight_count(symmetric(4), 3).total == 4);
  CHECK(weight_count(PermGroup::trivial(1), 2).total == 1);
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{
           {"s5", 2}, {"s5", 3}, {"a6", 2}, {"a6", 3}, {"psl2_11", 2}, {"m11", 3}, {"m11", 2}, {"a7", 3}, {"a9", 3}}) {
    CAPTURE(std::string(name));
    CAPTURE(p);
    auto r = awc_check(builtin_group(name), p);
    CHECK(r.get_int("weights") == r.get_int("p_regular_classes"));
    auto per = std::get<std::vector<std::int64_t>>(*r.get("weights_per_block"));
    std::int64_t sum = 0;
    for (auto x : per) sum += x;
    CHECK(sum == r.get_int("weights"));
  }
}
