#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/error.hpp"
#include "sylab/groups.hpp"
#include "sylab/subgroups.hpp"
#include "sylab/sylow.hpp"

using namespace sylab;

namespace {

Permutation P(std::size_t n, const char* c) { return Permutation::from_cycles(n, c); }

/// Brute-force automizer order |N_G(S)| |Z(S)| / (|S| |C_G(S)|).
Order brute_automizer(const PermGroup& g, const PermGroup& s) {
  auto all = oracle::elements(g.degree(), g.generators());
  auto selems = oracle::elements(g.degree(), s.generators());
  auto n = oracle::normalizer(all, selems).size();
  std::size_t c = 0;
  for (const auto& x : all) {
    bool ok = true;
    for (const auto& y : s.generators())
      if (x * y != y * x) ok = false;
    c += ok;
  }
  auto z = oracle::center(selems).size();
  return n * z / (selems.size() * c);
}

}  // namespace

TEST_CASE("Sylow subgroup orders") {
  CHECK(sylow(symmetric(4), 2).order() == 8);
  CHECK(sylow(psl2(7), 7).order() == 7);
  CHECK(sylow(symmetric(4), 5).is_trivial());
  CHECK(sylow(alternating(9), 3).order() == 81);
  CHECK(sylow(alternating(9), 2).order() == 64);
  auto m24 = builtin_group("m24");
  CHECK(sylow(m24, 7).order() == 7);
  CHECK(sylow(m24, 3).order() == 27);
  CHECK(sylow(m24, 2).order() == 1024);
  CHECK_THROWS_AS(sylow(symmetric(4), 4), DomainError);
}

TEST_CASE("Sylow subgroups are p-groups of full p-part across the catalog") {
  for (const auto& name : builtin_names()) {
    if (name == "m24") continue;
    auto g = builtin_group(name);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      CAPTURE(name);
      CAPTURE(p);
      auto s = sylow(g, p);
      CHECK(s.order() == p_part_of(g.order(), p));
      CHECK(g.contains(s));
      for (const auto& x : s.generators()) CHECK(p_part_of(x.order(), p) == x.order());
    }
  }
}

TEST_CASE("Sylow subgroups computed independently are conjugate") {
  for (const char* name : {"s6", "psl2_11", "a7", "psl2_7xc3", "m11"}) {
    auto g = builtin_group(name);
    // Reordered generators give a different seed and hence an independent run.
    auto gens = g.generators();
    std::reverse(gens.begin(), gens.end());
    PermGroup g2(g.degree(), gens, g.order());
    for (std::uint64_t p : {2, 3, 5}) {
      auto a = sylow(g, p), b = sylow(g2, p);
      CAPTURE(name);
      CAPTURE(p);
      auto c = subgroup_conjugator(g, a, b);
      REQUIRE(c);
      for (const auto& x : a.generators()) CHECK(b.contains(x.conjugate(*c)));
    }
  }
}

TEST_CASE("local data") {
  auto s4 = local_data(symmetric(4), 3);
  CHECK(s4.N.order() == 6);
  CHECK(s4.C.order() == 3);
  CHECK(s4.automizer_order == 2);
  auto l7 = local_data(psl2(7), 7);
  CHECK(l7.N.order() == 21);
  CHECK(l7.C.order() == 7);
  CHECK(l7.automizer_order == 3);
  CHECK(l7.nc_order == 3);
  for (const char* name : {"s5", "a6", "psl2_9", "d6", "s3xc3", "a4xc3", "psl2_13"}) {
    auto g = builtin_group(name);
    for (std::uint64_t p : {2, 3, 5}) {
      CAPTURE(name);
      CAPTURE(p);
      auto d = local_data(g, p);
      CHECK(d.automizer_order == brute_automizer(g, d.P));
      CHECK(d.N.contains(d.P));
      CHECK(d.C.contains(d.ZP));
      CHECK(is_normal(d.N, d.C));
      if (p % 2) CHECK(d.automizer_order % 2 == d.nc_order % 2);
    }
  }
}

TEST_CASE("odd automizers") {
  CHECK(odd_automizer(psl2(11), 11));
  CHECK(local_data(psl2(11), 11).automizer_order == 5);
  CHECK_FALSE(odd_automizer(psl2(13), 13));
  CHECK(local_data(psl2(13), 13).automizer_order == 6);
  CHECK(odd_automizer(cyclic(15), 3));
  CHECK(odd_automizer(cyclic(15), 5));
  CHECK_THROWS_AS(odd_automizer(cyclic(6), 2), DomainError);
}

TEST_CASE("odd automizers of direct products are inherited from both factors") {
  std::vector<std::pair<const char*, const char*>> pairs{
      {"psl2_7", "c3"}, {"a5", "c7"}, {"s3", "c3"}, {"a4", "c3"}, {"psl2_7", "psl2_7"}, {"psl2_13", "c7"}};
  for (auto [a, b] : pairs) {
    auto ga = builtin_group(a), gb = builtin_group(b);
    auto prod = direct_product(ga, gb);
    for (std::uint64_t p : {3, 5, 7, 13}) {
      if (prod.order() % p) continue;
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(p);
      CHECK(odd_automizer(prod, p) == (odd_automizer(ga, p) && odd_automizer(gb, p)));
    }
  }
}

TEST_CASE("realness") {
  auto a5 = alternating(5);
  CHECK(is_real(a5, P(5, "(1,2)(3,4)")));
  CHECK(is_real(a5, P(5, "(1,2,3,4,5)")));
  auto l7 = psl2(7);
  auto s = sylow(l7, 7);
  CHECK_FALSE(is_real(l7, s.generators().front()));
  CHECK_THROWS_AS(is_real(a5, P(5, "(1,2)")), DomainError);
  auto all = oracle::elements(8, l7.generators());
  for (std::size_t i = 0; i < all.size(); i += 7)
    CHECK(is_real(l7, all[i]) == oracle::conjugate(all, all[i], all[i].inverse()));
}

TEST_CASE("central Sylow elements are non-real under the hypothesis") {
  CHECK(check_central_elements_not_real(psl2(7), 7).verdict == Verdict::Pass);
  CHECK(check_central_elements_not_real(psl2(11), 11).verdict == Verdict::Pass);
  auto v = check_central_elements_not_real(symmetric(4), 3);
  CHECK(v.verdict == Verdict::Vacuous);
  CHECK_FALSE(v.hypothesis_holds);
  CHECK(check_central_elements_not_real(builtin_group("psl2_7xc3"), 7).verdict == Verdict::Pass);
}

TEST_CASE("automizer map from a normal subgroup") {
  auto a4 = alternating(4);
  PermGroup v4(4, {P(4, "(1,2)(3,4)"), P(4, "(1,3)(2,4)")});
  auto r = check_normal_subgroup_automizer_map(a4, v4, 3);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.get_int("q_order") == 1);
  CHECK(r.get_int("quotient_order") == 1);
  CHECK(r.get_int("automizer_order") == 1);

  auto l7 = psl2(7);
  auto same = check_normal_subgroup_automizer_map(l7, l7, 7);
  CHECK(same.verdict == Verdict::Pass);
  CHECK(same.get_int("image_order") == 3);

  auto s3c3 = builtin_group("s3xc3");
  auto s3 = make_subgroup(6, {P(6, "(1,2)"), P(6, "(1,2,3)")});
  CHECK(check_normal_subgroup_automizer_map(s3c3, s3, 3).verdict == Verdict::Pass);
  auto c3 = make_subgroup(6, {P(6, "(4,5,6)")});
  auto bad = check_normal_subgroup_automizer_map(s3c3, c3, 3);
  CHECK(bad.verdict == Verdict::Error);
  CHECK(bad.error_kind == "precondition");
}
