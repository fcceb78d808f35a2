#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/chartab.hpp"
#include "sylab/error.hpp"
#include "sylab/groups.hpp"

using namespace sylab;

namespace {

std::vector<Order> sorted(std::vector<Order> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Counts pairs by brute force over the whole group.
std::uint64_t brute_constant(const std::vector<Permutation>& all, const ClassData& cd, std::size_t i, std::size_t j,
                             std::size_t k) {
  const auto& z = cd[k].representative;
  std::uint64_t n = 0;
  for (const auto& x : all) {
    if (!oracle::conjugate(all, x, cd[i].representative)) continue;
    for (const auto& y : all)
      if (x * y == z && oracle::conjugate(all, y, cd[j].representative)) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("class constants match brute force on S3 and S4") {
  for (auto g : {symmetric(3), symmetric(4)}) {
    auto a = class_constants(g);
    const auto& cd = g.classes();
    auto all = oracle::elements(g.degree(), g.generators());
    for (std::size_t i = 0; i < a.count(); ++i)
      for (std::size_t j = 0; j < a.count(); ++j)
        for (std::size_t k = 0; k < a.count(); ++k) CHECK(a(i, j, k) == brute_constant(all, cd, i, j, k));
  }
}

TEST_CASE("class constants weighted by class size give |C_i||C_j|") {
  auto g = psl2(7);
  auto a = class_constants(g);
  const auto& cd = g.classes();
  for (std::size_t i = 0; i < a.count(); ++i)
    for (std::size_t j = 0; j < a.count(); ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < a.count(); ++k) s += a(i, j, k) * cd[k].size;
      CHECK(s == cd[i].size * cd[j].size);
    }
}

TEST_CASE("S3 transpositions square to the identity three ways") {
  auto g = symmetric(3);
  const auto& cd = g.classes();
  std::size_t t = 0;
  for (std::size_t i = 0; i < cd.count(); ++i)
    if (cd[i].element_order == 2) t = i;
  CHECK(class_constants(g)(t, t, 0) == 3);
}

TEST_CASE("character degrees of small groups") {
  CHECK(sorted(character_table(symmetric(4)).degrees()) == std::vector<Order>{1, 1, 2, 3, 3});
  CHECK(sorted(character_table(psl2(7)).degrees()) == std::vector<Order>{1, 3, 3, 6, 7, 8});
  CHECK(sorted(character_table(alternating(5)).degrees()) == std::vector<Order>{1, 3, 3, 4, 5});
  auto c5 = character_table(cyclic(5));
  CHECK(c5.degrees() == std::vector<Order>(5, 1));
  CHECK(c5.exponent() == 5);
}

TEST_CASE("tables pass exact orthogonality and start with the trivial row") {
  for (const char* name : {"s5", "d7", "a4xc3", "psl2_11", "c15", "psl2_9", "m11"}) {
    CAPTURE(name);
    auto g = builtin_group(name);
    auto t = character_table(g);
    CHECK(t.size() == g.classes().count());
    CHECK(t.verify_orthogonality());
    for (const auto& v : t.row(0)) CHECK((v.is_rational() && v.c[0] == 1));
    CHECK(std::is_sorted(t.degrees().begin(), t.degrees().end()));
  }
}

TEST_CASE("Galois action matches power maps") {
  auto g = psl2(7);
  auto t = character_table(g);
  const auto& cd = g.classes();
  const auto e = t.exponent();
  for (std::uint64_t s = 1; s < e; ++s) {
    if (std::gcd(s, e) != 1) continue;
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t i = 0; i < t.size(); ++i) {
        const auto o = t.class_order(i);
        std::vector<std::int64_t> by_exp(o, 0);
        const auto& v = t.value(x, i).c;
        for (std::size_t j = 0; j < v.size(); ++j) by_exp[j * s % o] += v[j];
        CHECK(t.field(i).reduce(by_exp) == t.value(x, cd.power_class(i, s)).c);
      }
  }
}

TEST_CASE("a corrupted table fails orthogonality") {
  auto g = symmetric(4);
  auto text = character_table(g).serialize();
  auto t = CharacterTable::deserialize(text, g);
  CHECK(t.verify_orthogonality());
  CHECK(t.serialize() == text);
  auto pos = text.rfind("0:1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "0:2");
  CHECK_FALSE(CharacterTable::deserialize(text, g).verify_orthogonality());
  CHECK_THROWS_AS(CharacterTable::deserialize(text, symmetric(5)), ParseError);
}

TEST_CASE("p'-degree and defect-zero counts") {
  auto l27 = character_table(psl2(7));
  CHECK(irr_pprime_count(l27, 7) == 5);
  CHECK(defect_zero_count(l27, 7) == 1);
  auto s4 = character_table(symmetric(4));
  CHECK(irr_pprime_count(s4, 3) == 3);
  CHECK(defect_zero_count(s4, 3) == 2);
}

TEST_CASE("McKay counts agree") {
  auto r = mckay_check(psl2(7), 7);
  CHECK(r.get_int("irr_pprime_G") == 5);
  CHECK(r.get_int("irr_pprime_N") == 5);
  CHECK(r.verdict == Verdict::Pass);
  auto r11 = mckay_check(psl2(11), 11);
  CHECK(r11.get_int("irr_pprime_G") == 7);
  CHECK(r11.get_int("irr_pprime_N") == 7);
  for (auto [name, p] : std::vector<std::pair<const char*, int>>{{"s5", 3}, {"s5", 5}, {"a7", 3}, {"m11", 11}}) {
    CAPTURE(name);
    auto rr = mckay_check(builtin_group(name), p);
    CHECK(rr.get_int("irr_pprime_G") == rr.get_int("irr_pprime_N"));
    CHECK(rr.verdict != Verdict::Fail);
  }
}

TEST_CASE("abelianization orbits") {
  auto m11 = sylow_abelianization_orbits(builtin_group("m11"), 3);
  CHECK(m11.elementary_divisors == std::vector<std::uint64_t>{3, 3});
  std::uint64_t total = 0;
  for (auto len : m11.orbit_lengths) {
    CHECK(len % 2 == 0);
    total += len;
  }
  CHECK(total == 8);
  auto r = check_abelianization_orbits_even(builtin_group("m12"), 3);
  CHECK(r.hypothesis_holds);
  CHECK(r.verdict == Verdict::Pass);
  auto c = check_abelianization_orbits_even(psl2(7), 7);
  CHECK_FALSE(c.hypothesis_holds);
  CHECK(c.verdict == Verdict::Vacuous);
  auto a9 = sylow_abelianization_orbits(alternating(9), 3);
  CHECK(std::any_of(a9.orbit_lengths.begin(), a9.orbit_lengths.end(), [](auto l) { return l % 2 == 0; }));
}

TEST_CASE("tables refuse large groups") {
  Limits small = default_limits();
  small.max_table_order = 100;
  CHECK_THROWS_AS(character_table(symmetric(5), small), ResourceLimitError);
  CHECK_THROWS_AS(mckay_check(symmetric(4), 2), DomainError);
}
