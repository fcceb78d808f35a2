#include <fstream>

#include "doctest.h"
#include "oracle.hpp"
#include "sylab/error.hpp"
#include "sylab/field.hpp"
#include "sylab/groups.hpp"
#include "sylab/limits.hpp"
#include "sylab/subgroups.hpp"

using namespace sylab;

TEST_CASE("prime field arithmetic") {
  GaloisField f(7, 1);
  CHECK(f.add(3, 5) == 1);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.primitive() == 5);  // modulus x + 2
  CHECK_THROWS_AS(GaloisField(9, 1), DomainError);
  CHECK_THROWS_AS(f.inv(0), DomainError);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 4}}) {
    GaloisField k(p, e);
    const auto q = k.size();
    CAPTURE(q);
    for (FieldElem a = 0; a < q; ++a) {
      if (a) CHECK(k.pow(a, static_cast<std::int64_t>(q - 1)) == 1);
      if (a) CHECK(k.mul(a, k.inv(a)) == 1);
      CHECK(k.add(a, k.neg(a)) == 0);
      for (FieldElem b = 0; b < q; ++b) {
        CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
        CHECK(k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)));
        for (FieldElem c = 0; c < q; c += 3)
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
      }
    }
    for (FieldElem a = 0; a < p; ++a) CHECK(k.frobenius(a) == a);
    // x generates the multiplicative group
    std::set<FieldElem> powers;
    for (std::uint64_t i = 0; i < q - 1; ++i) powers.insert(k.pow(k.primitive(), i));
    CHECK(powers.size() == q - 1);
  }
}

TEST_CASE("GF(9) modulus is the least primitive one") {
  GaloisField k(3, 2);
  // x^2 + x + 2 is the least monic irreducible with primitive root x
  // under the ordering by c_0 + 3 c_1: candidates 1 (x^2+1, not primitive)...
  CHECK(k.modulus() == std::vector<std::uint64_t>{2, 1, 1});
  for (FieldElem a = 1; a < 9; ++a) CHECK(k.pow(a, 8) == 1);
}

TEST_CASE("psl2 orders and transitivity") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    auto g = psl2(q);
    CAPTURE(q);
    Order expect = q * (q * q - 1) / (q % 2 ? 2 : 1);
    CHECK(g.order() == expect);
    CHECK(g.degree() == q + 1);
    // 2-transitive: point stabilizer transitive on the remaining q points
    auto ot = orbit_transversal(g, 0);
    CHECK(ot.orbit.size() == q + 1);
    CHECK(g.chain().level(0).orbit.size() == q + 1);
    CHECK(g.chain().level(1).orbit.size() == q);
  }
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(11).degree() == 12);
  CHECK_THROWS_AS(psl2(3), DomainError);
  CHECK_THROWS_AS(psl2(6), DomainError);
}

TEST_CASE("psl2(q) order cross-checked by enumeration") {
  auto g = psl2(7);
  CHECK(oracle::elements(8, g.generators()).size() == 168);
}

TEST_CASE("standard groups") {
  CHECK(alternating(7).order() == 2520);
  CHECK(symmetric(6).order() == 720);
  CHECK(cyclic(15).order() == 15);
  auto d = dihedral(5);
  CHECK(d.order() == 10);
  CHECK(d.degree() == 5);
  PermGroup s3(3, {Permutation::from_cycles(3, "(1,2)"), Permutation::from_cycles(3, "(1,2,3)")});
  auto p = direct_product(cyclic(3), s3);
  CHECK(p.order() == 18);
  CHECK(p.degree() == 6);
  for (std::size_t n = 3; n <= 8; ++n) {
    CHECK(alternating(n).order() == oracle::elements(n, alternating(n).generators()).size());
    CHECK(dihedral(n).order() == oracle::elements(n, dihedral(n).generators()).size());
  }
  CHECK_THROWS_AS(dihedral(2), DomainError);
  Limits& lim = default_limits();
  auto saved = lim.max_degree;
  lim.max_degree = 10;
  CHECK_THROWS_AS(cyclic(11), ResourceLimitError);
  lim.max_degree = saved;
}

TEST_CASE("group file parsing") {
  auto gf = parse_group_text("name: S3\ndegree: 3\n(1,2)\n(1,2,3)\n");
  CHECK(gf.name == "S3");
  CHECK(gf.to_group().order() == 6);
  auto empty = parse_group_text("# nothing\ndegree: 4\n\n");
  CHECK(empty.to_group().order() == 1);
  CHECK(parse_group_text("degree: 2\n()\n").to_group().order() == 1);
  try {
    parse_group_text("name: x\ndegree: 3\n(1,2)\n(1,2,2)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("duplicate point 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_group_text("degree: 3\n(1,4)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree: 3\n(1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_group_text("(1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree: x\n"), ParseError);
}

TEST_CASE("render and parse round trip") {
  for (const auto& name : {"a5", "psl2_9", "d6", "s3xc3", "m11"}) {
    auto g = builtin_group(name);
    auto back = parse_group_text(render_group_file(g, "round trip\nsecond line"));
    CHECK(back.provenance == "round trip\nsecond line");
    auto h = back.to_group();
    CHECK(h.generators() == g.generators());
    CHECK(h.degree() == g.degree());
  }
}

TEST_CASE("shipped sporadic groups") {
  CHECK(builtin_group("m11").order() == 7920);
  CHECK(builtin_group("m12").order() == 95040);
  auto m24 = builtin_group("m24");
  CHECK(m24.order() == 244823040);
  // a second chain with a different base gives the same order
  ChainOptions opt;
  opt.base_prefix = {23, 22, 21, 20};
  opt.seed = 99;
  CHECK(StabilizerChain::build(24, m24.generators(), opt).order() == 244823040);
  CHECK(builtin_group("psl3_4").order() == 20160);
  CHECK_FALSE(parse_group_file(data_directory() / "m24.grp").provenance.empty());
}

TEST_CASE("built-in catalog resolves") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    CHECK(builtin_group(name).order() > 1);
  }
  CHECK(builtin_group("a5xc7").order() == 420);
  CHECK(builtin_group("psl2_7xpsl2_7").order() == 168 * 168);
  CHECK_THROWS_AS(builtin_group("q8"), DomainError);
  CHECK_THROWS_AS(builtin_group("sx"), DomainError);
}
