// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "harness.hpp"
#include "oracle.hpp"
#include "sylab/blocks.hpp"
#include "sylab/chartab.hpp"
#include "sylab/groups.hpp"
#include "sylab/structure.hpp"
#include "sylab/subgroups.hpp"
#include "sylab/sylow.hpp"

using namespace sylab;
using harness::ScanResult;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string pair_name(const VerificationReport& r) { return r.group_name + " p=" + std::to_string(r.prime); }

const VerificationReport* find(const ScanResult& s, const std::string& claim, const std::string& group,
                               std::uint64_t p) {
  for (const auto& r : s.reports)
    if (r.claim == claim && r.group_name == group && r.prime == p) return &r;
  return nullptr;
}

bool cyclic_group(const PermGroup& p) {
  for (const auto& c : p.classes().classes())
    if (c.element_order == p.order()) return true;
  return false;
}

std::vector<std::uint64_t> odd_prime_divisors(Order n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 3; q <= n; q += 2) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  return out;
}

std::vector<Permutation> sorted_elements(const PermGroup& h) {
  return oracle::elements(h.degree(), h.generators());
}

Outcome criterion_1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto g = builtin_group("m24");
  auto d = local_data(g, 7);
  const double secs = seconds_since(t0);
  o.require(d.automizer_order % 2 == 1, "automizer is even");
  o.require(d.N.order() % 2 == 0, "normalizer has odd order");
  o.require(secs <= 300, "slower than 5 minutes");
  o.detail << (o.ok ? "" : "; ") << "|N/PC| = " << d.automizer_order << ", |N_G(P)| = " << d.N.order()
           << ", |N/C| = " << d.nc_order << " (odd; the even parity belongs to |N_G(P)|), " << secs << " s";
  return o;
}

Outcome criterion_2(const ScanResult& t11, double secs) {
  Outcome o;
  std::size_t contra = 0, errors = 0;
  for (const auto& r : t11.reports) {
    if (r.verdict == Verdict::Fail) o.require(false, "FAIL at " + pair_name(r));
    if (r.verdict == Verdict::Error) ++errors;
    if (const auto* q = r.get("contrapositive_consistent"); q && !std::get<bool>(*q)) {
      ++contra;
      o.require(false, "contrapositive broken at " + pair_name(r));
    }
    // A failing factor must come with an even automizer.
    if (const auto* f = r.get("failing_factors"))
      if (!std::get<std::string>(*f).empty() && r.get_int("automizer_order") % 2 == 1)
        o.require(false, "failing factor with odd automizer at " + pair_name(r));
  }
  o.require(errors == 0, std::to_string(errors) + " errors");
  o.require(secs <= 1800, "slower than 30 minutes");
  o.detail << (o.ok ? "" : "; ") << t11.reports.size() << " pairs, " << t11.summary.pass << " pass, "
           << t11.summary.vacuous << " vacuous, 0 contrapositive violations, " << secs << " s";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const std::set<std::uint64_t> odd{7, 11, 19, 23, 27};
  for (std::uint64_t q : {5, 7, 11, 13, 17, 19, 23, 25, 27}) {
    const auto p = q % 3 == 0 ? 3 : q % 5 == 0 ? 5 : q;
    auto d = local_data(psl2(q), p);
    const bool is_odd = d.automizer_order % 2 == 1;
    o.require(is_odd == odd.count(q) > 0, "wrong parity for q = " + std::to_string(q));
    o.detail << (o.ok ? "" : "; ") << "q=" << q << ":" << d.automizer_order << " ";
  }
  return o;
}

Outcome claim_scan(const ScanResult& s, const std::string& claim, bool require_pass_under_hypothesis,
                   std::size_t& checked) {
  Outcome o;
  std::size_t errors = 0, pass = 0;
  for (const auto& r : s.reports) {
    if (r.claim != claim) continue;
    if (r.verdict == Verdict::Fail) o.require(false, "FAIL at " + pair_name(r));
    if (r.verdict == Verdict::Error) {
      ++errors;
      if (require_pass_under_hypothesis) o.require(false, "ERROR at " + pair_name(r) + ": " + r.message);
      continue;
    }
    ++checked;
    pass += r.verdict == Verdict::Pass;
    if (require_pass_under_hypothesis && r.hypothesis_holds && r.verdict != Verdict::Pass)
      o.require(false, "not PASS at " + pair_name(r));
  }
  o.detail << (o.ok ? "" : "; ") << checked << " pairs completed (" << pass << " under the hypothesis), "
           << errors << " incomplete";
  return o;
}

Outcome criterion_4(const ScanResult& s) {
  std::size_t checked = 0;
  auto o = claim_scan(s, "mckay", true, checked);
  for (auto [g, p, v] : std::vector<std::tuple<const char*, std::uint64_t, std::int64_t>>{{"psl2_7", 7, 5}, {"psl2_11", 11, 7}}) {
    const auto* r = find(s, "mckay", g, p);
    o.require(r && r->get_int("irr_pprime_G") == v && r->get_int("irr_pprime_N") == v,
              std::string("spot value for ") + g);
    if (r) o.detail << ", " << g << ": " << r->get_int("irr_pprime_G") << "=" << r->get_int("irr_pprime_N");
  }
  return o;
}

Outcome criterion_5(const ScanResult& s) {
  std::size_t checked = 0;
  auto o = claim_scan(s, "awc", false, checked);
  for (const auto& r : s.reports)
    if (r.claim == "awc" && r.verdict != Verdict::Error)
      o.require(r.get_int("weights") == r.get_int("p_regular_classes"), "weight total differs at " + pair_name(r));
  const auto* r = find(s, "awc", "psl2_7", 7);
  o.require(r && r->get_int("weights") == 4 && r->get_int("p_regular_classes") == 4, "spot value for psl2_7");
  if (r) o.detail << ", psl2_7: " << r->get_int("weights") << "=" << r->get_int("p_regular_classes");
  return o;
}

Outcome criterion_6(const ScanResult& s) {
  std::size_t checked = 0;
  auto o = claim_scan(s, "amk", true, checked);
  for (auto [g, p] : std::vector<std::pair<const char*, std::uint64_t>>{{"psl2_7", 7}, {"psl2_11", 11}}) {
    const auto* r = find(s, "amk", g, p);
    o.require(r && r->verdict == Verdict::Pass, std::string("amk not PASS for ") + g);
  }
  return o;
}

Outcome criterion_7(const ScanResult& s) {
  std::size_t checked = 0;
  return claim_scan(s, "lemma23", true, checked);
}

Outcome criterion_8() {
  Outcome o;
  std::size_t odd_cases = 0;
  for (std::size_t n = 5; n <= 9; ++n) {
    auto g = alternating(n);
    for (auto p : odd_prime_divisors(g.order())) {
      auto d = local_data(g, p);
      const bool odd = d.automizer_order % 2 == 1;
      const bool cyclic = cyclic_group(d.P);
      const std::string at = "A" + std::to_string(n) + " p=" + std::to_string(p);
      if (odd) {
        ++odd_cases;
        o.require(cyclic, "odd automizer with noncyclic Sylow at " + at);
        o.require(n == p || n == p + 1, "odd automizer with n not in {p, p+1} at " + at);
      }
    }
  }
  o.require(!odd_automizer(alternating(9), 3), "A9 p=3 has odd automizer");
  o.detail << (o.ok ? "" : "; ") << odd_cases << " odd-automizer cases, all with cyclic Sylow and n in {p, p+1}";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  for (const char* name : {"m11", "m12"}) {
    auto orbits = sylow_abelianization_orbits(builtin_group(name), 3);
    const bool even = std::all_of(orbits.orbit_lengths.begin(), orbits.orbit_lengths.end(),
                                  [](std::uint64_t l) { return l % 2 == 0; });
    o.require(!orbits.orbit_lengths.empty() && even, std::string("odd orbit length for ") + name);
    o.detail << (o.ok ? "" : "; ") << name << " orbit lengths";
    for (auto l : orbits.orbit_lengths) o.detail << ' ' << l;
    o.detail << ". ";
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  std::size_t groups = 0, comparisons = 0;
  for (const char* name : {"s4", "a4xc3", "s3xc3", "d7", "c15", "a5", "s5", "psl2_7", "psl2_8", "psl2_11", "s6",
                           "psl2_13", "psl2_17", "a7"}) {
    auto g = builtin_group(name);
    if (g.order() > 5000) continue;
    ++groups;
    const std::string at = std::string(" for ") + name;
    auto all = sorted_elements(g);
    o.require(all.size() == g.order(), "order" + at);
    const auto& cd = g.classes();
    std::vector<std::uint64_t> sizes;
    for (const auto& c : cd.classes()) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    o.require(sizes == oracle::class_sizes(all), "class sizes" + at);
    for (const auto& c : cd.classes()) {
      auto want = oracle::centralizer(all, c.representative);
      o.require(sorted_elements(centralizer(g, c.representative)) == want, "centralizer" + at);
      ++comparisons;
    }
    for (std::size_t i = 0; i < cd.count(); ++i)
      for (std::size_t j = 0; j < cd.count(); ++j) {
        const auto& x = cd[i].representative;
        // A conjugate of rep_j, so the search has a nontrivial target.
        const auto y = cd[j].representative.conjugate(all[(7 * i + 3 * j) % all.size()]);
        const bool brute = oracle::conjugate(all, x, y);
        auto c = conjugator(g, x, y);
        o.require(brute == c.has_value() && (!c || x.conjugate(*c) == y), "conjugator" + at);
        ++comparisons;
      }
    for (auto p : std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17}) {
      if (g.order() % p) continue;
      auto sp = sylow(g, p);
      auto want = oracle::normalizer(all, sorted_elements(sp));
      o.require(sorted_elements(normalizer(g, sp)) == want, "normalizer" + at);
      ++comparisons;
    }
    auto t = character_table(g);
    Order sum = 0;
    for (auto d : t.degrees()) sum += d * d;
    o.require(t.verify_orthogonality() && sum == g.order(), "character table" + at);
  }
  o.detail << (o.ok ? "" : "; ") << groups << " groups, " << comparisons
           << " centralizer/conjugator/normalizer comparisons, tables orthogonal with sum d^2 = |G|";
  return o;
}

Outcome criterion_11() {
  Outcome o;
  auto P = [](std::size_t n, const char* c) { return Permutation::from_cycles(n, c); };
  auto a4 = alternating(4);
  auto a4c3 = direct_product(a4, cyclic(3));
  auto s3c3 = direct_product(symmetric(3), cyclic(3));
  auto l7c3 = direct_product(psl2(7), cyclic(3));
  auto a5c7 = direct_product(alternating(5), cyclic(7));
  auto c15 = cyclic(15);
  auto c9 = cyclic(9);
  struct Triple {
    std::string name;
    PermGroup g, h;
    std::uint64_t p;
  };
  std::vector<Triple> triples{
      {"A4 > V4", a4, make_subgroup(4, {P(4, "(1,2)(3,4)"), P(4, "(1,3)(2,4)")}), 3},
      {"A4xC3 > A4", a4c3, direct_product(a4, PermGroup::trivial(3)), 3},
      {"A4xC3 > V4", a4c3, make_subgroup(7, {P(7, "(1,2)(3,4)"), P(7, "(1,3)(2,4)")}), 3},
      {"S3xC3 > S3", s3c3, direct_product(symmetric(3), PermGroup::trivial(3)), 3},
      {"PSL2(7)xC3 > PSL2(7)", l7c3, direct_product(psl2(7), PermGroup::trivial(3)), 3},
      {"A5xC7 > A5", a5c7, direct_product(alternating(5), PermGroup::trivial(7)), 7},
      {"C15 > C5", c15, make_subgroup(15, {c15.generators()[0].pow(3)}), 3},
      {"C9 > C3", c9, make_subgroup(9, {c9.generators()[0].pow(3)}), 3},
      {"PSL2(7) = H", psl2(7), psl2(7), 7},
      {"D7 = H", dihedral(7), dihedral(7), 7},
      {"M11 = H", builtin_group("m11"), builtin_group("m11"), 3},
      {"A4xC3 > V4xC3", a4c3, make_subgroup(7, {P(7, "(1,2)(3,4)"), P(7, "(1,3)(2,4)"), P(7, "(5,6,7)")}), 3},
  };
  std::size_t passed = 0;
  for (const auto& t : triples) {
    auto r = check_normal_subgroup_automizer_map(t.g, t.h, t.p);
    if (r.verdict == Verdict::Pass) ++passed;
    else o.require(false, t.name + ": " + to_string(r.verdict) + " " + r.message);
  }
  o.require(passed >= 10, "fewer than 10 triples");
  o.detail << (o.ok ? "" : "; ") << passed << " of " << triples.size() << " triples PASS";
  return o;
}

}  // namespace

int main() {
  const auto cache_dir = std::filesystem::path(SYLAB_ACCEPTANCE_CACHE);
  harness::ArtifactCache cache(cache_dir);
  harness::Options opts;
  opts.cache = &cache;
  const auto catalog = harness::builtin_catalog();

  bool all_ok = true;
  auto emit = [&](int n, const std::string& title, const Outcome& o) {
    all_ok = all_ok && o.ok;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  };

  emit(1, "M24 p=7 odd automizer, even normalizer", criterion_1());

  auto t0 = std::chrono::steady_clock::now();
  auto t11 = harness::scan_catalog(catalog, {}, {"t11"}, opts);
  emit(2, "simple factor classification scan", criterion_2(t11, seconds_since(t0)));

  emit(3, "PSL2 boundary", criterion_3());

  const std::vector<std::uint64_t> odd_primes{3, 5, 7, 11, 13, 17, 19, 23};
  auto chars = harness::scan_catalog(catalog, odd_primes, {"mckay", "awc", "amk"}, opts);
  emit(4, "McKay counts", criterion_4(chars));
  emit(5, "weight totals", criterion_5(chars));
  emit(6, "Alperin-McKay counts", criterion_6(chars));

  auto real = harness::scan_catalog(catalog, {}, {"lemma23"}, opts);
  emit(7, "central elements not real", criterion_7(real));

  emit(8, "alternating groups", criterion_8());
  emit(9, "abelianization orbits of M11 and M12", criterion_9());
  emit(10, "oracle equivalence", criterion_10());
  emit(11, "automizer map from a normal subgroup", criterion_11());
  return all_ok ? 0 : 1;
}
