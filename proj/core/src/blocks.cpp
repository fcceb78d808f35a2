#include "sylab/blocks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sylab/cyclotomic.hpp"
#include "sylab/error.hpp"
#include "sylab/quotient.hpp"
#include "sylab/subgroups.hpp"
#include "sylab/sylow.hpp"

namespace sylab {

namespace {

using u64 = std::uint64_t;

}  // namespace

ResidueMap::ResidueMap(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("residue map needs a prime");
}

std::size_t ResidueMap::degree(std::uint64_t o) const { return euler_phi(o / p_part_of(o, p_)); }

const std::vector<ResidueMap::Elem>& ResidueMap::powers(std::uint64_t n) const {
  std::lock_guard lock(mutex_);
  auto& out = powers_[n];
  if (!out.empty()) return out;
  // Φ_n is monic: X·v shifts up and folds the top coefficient back.
  std::vector<u64> m;
  for (auto c : cyclotomic_polynomial(n)) m.push_back(static_cast<u64>((c % static_cast<std::int64_t>(p_) + p_) % p_));
  const std::size_t d = m.size() - 1;
  Elem cur(d, 0);
  cur[0] = d ? 1 : 0;
  for (u64 j = 0; j < n; ++j) {
    out.push_back(cur);
    const u64 top = d ? cur[d - 1] : 0;
    for (std::size_t i = d; i-- > 1;) cur[i] = cur[i - 1];
    if (d) cur[0] = 0;
    for (std::size_t i = 0; i < d; ++i) cur[i] = (cur[i] + (p_ - top) * m[i]) % p_;
  }
  return out;
}

ResidueMap::Elem ResidueMap::reduce(const std::vector<std::int64_t>& c, std::uint64_t f, std::uint64_t o) const {
  if (f == 0 || o % f != 0) throw DomainError("value field is not contained in the class's field");
  const u64 n = o / p_part_of(o, p_);
  const u64 step = o / f;
  const auto& pw = powers(n);
  Elem acc(pw[0].size(), 0);
  const auto sp = static_cast<std::int64_t>(p_);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const u64 coef = static_cast<u64>((c[j] % sp + sp) % sp);
    const auto& x = pw[(j * step) % n];
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + coef * x[i]) % p_;
  }
  return acc;
}

void ResidueMap::add_to(Elem& acc, const Elem& x) const {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + x[i]) % p_;
}

bool ResidueMap::is_zero(const Elem& x) const {
  return std::all_of(x.begin(), x.end(), [](u64 v) { return v == 0; });
}

std::vector<std::int64_t> central_character(const CharacterTable& t, std::size_t chi, std::size_t cls) {
  const auto d = static_cast<std::int64_t>(t.degree(chi));
  const auto size = static_cast<std::int64_t>(t.class_sizes()[cls]);
  auto c = t.value(chi, cls).c;
  for (auto& x : c) {
    const __int128 v = static_cast<__int128>(x) * size;
    if (v % d != 0) throw InternalError("central character is not integral");
    x = static_cast<std::int64_t>(v / d);
  }
  return c;
}

BlockPartition block_distribution(const CharacterTable& t, std::uint64_t p) {
  return block_distribution(t, ResidueMap(p));
}

BlockPartition block_distribution(const CharacterTable& t, const ResidueMap& r) {
  BlockPartition part;
  part.p = r.characteristic();
  const std::size_t k = t.size();
  const unsigned full = nu_p(t.group_order(), part.p);
  std::map<std::vector<ResidueMap::Elem>, std::size_t> seen;
  part.block_of.resize(k);
  for (std::size_t chi = 0; chi < k; ++chi) {
    std::vector<ResidueMap::Elem> lambda;
    for (std::size_t i = 0; i < k; ++i) lambda.push_back(r.reduce(central_character(t, chi, i), t.class_order(i)));
    auto [it, fresh] = seen.try_emplace(lambda, part.blocks.size());
    if (fresh) {
      Block b;
      b.lambda = std::move(lambda);
      part.blocks.push_back(std::move(b));
    }
    auto& b = part.blocks[it->second];
    b.characters.push_back(chi);
    b.defect = std::max(b.defect, full - nu_p(t.degree(chi), part.p));
    part.block_of[chi] = it->second;
  }
  part.principal = part.block_of[0];
  return part;
}

PermGroup defect_group(const PermGroup& g, const BlockPartition& part, std::size_t b) {
  const auto& block = part.blocks.at(b);
  const u64 p = part.p;
  if (block.defect == 0) return PermGroup::trivial(g.degree());
  const auto& cd = g.classes();
  const Order want = [&] {
    Order x = 1;
    for (unsigned i = 0; i < block.defect; ++i) x *= p;
    return x;
  }();
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < cd.count(); ++i) {
      if (pass == 0 && cd[i].element_order % p == 0) continue;
      if (block.lambda[i].empty() || std::all_of(block.lambda[i].begin(), block.lambda[i].end(), [](u64 v) { return v == 0; }))
        continue;
      if (nu_p(g.order() / cd[i].size, p) != block.defect) continue;
      auto d = sylow(centralizer(g, cd[i].representative), p);
      if (d.order() != want) throw InternalError("defect group has the wrong order");
      return d;
    }
  throw InternalError("no defect class found");
}

std::size_t brauer_correspondent(const PermGroup& g, const BlockPartition& part, std::size_t b, const PermGroup& h,
                                 const BlockPartition& ph) {
  const auto& target = part.blocks.at(b);
  const auto& gc = g.classes();
  const auto& hc = h.classes();
  std::vector<std::size_t> fuse(hc.count());
  for (std::size_t i = 0; i < hc.count(); ++i) fuse[i] = gc.class_of(hc[i].representative);
  const u64 p = part.p;
  std::vector<std::size_t> matches;
  for (std::size_t beta = 0; beta < ph.blocks.size(); ++beta) {
    const auto& blk = ph.blocks[beta];
    if (blk.defect != target.defect) continue;
    std::vector<ResidueMap::Elem> induced(gc.count());
    for (std::size_t i = 0; i < gc.count(); ++i) induced[i].assign(target.lambda[i].size(), 0);
    for (std::size_t i = 0; i < hc.count(); ++i)
      for (std::size_t j = 0; j < induced[fuse[i]].size(); ++j)
        induced[fuse[i]][j] = (induced[fuse[i]][j] + blk.lambda[i][j]) % p;
    if (induced == target.lambda) matches.push_back(beta);
  }
  if (matches.size() != 1) throw InternalError("Brauer correspondent is not unique");
  return matches[0];
}

namespace {

std::size_t height_zero_count(const CharacterTable& t, const Block& b, u64 p) {
  const unsigned want = nu_p(t.group_order(), p) - b.defect;
  std::size_t n = 0;
  for (auto chi : b.characters) n += nu_p(t.degree(chi), p) == want;
  return n;
}

std::vector<std::int64_t> ints(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

VerificationReport amk_check(const PermGroup& g, std::uint64_t p, const Limits& limits) {
  if (!is_prime(p)) throw DomainError("amk needs a prime");
  auto r = make_report("amk", g, p);
  ReportTimer timer(r);
  auto d = local_data(g, p);
  r.hypothesis_holds = p % 2 == 1 && d.automizer_order % 2 == 1;
  r.set("automizer_order", static_cast<std::int64_t>(d.automizer_order));
  auto tg = character_table(g, limits);
  ResidueMap rm(p);
  auto part = block_distribution(tg, rm);
  std::map<std::string, std::pair<PermGroup, std::pair<CharacterTable, BlockPartition>>> local;
  std::vector<std::size_t> lhs, rhs, defects;
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const auto& blk = part.blocks[b];
    defects.push_back(blk.defect);
    lhs.push_back(height_zero_count(tg, blk, p));
    if (blk.defect == 0) {
      rhs.push_back(1);
      continue;
    }
    auto D = defect_group(g, part, b);
    auto key = D.hash_hex();
    auto it = local.find(key);
    if (it == local.end()) {
      auto h = normalizer(g, D);
      auto th = character_table(h, limits);
      auto ph = block_distribution(th, rm);
      it = local.emplace(key, std::make_pair(h, std::make_pair(std::move(th), std::move(ph)))).first;
    }
    const auto& [h, tp] = it->second;
    auto beta = brauer_correspondent(g, part, b, h, tp.second);
    rhs.push_back(height_zero_count(tp.first, tp.second.blocks[beta], p));
  }
  r.set("block_count", static_cast<std::int64_t>(part.blocks.size()));
  r.set("defects", ints(defects));
  r.set("height_zero_G", ints(lhs));
  r.set("height_zero_N", ints(rhs));
  if (lhs != rhs) {
    r.verdict = Verdict::Fail;
    for (std::size_t b = 0; b < lhs.size(); ++b)
      if (lhs[b] != rhs[b]) {
        r.witness.emplace_back("block", static_cast<std::int64_t>(b));
        r.witness.emplace_back("counts", std::vector<std::int64_t>{static_cast<std::int64_t>(lhs[b]),
                                                                   static_cast<std::int64_t>(rhs[b])});
        break;
      }
  } else {
    r.verdict = r.hypothesis_holds ? Verdict::Pass : Verdict::Vacuous;
  }
  return r;
}

std::size_t p_regular_class_count(const PermGroup& g, std::uint64_t p) {
  std::size_t n = 0;
  for (const auto& c : g.classes().classes()) n += c.element_order % p != 0;
  return n;
}

PermGroup p_core(const PermGroup& g, std::uint64_t p) {
  auto c = sylow(g, p);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& x : g.generators()) {
      if (c.is_trivial()) return c;
      auto next = intersection(c, conjugate_subgroup(c, x));
      if (next.order() < c.order()) {
        c = std::move(next);
        changed = true;
      }
    }
  }
  return c;
}

std::vector<PermGroup> p_radical_subgroups(const PermGroup& g, std::uint64_t p, const Limits& limits) {
  auto P = sylow(g, p);
  const std::size_t n = g.degree();
  if (P.order() > limits.max_radical_sylow_order) throw ResourceLimitError("Sylow subgroup too large for radical census");
  std::vector<Permutation> elems{Permutation(n)};
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index{{elems[0], 0}};
  for (std::size_t q = 0; q < elems.size(); ++q)
    for (const auto& s : P.generators()) {
      auto y = elems[q] * s;
      if (index.try_emplace(y, static_cast<std::uint32_t>(elems.size())).second) elems.push_back(std::move(y));
    }
  const std::size_t m = elems.size();
  std::vector<std::uint32_t> mul(m * m), inv(m);
  for (std::size_t a = 0; a < m; ++a) {
    inv[a] = index.at(elems[a].inverse());
    for (std::size_t b = 0; b < m; ++b) mul[a * m + b] = index.at(elems[a] * elems[b]);
  }
  using Bits = std::vector<u64>;
  const std::size_t words = (m + 63) / 64;
  auto has = [](const Bits& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1; };
  struct Sub {
    Bits bits;
    std::vector<std::uint32_t> gens;
  };
  Bits identity(words, 0);
  identity[0] = 1;
  std::vector<Sub> subs{{identity, {}}};
  std::map<Bits, std::size_t> known{{subs[0].bits, 0}};
  constexpr std::size_t kMaxSubgroups = 200'000;
  for (std::size_t q = 0; q < subs.size(); ++q) {
    const Bits s = subs[q].bits;
    const auto sgens = subs[q].gens;
    for (std::uint32_t x = 1; x < m; ++x) {
      if (has(s, x)) continue;
      std::uint32_t xp = 0;
      for (u64 i = 0; i < p; ++i) xp = mul[xp * m + x];
      if (!has(s, xp)) continue;
      bool normalizes = true;
      for (auto h : sgens)
        if (!has(s, mul[mul[inv[x] * m + h] * m + x])) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      Bits t = s;
      std::uint32_t xi = 0;
      for (u64 i = 1; i < p; ++i) {
        xi = mul[xi * m + x];
        for (std::size_t a = 0; a < m; ++a)
          if (has(s, a)) {
            const auto y = mul[a * m + xi];
            t[y / 64] |= u64{1} << (y % 64);
          }
      }
      if (known.count(t)) continue;
      if (subs.size() >= kMaxSubgroups) throw ResourceLimitError("too many subgroups of the Sylow subgroup");
      auto gens = sgens;
      gens.push_back(x);
      known.emplace(t, subs.size());
      subs.push_back({std::move(t), std::move(gens)});
    }
  }
  // Classes under conjugation by P.
  std::vector<std::size_t> parent(subs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& s : P.generators()) {
    const auto x = index.at(s);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      Bits t(words, 0);
      for (std::size_t a = 0; a < m; ++a)
        if (has(subs[i].bits, a)) {
          const auto y = mul[mul[inv[x] * m + a] * m + x];
          t[y / 64] |= u64{1} << (y % 64);
        }
      parent[find(i)] = find(known.at(t));
    }
  }
  struct Radical {
    PermGroup q;
    Order normalizer_order;
  };
  std::vector<Radical> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (find(i) != i) continue;
    std::vector<Permutation> gens;
    for (auto x : subs[i].gens) gens.push_back(elems[x]);
    Order order = 1;
    for (std::size_t j = 0; j < subs[i].gens.size(); ++j) order *= p;
    PermGroup q(n, gens, order);
    auto N = normalizer(g, q);
    if (p_core(N, p).order() != q.order()) continue;
    bool fresh = true;
    for (const auto& r : out)
      if (r.q.order() == q.order() && r.normalizer_order == N.order() && subgroup_conjugator(g, r.q, q)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back({std::move(q), N.order()});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.q.order() < b.q.order(); });
  std::vector<PermGroup> result;
  for (auto& r : out) result.push_back(std::move(r.q));
  return result;
}

WeightCensus weight_count(const PermGroup& g, std::uint64_t p, const Limits& limits) {
  WeightCensus w;
  w.p = p;
  w.p_regular = p_regular_class_count(g, p);
  std::optional<CharacterTable> tg;
  std::optional<ResidueMap> rm;
  std::optional<BlockPartition> part;
  try {
    tg = character_table(g, limits);
    rm.emplace(p);
    part = block_distribution(*tg, *rm);
    w.weights_per_block.assign(part->blocks.size(), 0);
  } catch (const ResourceLimitError&) {
  }
  const auto& gc = g.classes();
  for (auto& q : p_radical_subgroups(g, p, limits)) {
    auto N = normalizer(g, q);
    std::optional<Quotient> quo;
    if (!q.is_trivial() && q.order() != N.order()) quo = quotient_representation(N, q, limits);
    const PermGroup x = q.is_trivial() ? N : q.order() == N.order() ? PermGroup::trivial(1) : quo->group();
    auto tx = character_table(x, limits);
    WeightCensus::Radical rad{q, N.order(), 0};
    const Order full = p_part_of(x.order(), p);
    const auto& nc = N.classes();
    for (std::size_t chi = 0; chi < tx.size(); ++chi) {
      if (p_part_of(tx.degree(chi), p) != full) continue;
      ++rad.weights;
      if (!part) continue;
      std::vector<ResidueMap::Elem> induced(gc.count());
      for (std::size_t i = 0; i < gc.count(); ++i) induced[i].assign(rm->degree(gc[i].element_order), 0);
      for (std::size_t k = 0; k < nc.count(); ++k) {
        const auto& rep = nc[k].representative;
        std::size_t img = 0;
        if (q.is_trivial()) img = x.classes().class_of(rep);
        else if (quo) img = x.classes().class_of(quo->map(rep));
        auto c = tx.value(chi, img).c;
        for (auto& v : c) {
          const __int128 s = static_cast<__int128>(v) * static_cast<std::int64_t>(nc[k].size);
          if (s % static_cast<std::int64_t>(tx.degree(chi)) != 0) throw InternalError("central character is not integral");
          v = static_cast<std::int64_t>(s / static_cast<std::int64_t>(tx.degree(chi)));
        }
        const auto target = gc.class_of(rep);
        rm->add_to(induced[target], rm->reduce(c, tx.class_order(img), gc[target].element_order));
      }
      std::size_t hit = part->blocks.size();
      for (std::size_t b = 0; b < part->blocks.size(); ++b)
        if (part->blocks[b].lambda == induced) hit = b;
      if (hit == part->blocks.size()) throw InternalError("weight does not induce to a block");
      ++w.weights_per_block[hit];
    }
    w.total += rad.weights;
    w.radicals.push_back(std::move(rad));
  }
  return w;
}

VerificationReport awc_check(const PermGroup& g, std::uint64_t p, const Limits& limits) {
  if (!is_prime(p)) throw DomainError("awc needs a prime");
  auto r = make_report("awc", g, p);
  ReportTimer timer(r);
  auto d = local_data(g, p);
  r.hypothesis_holds = p % 2 == 1 && d.automizer_order % 2 == 1;
  r.set("automizer_order", static_cast<std::int64_t>(d.automizer_order));
  auto w = weight_count(g, p, limits);
  std::vector<std::int64_t> orders, norms, per;
  for (const auto& rad : w.radicals) {
    orders.push_back(static_cast<std::int64_t>(rad.q.order()));
    norms.push_back(static_cast<std::int64_t>(rad.normalizer_order));
    per.push_back(static_cast<std::int64_t>(rad.weights));
  }
  r.set("radical_orders", orders);
  r.set("radical_normalizer_orders", norms);
  r.set("weights_per_radical", per);
  r.set("weights", static_cast<std::int64_t>(w.total));
  r.set("p_regular_classes", static_cast<std::int64_t>(w.p_regular));
  if (!w.weights_per_block.empty()) r.set("weights_per_block", ints(w.weights_per_block));
  if (w.total != w.p_regular) {
    r.verdict = Verdict::Fail;
    r.witness.emplace_back("weights", static_cast<std::int64_t>(w.total));
    r.witness.emplace_back("p_regular_classes", static_cast<std::int64_t>(w.p_regular));
  } else {
    r.verdict = r.hypothesis_holds ? Verdict::Pass : Verdict::Vacuous;
  }
  return r;
}

}  // namespace sylab
