#include "sylab/classes.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>

#include "sylab/error.hpp"
#include "sylab/search.hpp"
#include "sylab/subgroups.hpp"

namespace sylab {

struct ClassData::Lazy {
  std::once_flag once;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  bool built = false;
};

namespace {

constexpr std::size_t kMaxSamples = 400'000;

// Conjugation orbit of x under the generators, appended to `out`.
void conjugation_orbit(const std::vector<Permutation>& gens, const Permutation& x,
                       std::unordered_map<Permutation, std::uint32_t, PermutationHash>& index,
                       std::uint32_t id, std::vector<Permutation>* members) {
  std::vector<Permutation> queue{x};
  index.emplace(x, id);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : gens) {
      Permutation y = queue[k].conjugate(s);
      if (index.emplace(y, id).second) queue.push_back(std::move(y));
    }
  }
  if (members) *members = std::move(queue);
}

bool is_conjugate_via(const StabilizerChain& chain, const Permutation& rep, const Permutation& x) {
  if (rep == x) return true;
  SearchProblem prob;
  prob.prune = cycle_pruner(rep, x);
  prob.accept = [&](const Permutation& t) { return rep.conjugate(t) == x; };
  return element_search(chain, prob).has_value();
}

}  // namespace

bool ClassData::has_element_index() const { return lazy_ && lazy_->built; }

const std::unordered_map<Permutation, std::uint32_t, PermutationHash>& ClassData::element_index()
    const {
  if (group_order_ > enumeration_limit_ && !has_element_index())
    throw ResourceLimitError("group of order " + std::to_string(group_order_) +
                             " is too large to index all elements");
  std::call_once(lazy_->once, [this] {
    lazy_->index.reserve(static_cast<std::size_t>(group_order_));
    for (std::size_t i = 0; i < classes_.size(); ++i)
      conjugation_orbit(generators_, classes_[i].representative, lazy_->index,
                        static_cast<std::uint32_t>(i), nullptr);
    if (lazy_->index.size() != group_order_)
      throw InternalError("class orbits do not cover the group");
    lazy_->built = true;
  });
  return lazy_->index;
}

std::size_t ClassData::class_of(const Permutation& g) const {
  if (has_element_index()) {
    auto it = lazy_->index.find(g);
    if (it == lazy_->index.end()) throw DomainError("element is not in the group");
    return it->second;
  }
  if (!chain_->contains(g)) throw DomainError("element is not in the group");
  auto type = g.cycle_type();
  std::vector<std::size_t> cands;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].cycle_type == type) cands.push_back(i);
  if (cands.empty()) throw InternalError("no class with this cycle type");
  for (std::size_t k = 0; k + 1 < cands.size(); ++k) {
    std::size_t i = cands[k];
    if (is_conjugate_via(*rep_chains_[i], classes_[i].representative, g)) return i;
  }
  return cands.back();
}

std::size_t ClassData::power_class(std::size_t i, std::uint64_t k) const {
  const auto& c = classes_[i];
  return class_of(c.representative.pow(static_cast<std::int64_t>(k % c.element_order)));
}

ClassData compute_classes(const PermGroup& g, const Limits& limits) {
  ClassData cd;
  cd.generators_ = g.generators();
  cd.chain_ = std::make_shared<const StabilizerChain>(g.chain());
  cd.group_order_ = g.order();
  cd.lazy_ = std::make_shared<ClassData::Lazy>();
  cd.enumeration_limit_ = limits.max_enumerated_order;
  const Order n = cd.group_order_;
  std::vector<ConjugacyClass> found;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  bool enumerated = n <= limits.class_enumeration_order && n <= limits.max_enumerated_order;

  auto too_many = [&] {
    if (found.size() > limits.max_classes)
      throw ResourceLimitError("more than " + std::to_string(limits.max_classes) +
                               " conjugacy classes");
  };

  std::vector<std::shared_ptr<const StabilizerChain>> chains;
  if (enumerated) {
    index.reserve(static_cast<std::size_t>(n));
    g.chain().for_each_element([&](const Permutation& x) {
      if (index.count(x)) return true;
      std::vector<Permutation> members;
      conjugation_orbit(cd.generators_, x, index, static_cast<std::uint32_t>(found.size()), &members);
      ConjugacyClass c;
      c.representative = *std::min_element(members.begin(), members.end());
      c.size = members.size();
      c.centralizer_order = n / c.size;
      found.push_back(std::move(c));
      too_many();
      return true;
    });
  } else {
    std::mt19937_64 rng(g.seed());
    std::deque<Permutation> queue;
    Order total = 0;
    auto identify = [&](const Permutation& x) {
      auto type = x.cycle_type();
      for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i].cycle_type != type) continue;
        if (is_conjugate_via(*chains[i], found[i].representative, x)) return true;
      }
      return false;
    };
    queue.push_back(Permutation(g.degree()));
    std::size_t samples = 0;
    while (total < n) {
      Permutation x;
      if (!queue.empty()) {
        x = std::move(queue.front());
        queue.pop_front();
      } else {
        if (++samples > kMaxSamples)
          throw ResourceLimitError("class sampling did not complete");
        x = g.chain().random_element(rng);
      }
      auto type = x.cycle_type();
      if (identify(x)) continue;
      auto chain = std::make_shared<const StabilizerChain>(adapted_chain(g, cycle_base(x)));
      SearchProblem prob;
      prob.prune = cycle_pruner(x, x);
      prob.accept = [&x](const Permutation& t) { return x * t == t * x; };
      PermGroup cent = subgroup_search(*chain, prob, {x});
      ConjugacyClass c;
      c.representative = x;
      c.centralizer_order = cent.order();
      c.size = n / c.centralizer_order;
      c.cycle_type = type;
      total += c.size;
      found.push_back(std::move(c));
      chains.push_back(chain);
      too_many();
      Order o = x.order();
      for (Order k = 2; k < o; ++k) queue.push_back(x.pow(static_cast<std::int64_t>(k)));
    }
    if (total != n) throw InternalError("class sizes do not sum to the group order");
  }

  for (auto& c : found) {
    c.element_order = c.representative.order();
    c.cycle_type = c.representative.cycle_type();
  }
  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = found[a];
    const auto& y = found[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.size != y.size) return x.size < y.size;
    return x.representative < y.representative;
  });
  std::vector<std::uint32_t> new_id(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = static_cast<std::uint32_t>(i);
    cd.classes_.push_back(found[perm[i]]);
  }
  for (const auto& c : cd.classes_) cd.exponent_ = lcm_u64(cd.exponent_, c.element_order);

  if (enumerated) {
    for (auto& [perm_key, id] : index) id = new_id[id];
    std::call_once(cd.lazy_->once, [&] {
      cd.lazy_->index = std::move(index);
      cd.lazy_->built = true;
    });
  }
  // Chains for classes sharing a cycle type with another class.
  cd.rep_chains_.resize(cd.classes_.size());
  for (std::size_t i = 0; i < cd.classes_.size(); ++i) {
    bool shared = false;
    for (std::size_t j = 0; j < cd.classes_.size() && !shared; ++j)
      shared = j != i && cd.classes_[j].cycle_type == cd.classes_[i].cycle_type;
    if (shared && !enumerated) cd.rep_chains_[i] = chains[perm[i]];
  }

  cd.inverse_.resize(cd.classes_.size());
  for (std::size_t i = 0; i < cd.classes_.size(); ++i)
    cd.inverse_[i] = cd.class_of(cd.classes_[i].representative.inverse());
  for (auto r : prime_divisors(cd.exponent_)) {
    std::vector<std::size_t> pm(cd.classes_.size());
    for (std::size_t i = 0; i < cd.classes_.size(); ++i) pm[i] = cd.power_class(i, r);
    cd.power_maps_[r] = std::move(pm);
  }
  return cd;
}

}  // namespace sylab
