#include "sylab/perm_group.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>

#include "sylab/classes.hpp"
#include "sylab/error.hpp"
#include "sylab/limits.hpp"

namespace sylab {

Limits& default_limits() {
  static Limits limits;
  return limits;
}

struct PermGroup::State {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::string name;
  Order known_order = 0;
  std::once_flag chain_once;
  StabilizerChain chain;
  std::once_flag classes_once;
  std::unique_ptr<ClassData> classes;
};

PermGroup::PermGroup() : state_(std::make_shared<State>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name)
    : PermGroup(degree, std::move(generators), 0, std::move(name)) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, Order known_order,
                     std::string name)
    : state_(std::make_shared<State>()) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("generator degree does not match group degree");
  state_->degree = degree;
  state_->generators = std::move(generators);
  state_->name = std::move(name);
  state_->known_order = known_order;
}

PermGroup PermGroup::from_chain(std::size_t degree, std::vector<Permutation> generators,
                                StabilizerChain chain, std::string name) {
  PermGroup g(degree, std::move(generators), std::move(name));
  std::call_once(g.state_->chain_once, [&] { g.state_->chain = std::move(chain); });
  return g;
}

std::size_t PermGroup::degree() const noexcept { return state_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept {
  return state_->generators;
}
const std::string& PermGroup::name() const noexcept { return state_->name; }

PermGroup PermGroup::renamed(std::string name) const {
  PermGroup g(degree(), generators(), state_->known_order, std::move(name));
  // Reuse an already built chain.
  if (state_->chain.degree() == degree() && degree() != 0) {
    std::call_once(g.state_->chain_once, [&] { g.state_->chain = chain(); });
  }
  return g;
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(state_->chain_once, [this] {
    ChainOptions opt;
    opt.known_order = state_->known_order;
    opt.seed = seed();
    state_->chain = StabilizerChain::build(state_->degree, state_->generators, opt);
    if (state_->known_order && state_->chain.order() != state_->known_order)
      throw InternalError("stabilizer chain order disagrees with the known order");
  });
  return state_->chain;
}

Order PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

bool PermGroup::contains(const PermGroup& h) const {
  if (h.degree() != degree()) return false;
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
  return true;
}

std::uint64_t PermGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ull ^ degree();
  for (const auto& g : generators()) {
    h ^= g.hash();
    h *= 1099511628211ull;
  }
  return h;
}

std::string PermGroup::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(content_hash()));
  return buf;
}

const ClassData& PermGroup::classes() const {
  std::call_once(state_->classes_once, [this] {
    state_->classes = std::make_unique<ClassData>(compute_classes(*this, default_limits()));
  });
  return *state_->classes;
}

PermGroup make_subgroup(std::size_t degree, const std::vector<Permutation>& gens,
                        std::string name) {
  std::vector<Permutation> kept;
  for (const auto& g : gens)
    if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end())
      kept.push_back(g);
  return PermGroup(degree, std::move(kept), std::move(name));
}

}  // namespace sylab
