#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sylab/permutation.hpp"
#include "sylab/stabilizer_chain.hpp"

namespace sylab {

class ClassData;

/// Finitely generated permutation group. Copies share one immutable state;
/// the stabilizer chain and class data are computed once on first use and
/// are safe to read concurrently.
class PermGroup {
 public:
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name = {});
  /// Attaches a known order so chain construction can certify by order.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, Order known_order,
            std::string name = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  /// Adopts an already computed chain for the given generators.
  static PermGroup from_chain(std::size_t degree, std::vector<Permutation> generators,
                              StabilizerChain chain, std::string name = {});

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const std::string& name() const noexcept;
  PermGroup renamed(std::string name) const;

  const StabilizerChain& chain() const;
  Order order() const;
  bool contains(const Permutation& g) const;
  bool contains(const PermGroup& h) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  /// Stable 64-bit hash of degree and generators; cache key.
  std::uint64_t content_hash() const;
  std::string hash_hex() const;

  const ClassData& classes() const;

  /// Deterministic RNG seeded from the content hash.
  std::uint64_t seed() const { return content_hash() ^ 0x9e3779b97f4a7c15ULL; }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Subgroup generated by `gens` inside a group of the given degree, with
/// identity generators dropped.
PermGroup make_subgroup(std::size_t degree, const std::vector<Permutation>& gens,
                        std::string name = {});

}  // namespace sylab
