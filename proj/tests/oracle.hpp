#pragma once

// Brute-force reference computations used as independent test oracles.
// Everything here works on explicit element lists and uses only
// Permutation arithmetic.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "sylab/permutation.hpp"

namespace oracle {

using sylab::Permutation;

inline std::vector<Permutation> elements(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<Permutation> all{Permutation(degree)};
  std::unordered_set<Permutation, sylab::PermutationHash> seen(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& g : gens) {
      Permutation y = all[k] * g;
      if (seen.insert(y).second) all.push_back(std::move(y));
    }
  std::sort(all.begin(), all.end());
  return all;
}

inline std::vector<Permutation> parse(std::size_t degree, std::initializer_list<const char*> cs) {
  std::vector<Permutation> out;
  for (const char* c : cs) out.push_back(Permutation::from_cycles(degree, c));
  return out;
}

/// Sorted class sizes.
inline std::vector<std::uint64_t> class_sizes(const std::vector<Permutation>& g) {
  std::set<Permutation> done;
  std::vector<std::uint64_t> sizes;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& c : g) cls.insert(x.conjugate(c));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::vector<Permutation> centralizer(const std::vector<Permutation>& g, const Permutation& x) {
  std::vector<Permutation> out;
  for (const auto& c : g)
    if (x * c == c * x) out.push_back(c);
  return out;
}

inline std::vector<Permutation> normalizer(const std::vector<Permutation>& g,
                                           const std::vector<Permutation>& h) {
  std::set<Permutation> hs(h.begin(), h.end());
  std::vector<Permutation> out;
  for (const auto& c : g) {
    bool ok = true;
    for (const auto& x : h)
      if (!hs.count(x.conjugate(c))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(c);
  }
  return out;
}

inline bool conjugate(const std::vector<Permutation>& g, const Permutation& x, const Permutation& y) {
  for (const auto& c : g)
    if (x.conjugate(c) == y) return true;
  return false;
}

inline std::vector<Permutation> center(const std::vector<Permutation>& g) {
  std::vector<Permutation> out;
  for (const auto& z : g) {
    bool ok = true;
    for (const auto& c : g)
      if (z * c != c * z) {
        ok = false;
        break;
      }
    if (ok) out.push_back(z);
  }
  return out;
}

inline std::vector<Permutation> derived(const std::vector<Permutation>& g, std::size_t degree) {
  std::set<Permutation> comms;
  for (const auto& a : g)
    for (const auto& b : g) comms.insert(a.inverse() * b.inverse() * a * b);
  return elements(degree, {comms.begin(), comms.end()});
}

}  // namespace oracle
