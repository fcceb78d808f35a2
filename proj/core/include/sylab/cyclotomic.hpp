#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sylab {

/// Q(ζ_e) with elements stored as integer coefficient vectors over the power
/// basis 1, ζ, ..., ζ^(φ(e)-1), reduced by the e-th cyclotomic polynomial.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint64_t e);

  std::uint64_t order() const noexcept { return e_; }
  std::size_t dimension() const noexcept { return phi_; }
  /// Coefficients of Φ_e, constant term first.
  const std::vector<std::int64_t>& cyclotomic_polynomial() const noexcept { return poly_; }
  /// Canonical vector of ζ^j.
  const std::vector<std::int64_t>& power(std::uint64_t j) const { return red_[j % e_]; }

  /// Reduces a vector indexed by exponents mod e to the canonical basis.
  std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& by_exponent) const;
  /// Adds c·(canonical ζ^j) into `acc`.
  void add_power(std::vector<std::int64_t>& acc, std::uint64_t j, std::int64_t c) const;

 private:
  std::uint64_t e_;
  std::size_t phi_;
  std::vector<std::int64_t> poly_;
  std::vector<std::vector<std::int64_t>> red_;
};

/// Integer polynomial coefficients of Φ_n, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// An element of Z[ζ_e] in the canonical basis of its field.
struct Cyclotomic {
  std::vector<std::int64_t> c;

  bool is_rational() const;
  bool operator==(const Cyclotomic&) const = default;
  auto operator<=>(const Cyclotomic&) const = default;
  /// Sparse text form: "-" for zero, else "j:c" terms joined by ','.
  std::string to_string() const;
  static Cyclotomic parse(const std::string& s, std::size_t dimension);
};

}  // namespace sylab
