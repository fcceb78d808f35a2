#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace sylab {

/// Element of GF(p^f), encoded as the integer Σ c_i p^i of its coefficients
/// in the polynomial basis 1, x, ..., x^(f-1).
using FieldElem = std::uint32_t;

/// GF(p^f) defined by the least primitive modulus. Ordering of moduli: monic
/// degree-f polynomials x^f + c_{f-1} x^{f-1} + ... + c_0 compared by the
/// integer Σ c_i p^i; for f = 1 the modulus is x - g for the generator g.
class GaloisField {
 public:
  /// Throws DomainError if p is not prime or f < 1, ResourceLimitError if
  /// p^f exceeds the table limit.
  GaloisField(std::uint64_t p, unsigned f);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return f_; }
  std::uint64_t size() const noexcept { return q_; }
  /// Coefficients c_0..c_f of the modulus (c_f = 1).
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }
  /// The class of x; generates the multiplicative group.
  FieldElem primitive() const { return primitive_; }
  /// Image of an integer in the prime field.
  FieldElem from_int(std::int64_t n) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws DomainError on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::int64_t e) const;
  FieldElem frobenius(FieldElem a) const { return pow(a, static_cast<std::int64_t>(p_)); }
  /// Discrete log base `primitive()`; throws on zero.
  std::uint64_t log(FieldElem a) const;
  FieldElem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

 private:
  std::uint64_t p_;
  unsigned f_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  FieldElem primitive_ = 1;
  std::shared_ptr<const std::vector<FieldElem>> exp_table_;
  std::shared_ptr<const std::vector<std::uint32_t>> log_table_;
  const FieldElem* exp_ = nullptr;
  const std::uint32_t* log_ = nullptr;
};

/// Splits q into (p, f) with q = p^f, or (0, 0) if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

}  // namespace sylab
