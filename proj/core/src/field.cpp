#include "sylab/field.hpp"

#include "sylab/error.hpp"
#include "sylab/limits.hpp"
#include "sylab/subgroups.hpp"

namespace sylab {

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  auto ps = prime_divisors(q);
  if (ps.size() != 1) return {0, 0};
  unsigned f = 0;
  for (std::uint64_t r = q; r > 1; r /= ps[0]) ++f;
  return {ps[0], f};
}

namespace {

/// Multiplication by x modulo the monic polynomial `mod`, on digit vectors.
void times_x(std::vector<std::uint64_t>& v, const std::vector<std::uint64_t>& mod,
             std::uint64_t p) {
  const std::size_t f = v.size();
  std::uint64_t top = v[f - 1];
  for (std::size_t i = f - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  for (std::size_t i = 0; i < f; ++i) v[i] = (v[i] + (p - mod[i]) * top) % p;
}

FieldElem encode(const std::vector<std::uint64_t>& v, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = v.size(); i-- > 0;) r = r * p + v[i];
  return static_cast<FieldElem>(r);
}

}  // namespace

GaloisField::GaloisField(std::uint64_t p, unsigned f) : p_(p), f_(f) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (f < 1) throw DomainError("field degree must be positive");
  q_ = 1;
  for (unsigned i = 0; i < f; ++i) {
    q_ *= p;
    if (q_ > default_limits().max_field_order) throw ResourceLimitError("field too large");
  }
  // Search moduli in increasing order for one whose root x has order q-1.
  std::vector<FieldElem> exp(q_ - 1);
  std::vector<std::uint32_t> log(q_, 0);
  for (std::uint64_t code = 0; code < q_; ++code) {
    std::vector<std::uint64_t> mod(f + 1, 1);
    for (unsigned i = 0, c = code; i < f; ++i, c /= p) mod[i] = c % p;
    if (mod[0] == 0) continue;
    std::vector<std::uint64_t> v(f, 0);
    v[0] = 1;
    bool primitive = true;
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
      FieldElem e = encode(v, p);
      if (k > 0 && e == 1) {
        primitive = false;
        break;
      }
      exp[k] = e;
      times_x(v, mod, p);
    }
    if (!primitive || encode(v, p) != 1) continue;
    modulus_ = mod;
    break;
  }
  if (modulus_.empty()) throw InternalError("no primitive modulus found");
  if (q_ > 2) primitive_ = exp[1];
  for (std::uint64_t k = 0; k < q_ - 1; ++k) log[exp[k]] = static_cast<std::uint32_t>(k);
  exp_table_ = std::make_shared<const std::vector<FieldElem>>(std::move(exp));
  log_table_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(log));
  exp_ = exp_table_->data();
  log_ = log_table_->data();
}

FieldElem GaloisField::from_int(std::int64_t n) const {
  auto r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<FieldElem>(r);
}

FieldElem GaloisField::add(FieldElem a, FieldElem b) const {
  if (f_ == 1) return static_cast<FieldElem>((a + std::uint64_t{b}) % p_);
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i, a /= p_, b /= p_, scale *= p_) r += ((a % p_ + b % p_) % p_) * scale;
  return static_cast<FieldElem>(r);
}

FieldElem GaloisField::neg(FieldElem a) const {
  std::uint64_t r = 0, scale = 1;
  for (unsigned i = 0; i < f_; ++i, a /= p_, scale *= p_) r += ((p_ - a % p_) % p_) * scale;
  return static_cast<FieldElem>(r);
}

FieldElem GaloisField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem GaloisField::mul(FieldElem a, FieldElem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

FieldElem GaloisField::inv(FieldElem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem GaloisField::pow(FieldElem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("inverse of zero");
    return e == 0 ? 1 : 0;
  }
  auto n = static_cast<std::int64_t>(q_ - 1);
  auto k = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[k];
}

std::uint64_t GaloisField::log(FieldElem a) const {
  if (a == 0) throw DomainError("log of zero");
  return log_[a];
}

}  // namespace sylab
