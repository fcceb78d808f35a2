#include "sylab/cyclotomic.hpp"

#include <sstream>

#include "sylab/error.hpp"
#include "sylab/subgroups.hpp"

namespace sylab {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

namespace {

using Poly = std::vector<std::int64_t>;

/// Exact quotient of a by the monic polynomial b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw InternalError("cyclotomic division degree error");
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw InternalError("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  // Φ_d = (x^d - 1) / Π Φ_c over proper divisors c of d, built bottom-up.
  std::vector<Poly> phi(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const std::uint64_t d = divisors[i];
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (d % divisors[j] == 0) p = divide_exact(std::move(p), phi[j]);
    phi[i] = std::move(p);
  }
  return phi.back();
}

CyclotomicField::CyclotomicField(std::uint64_t e) : e_(e), phi_(euler_phi(e)), poly_(sylab::cyclotomic_polynomial(e)) {
  red_.assign(e, std::vector<std::int64_t>(phi_, 0));
  std::vector<std::int64_t> cur(phi_, 0);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < e; ++j) {
    red_[j] = cur;
    // multiply by ζ and reduce the overflow coefficient with Φ_e
    std::int64_t top = cur[phi_ - 1];
    for (std::size_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi_; ++i) cur[i] -= top * poly_[i];
  }
}

std::vector<std::int64_t> CyclotomicField::reduce(const std::vector<std::int64_t>& by_exponent) const {
  std::vector<std::int64_t> out(phi_, 0);
  for (std::size_t j = 0; j < by_exponent.size(); ++j)
    if (by_exponent[j] != 0) add_power(out, j, by_exponent[j]);
  return out;
}

void CyclotomicField::add_power(std::vector<std::int64_t>& acc, std::uint64_t j, std::int64_t c) const {
  const auto& v = red_[j % e_];
  for (std::size_t i = 0; i < phi_; ++i) acc[i] += c * v[i];
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ":" + std::to_string(c[i]);
  }
  return out.empty() ? "-" : out;
}

Cyclotomic Cyclotomic::parse(const std::string& s, std::size_t dimension) {
  Cyclotomic v;
  v.c.assign(dimension, 0);
  if (s == "-") return v;
  std::istringstream in(s);
  std::string term;
  while (std::getline(in, term, ',')) {
    auto colon = term.find(':');
    if (colon == std::string::npos) throw ParseError("bad cyclotomic term '" + term + "'");
    std::size_t i = 0;
    std::int64_t c = 0;
    try {
      i = std::stoul(term.substr(0, colon));
      c = std::stoll(term.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad cyclotomic term '" + term + "'");
    }
    if (i >= dimension) throw ParseError("cyclotomic index out of range");
    v.c[i] = c;
  }
  return v;
}

}  // namespace sylab
