#include "sylab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sylab/error.hpp"

namespace sylab {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > (1ull << 31)) throw ParseError("point out of range");
        ++i;
      }
      if (i == start) throw ParseError("expected a point number");
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " exceeds degree " + std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (used[p]) throw ParseError("duplicate point " + std::to_string(v));
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  // Reduce the exponent per cycle; cheaper than repeated squaring for small degree.
  Permutation r(degree());
  std::vector<bool> seen(degree(), false);
  std::vector<Point> cyc;
  for (Point s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    cyc.clear();
    for (Point x = s; !seen[x]; x = base.images_[x]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    std::size_t shift = e % cyc.size();
    for (std::size_t j = 0; j < cyc.size(); ++j) r.images_[cyc[j]] = cyc[(j + shift) % cyc.size()];
  }
  return r;
}

Order Permutation::order() const {
  Order o = 1;
  for (std::uint32_t len : cycle_type()) o = lcm_u64(o, len);
  return o;
}

Permutation Permutation::conjugate(const Permutation& g) const {
  if (g.degree() != degree()) throw DomainError("degree mismatch");
  // (g⁻¹ x g)[g[i]] = g[x[i]]
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree(), false);
  for (Point s = 0; s < degree(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    std::vector<Point> c;
    for (Point x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> out;
  std::vector<bool> seen(degree(), false);
  for (Point s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (Point x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::uint32_t> Permutation::cycle_lengths() const {
  std::vector<std::uint32_t> out(degree(), 0);
  for (Point s = 0; s < degree(); ++s) {
    if (out[s]) continue;
    std::uint32_t len = 0;
    Point x = s;
    do {
      ++len;
      x = images_[x];
    } while (x != s);
    x = s;
    do {
      out[x] = len;
      x = images_[x];
    } while (x != s);
  }
  return out;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> out;
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) out.push_back(i);
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  multiply_into(r, a, b);
  return r;
}

void multiply_into(Permutation& out, const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("degree mismatch");
  std::size_t n = a.degree();
  if (&out == &a || &out == &b) {
    Permutation tmp;
    multiply_into(tmp, a, b);
    out = std::move(tmp);
    return;
  }
  out.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.images_[i] = b.images_[a.images_[i]];
}

std::uint64_t Permutation::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sylab
