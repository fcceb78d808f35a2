#include "sylab/groups.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "sylab/error.hpp"
#include "sylab/field.hpp"
#include "sylab/limits.hpp"

namespace sylab {

namespace {

void check_degree(std::size_t n) {
  if (n > default_limits().max_degree)
    throw ResourceLimitError("degree " + std::to_string(n) + " exceeds the limit");
}

Permutation from_images(std::vector<Point> v) { return Permutation(std::move(v)); }

Permutation long_cycle(std::size_t n, std::size_t from) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  for (std::size_t i = from; i < n; ++i) v[i] = static_cast<Point>(i + 1 < n ? i + 1 : from);
  return from_images(std::move(v));
}

Order factorial(std::size_t n) {
  Order r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

PermGroup symmetric(std::size_t n) {
  check_degree(n);
  if (n < 1 || n > 20) throw DomainError("symmetric group degree must be in 1..20");
  if (n == 1) return PermGroup(1, {}, 1, "S1");
  std::vector<Point> t(n);
  std::iota(t.begin(), t.end(), Point{0});
  std::swap(t[0], t[1]);
  std::vector<Permutation> gens{from_images(t)};
  if (n > 2) gens.push_back(long_cycle(n, 0));
  return PermGroup(n, gens, factorial(n), "S" + std::to_string(n));
}

PermGroup alternating(std::size_t n) {
  check_degree(n);
  if (n < 1 || n > 20) throw DomainError("alternating group degree must be in 1..20");
  std::string name = "A" + std::to_string(n);
  if (n < 3) return PermGroup(n, {}, 1, name);
  std::vector<Point> t(n);
  std::iota(t.begin(), t.end(), Point{0});
  t[0] = 1, t[1] = 2, t[2] = 0;
  std::vector<Permutation> gens{from_images(t)};
  if (n > 3) gens.push_back(long_cycle(n, n % 2 ? 0 : 1));
  return PermGroup(n, gens, factorial(n) / 2, name);
}

PermGroup cyclic(std::size_t n) {
  check_degree(n);
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  if (n == 1) return PermGroup(1, {}, 1, "C1");
  return PermGroup(n, {long_cycle(n, 0)}, n, "C" + std::to_string(n));
}

PermGroup dihedral(std::size_t n) {
  check_degree(n);
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  std::vector<Point> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {long_cycle(n, 0), from_images(r)}, 2 * n, "D" + std::to_string(2 * n));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), n = da + b.degree();
  check_degree(n);
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), Point{0});
    for (Point i = 0; i < da; ++i) v[i] = g[i];
    gens.push_back(from_images(std::move(v)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), Point{0});
    for (Point i = 0; i < b.degree(); ++i) v[da + i] = static_cast<Point>(da + g[i]);
    gens.push_back(from_images(std::move(v)));
  }
  return PermGroup(n, std::move(gens), a.order() * b.order(), a.name() + "x" + b.name());
}

PermGroup psl2(std::uint64_t q) {
  auto [p, f] = prime_power(q);
  if (p == 0 || q < 4) throw DomainError("psl2 needs a prime power q >= 4");
  check_degree(q + 1);
  GaloisField k(p, f);
  // Point index of [x:y]: ∞ = [1:0] is 0, [a:1] is a+1.
  auto point = [&](FieldElem x, FieldElem y) -> Point {
    if (y == 0) return 0;
    return static_cast<Point>(k.mul(x, k.inv(y)) + 1);
  };
  // Row vectors act on the right: [x:y] -> [xa+yc : xb+yd].
  auto action = [&](FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    std::vector<Point> v(q + 1);
    v[0] = point(a, b);
    for (FieldElem x = 0; x < q; ++x)
      v[x + 1] = point(k.add(k.mul(x, a), c), k.add(k.mul(x, b), d));
    return from_images(std::move(v));
  };
  FieldElem w = k.primitive();
  std::vector<Permutation> gens{action(w, 0, 0, k.inv(w)), action(1, 1, 0, 1),
                                action(0, k.neg(1), 1, 0)};
  Order order = q * (q * q - 1) / (q % 2 ? 2 : 1);
  return PermGroup(q + 1, std::move(gens), order, "PSL2(" + std::to_string(q) + ")");
}

PermGroup GroupFile::to_group() const {
  std::vector<Permutation> gens;
  for (const auto& s : generators) gens.push_back(Permutation::from_cycles(degree, s));
  return PermGroup(degree, std::move(gens), name);
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupFile parse_group_text(const std::string& text) {
  GroupFile out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) {
      std::string note = trim(line.substr(h + 1));
      if (!note.empty()) out.provenance += (out.provenance.empty() ? "" : "\n") + note;
      line = line.substr(0, h);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("name:", 0) == 0) {
      out.name = trim(line.substr(5));
      continue;
    }
    if (line.rfind("degree:", 0) == 0) {
      std::string d = trim(line.substr(7));
      std::size_t used = 0;
      unsigned long long n = 0;
      try {
        n = std::stoull(d, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != d.size() || n == 0) throw ParseError("invalid degree '" + d + "'", lineno);
      if (have_degree) throw ParseError("degree given twice", lineno);
      out.degree = n;
      have_degree = true;
      continue;
    }
    if (!have_degree) throw ParseError("generator before degree line", lineno);
    try {
      (void)Permutation::from_cycles(out.degree, line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    out.generators.push_back(line);
  }
  if (!have_degree) throw ParseError("missing degree line", lineno);
  return out;
}

GroupFile parse_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  auto gf = parse_group_text(ss.str());
  if (gf.name.empty()) gf.name = path.stem().string();
  return gf;
}

std::string render_group_file(const PermGroup& g, const std::string& provenance) {
  std::ostringstream out;
  if (!g.name().empty()) out << "name: " << g.name() << '\n';
  std::istringstream notes(provenance);
  for (std::string line; std::getline(notes, line);) out << "# " << line << '\n';
  out << "degree: " << g.degree() << '\n';
  for (const auto& s : g.generators()) out << s.to_string() << '\n';
  return out.str();
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("SYLAB_DATA_DIR"); env && *env) return env;
  std::filesystem::path src = SYLAB_SOURCE_DATA_DIR;
  if (std::filesystem::exists(src)) return src;
  return SYLAB_INSTALL_DATA_DIR;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (int n = 5; n <= 9; ++n) names.push_back("s" + std::to_string(n));
  for (int n = 5; n <= 9; ++n) names.push_back("a" + std::to_string(n));
  for (int n : {6, 7, 9, 15}) names.push_back("c" + std::to_string(n));
  for (int n : {5, 6, 7, 9}) names.push_back("d" + std::to_string(n));
  for (int q : {5, 7, 9, 11, 13, 17, 19, 23, 25, 27}) names.push_back("psl2_" + std::to_string(q));
  for (const char* s : {"a5xc7", "psl2_7xc3", "psl2_7xpsl2_7", "s3xc3", "a4xc3"}) names.push_back(s);
  for (const char* s : {"m11", "m12", "m24"}) names.push_back(s);
  return names;
}

namespace {

PermGroup single(const std::string& name) {
  auto number = [&](std::size_t from) -> std::size_t {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 6)
      throw DomainError("unknown group '" + name + "'");
    return std::stoul(digits);
  };
  if (name.rfind("psl2_", 0) == 0) return psl2(number(5)).renamed(name);
  if (name == "m11" || name == "m12" || name == "m24" || name == "psl3_4") {
    auto gf = parse_group_file(data_directory() / (name + ".grp"));
    return gf.to_group().renamed(name);
  }
  if (name.size() < 2) throw DomainError("unknown group '" + name + "'");
  switch (name[0]) {
    case 's': return symmetric(number(1)).renamed(name);
    case 'a': return alternating(number(1)).renamed(name);
    case 'c': return cyclic(number(1)).renamed(name);
    case 'd': return dihedral(number(1)).renamed(name);
    default: throw DomainError("unknown group '" + name + "'");
  }
}

}  // namespace

PermGroup builtin_group(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t x; (x = name.find('x', start)) != std::string::npos; start = x + 1)
    parts.push_back(name.substr(start, x - start));
  parts.push_back(name.substr(start));
  PermGroup g = single(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, single(parts[i]));
  return g.renamed(name);
}

PermGroup resolve_group(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    auto gf = parse_group_file(arg);
    return gf.to_group();
  }
  return builtin_group(arg);
}

}  // namespace sylab
