#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sylab/blocks.hpp"
#include "sylab/error.hpp"
#include "sylab/groups.hpp"
#include "sylab/structure.hpp"
#include "sylab/subgroups.hpp"
#include "sylab/sylow.hpp"

namespace sylab::harness {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"t11",    "mckay",   "awc",           "amk",
                                            "lemma21", "lemma23", "lemma33-orbits", "sylow-parity"};
  return ids;
}

ArtifactCache::ArtifactCache(fs::path root) : root_(std::move(root)) {}

fs::path ArtifactCache::path(const std::string& kind, const std::string& hash) const {
  const int version = kind == "table" ? kTableFormatVersion : kChainFormatVersion;
  return root_ / (kind + "-v" + std::to_string(version)) / (hash + ".txt");
}

std::optional<std::string> ArtifactCache::load(const std::string& kind, const std::string& hash) const {
  std::ifstream in(path(kind, hash), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ArtifactCache::store(const std::string& kind, const std::string& hash, const std::string& text) {
  std::lock_guard lock(write_mutex_);
  const auto target = path(kind, hash);
  fs::create_directories(target.parent_path());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Error("cannot write cache entry " + target.string());
  }
  fs::rename(tmp, target);
}

std::string serialize_chain(const PermGroup& g) {
  const auto& c = g.chain();
  std::ostringstream out;
  out << "sylab-chain " << kChainFormatVersion << '\n'
      << "group " << g.hash_hex() << '\n'
      << "degree " << g.degree() << '\n'
      << "order " << g.order() << '\n'
      << "base";
  for (auto b : c.base()) out << ' ' << b + 1;
  out << "\nstrong " << c.strong_generators().size() << '\n';
  for (const auto& s : c.strong_generators()) {
    for (std::size_t i = 0; i < s.degree(); ++i) out << (i ? " " : "") << s[static_cast<Point>(i)] + 1;
    out << '\n';
  }
  return out.str();
}

std::optional<PermGroup> deserialize_chain(const std::string& text, const PermGroup& g) {
  std::istringstream in(text);
  std::string word, hash;
  int version = 0;
  std::size_t degree = 0, count = 0;
  Order order = 0;
  if (!(in >> word >> version) || word != "sylab-chain" || version != kChainFormatVersion) return std::nullopt;
  if (!(in >> word >> hash) || word != "group" || hash != g.hash_hex()) return std::nullopt;
  if (!(in >> word >> degree) || word != "degree" || degree != g.degree()) return std::nullopt;
  if (!(in >> word >> order) || word != "order") return std::nullopt;
  if (!(in >> word) || word != "base") return std::nullopt;
  std::vector<Point> base;
  while (in >> word && word != "strong") {
    std::size_t b = 0;
    try {
      b = std::stoul(word);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (b == 0 || b > degree) return std::nullopt;
    base.push_back(static_cast<Point>(b - 1));
  }
  if (word != "strong" || !(in >> count)) return std::nullopt;
  std::vector<Permutation> strong;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Point> img(degree);
    std::vector<bool> hit(degree, false);
    for (auto& x : img) {
      std::size_t v = 0;
      if (!(in >> v) || v == 0 || v > degree || hit[v - 1]) return std::nullopt;
      hit[v - 1] = true;
      x = static_cast<Point>(v - 1);
    }
    strong.emplace_back(std::move(img));
  }
  auto chain = StabilizerChain::from_bsgs(degree, std::move(base), std::move(strong));
  if (chain.order() != order) return std::nullopt;
  for (const auto& x : g.generators())
    if (!chain.contains(x)) return std::nullopt;
  return PermGroup::from_chain(degree, g.generators(), std::move(chain), g.name());
}

PermGroup with_cached_chain(const PermGroup& g, const Options& opts) {
  if (!opts.cache) return g;
  const auto hash = g.hash_hex();
  if (auto text = opts.cache->load("chain", hash)) {
    if (auto loaded = deserialize_chain(*text, g)) return *loaded;
    if (opts.warn) opts.warn("corrupt chain cache entry for " + hash + "; recomputing");
  }
  opts.cache->store("chain", hash, serialize_chain(g));
  return g;
}

CharacterTable cached_table(const PermGroup& g, const Options& opts) {
  const auto hash = g.hash_hex();
  if (opts.cache) {
    if (auto text = opts.cache->load("table", hash)) {
      try {
        auto t = CharacterTable::deserialize(*text, g);
        if (t.verify_orthogonality()) {
          remember_table(t);
          return t;
        }
      } catch (const Error&) {
      }
      if (opts.warn) opts.warn("corrupt table cache entry for " + hash + "; recomputing");
    }
  }
  auto t = character_table(g, opts.limits);
  if (opts.cache) opts.cache->store("table", hash, t.serialize());
  return t;
}

PermGroup p_residual(const PermGroup& g, std::uint64_t p) {
  std::vector<Permutation> gens;
  for (const auto& c : g.classes().classes())
    if (c.element_order % p != 0 && c.element_order > 1) gens.push_back(c.representative);
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, gens);
}

namespace {

VerificationReport sylow_parity(const PermGroup& g, std::uint64_t p) {
  auto r = make_report("sylow-parity", g, p);
  ReportTimer timer(r);
  auto d = local_data(g, p);
  r.set("sylow_order", static_cast<std::int64_t>(d.P.order()));
  r.set("normalizer_order", static_cast<std::int64_t>(d.N.order()));
  r.set("centralizer_order", static_cast<std::int64_t>(d.C.order()));
  r.set("automizer_order", static_cast<std::int64_t>(d.automizer_order));
  r.set("n_over_c", static_cast<std::int64_t>(d.nc_order));
  r.hypothesis_holds = d.automizer_order % 2 == 1;
  const bool even_normalizer = d.N.order() % 2 == 0;
  r.set("normalizer_even", even_normalizer);
  if (d.automizer_order % 2 != d.nc_order % 2) {
    r.verdict = Verdict::Fail;
    r.witness.emplace_back("automizer_order", static_cast<std::int64_t>(d.automizer_order));
    r.witness.emplace_back("n_over_c", static_cast<std::int64_t>(d.nc_order));
    return r;
  }
  r.verdict = r.hypothesis_holds && even_normalizer ? Verdict::Pass : Verdict::Vacuous;
  return r;
}

VerificationReport error_report(const std::string& claim, const std::string& name, const std::string& hash,
                                std::uint64_t p, const std::string& kind, const std::string& message) {
  VerificationReport r;
  r.claim = claim;
  r.group_name = name;
  r.group_hash = hash;
  r.prime = p;
  r.verdict = Verdict::Error;
  r.error_kind = kind;
  r.message = message;
  return r;
}

}  // namespace

VerificationReport run_check(const PermGroup& g, std::uint64_t p, const std::string& claim, const Options& opts,
                             const std::optional<PermGroup>& subgroup) {
  const auto fail = [&](const std::string& kind, const std::string& msg) {
    return error_report(claim, g.name(), g.hash_hex(), p, kind, msg);
  };
  if (std::find(claim_ids().begin(), claim_ids().end(), claim) == claim_ids().end())
    return fail("domain", "unknown claim '" + claim + "'");
  if (p < 3 || !is_prime(p)) return fail("domain", "claims need an odd prime");
  try {
    if (claim == "mckay" || claim == "awc" || claim == "amk") {
      // Loads or stores G's table; the check then finds it in the memo.
      try {
        cached_table(g, opts);
      } catch (const ResourceLimitError&) {
      }
    }
    if (claim == "t11") return check_simple_factor_classification(g, p);
    if (claim == "mckay") return mckay_check(g, p, opts.limits);
    if (claim == "awc") return awc_check(g, p, opts.limits);
    if (claim == "amk") return amk_check(g, p, opts.limits);
    if (claim == "lemma21") return check_normal_subgroup_automizer_map(g, subgroup ? *subgroup : p_residual(g, p), p, opts.limits);
    if (claim == "lemma23") return check_central_elements_not_real(g, p);
    if (claim == "lemma33-orbits") return check_abelianization_orbits_even(g, p, opts.limits);
    return sylow_parity(g, p);
  } catch (const ResourceLimitError& e) {
    return fail("resource", e.what());
  } catch (const DomainError& e) {
    return fail("domain", e.what());
  } catch (const ParseError& e) {
    return fail("parse", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}

std::vector<std::uint64_t> default_primes(const PermGroup& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : {3, 5, 7, 11, 13})
    if (g.order() % p == 0) out.push_back(p);
  return out;
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& name : builtin_names()) {
    CatalogEntry e{name, std::nullopt, {}};
    try {
      e.group = builtin_group(name);
    } catch (const std::exception& ex) {
      e.load_error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> directory_catalog(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".grp") files.push_back(de.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& f : files) {
    CatalogEntry e{f.stem().string(), std::nullopt, {}};
    try {
      auto file = parse_group_file(f);
      e.group = file.to_group();
      if (!file.name.empty()) e.name = file.name;
    } catch (const std::exception& ex) {
      e.load_error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

ScanSummary summarize(const std::vector<VerificationReport>& reports) {
  ScanSummary s;
  for (const auto& r : reports) switch (r.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::Vacuous: ++s.vacuous; break;
      case Verdict::Error: ++s.error; break;
    }
  return s;
}

int exit_code(const ScanSummary& s) {
  if (s.fail) return 1;
  if (s.error) return 2;
  return 0;
}

ScanResult scan_catalog(const std::vector<CatalogEntry>& catalog, const std::vector<std::uint64_t>& primes,
                        const std::vector<std::string>& claims, const Options& opts, unsigned jobs) {
  std::vector<std::vector<VerificationReport>> per(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < catalog.size();) {
      const auto& e = catalog[i];
      if (!e.group) {
        per[i].push_back(error_report("load", e.name, "", 0, "parse", e.load_error));
        continue;
      }
      PermGroup g = e.group->name().empty() ? e.group->renamed(e.name) : *e.group;
      try {
        g = with_cached_chain(g, opts);
      } catch (const std::exception& ex) {
        if (opts.warn) opts.warn(ex.what());
      }
      std::vector<std::uint64_t> ps;
      if (primes.empty()) {
        ps = default_primes(g);
      } else {
        for (auto p : primes)
          if (g.order() % p == 0) ps.push_back(p);
      }
      for (auto p : ps)
        for (const auto& c : claims) per[i].push_back(run_check(g, p, c, opts));
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, catalog.size())));
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  ScanResult out;
  for (auto& v : per)
    for (auto& r : v) out.reports.push_back(std::move(r));
  out.summary = summarize(out.reports);
  return out;
}

namespace {

json quantity_json(const Quantity& q) {
  return std::visit([](const auto& v) { return json(v); }, q);
}

json list_json(const QuantityList& l) {
  json o = json::object();
  for (const auto& [k, v] : l) o[k] = quantity_json(v);
  return o;
}

std::string quantity_text(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else {
          std::string s = "[";
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
          return s + "]";
        }
      },
      q);
}

}  // namespace

std::string emit_report(const std::vector<VerificationReport>& reports, Format format) {
  const auto s = summarize(reports);
  if (format == Format::Json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["summary"] = {{"total", s.total()}, {"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous}, {"error", s.error}};
    json arr = json::array();
    for (const auto& r : reports) {
      json o;
      o["claim"] = r.claim;
      o["group"] = {{"name", r.group_name}, {"hash", r.group_hash}};
      o["prime"] = r.prime;
      o["hypothesis"] = r.hypothesis_holds ? "HOLDS" : "FAILS";
      o["verdict"] = to_string(r.verdict);
      o["error_kind"] = r.verdict == Verdict::Error ? json(r.error_kind) : json(nullptr);
      o["message"] = r.message;
      o["quantities"] = list_json(r.quantities);
      o["witness"] = list_json(r.witness);
      o["wall_time_ms"] = r.wall_time_ms;
      arr.push_back(std::move(o));
    }
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << std::left << std::setw(16) << "group" << std::setw(4) << "p" << std::setw(16) << "claim" << std::setw(7)
      << "hyp" << std::setw(18) << "verdict" << "details\n";
  for (const auto& r : reports) {
    std::string verdict = to_string(r.verdict);
    if (r.verdict == Verdict::Error) verdict += "(" + r.error_kind + ")";
    std::string details;
    const auto& src = r.verdict == Verdict::Error ? QuantityList{} : r.quantities;
    for (const auto& [k, v] : src) details += k + "=" + quantity_text(v) + " ";
    if (r.verdict == Verdict::Error) details = r.message;
    for (const auto& [k, v] : r.witness) details += "witness:" + k + "=" + quantity_text(v) + " ";
    out << std::setw(16) << r.group_name << std::setw(4) << r.prime << std::setw(16) << r.claim << std::setw(7)
        << (r.hypothesis_holds ? "holds" : "fails") << std::setw(18) << verdict << details << '\n';
  }
  out << "total " << s.total() << ": " << s.pass << " pass, " << s.fail << " fail, " << s.vacuous << " vacuous, "
      << s.error << " error\n";
  return out.str();
}

}  // namespace sylab::harness
