#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "harness.hpp"
#include "sylab/error.hpp"
#include "sylab/groups.hpp"
#include "sylab/structure.hpp"
#include "sylab/sylow.hpp"

namespace fs = std::filesystem;
using namespace sylab;

namespace {

fs::path default_cache_dir() {
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "sylab";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "sylab";
  return fs::temp_directory_path() / "sylab-cache";
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string pretty_table(const CharacterTable& t, const PermGroup& g) {
  std::ostringstream out;
  const auto& cd = g.classes();
  out << "classes:";
  for (std::size_t i = 0; i < cd.count(); ++i) out << ' ' << cd[i].element_order << '/' << cd[i].size;
  out << "\nexponent: " << t.exponent() << "  (irrational values are sparse i:c lists over powers of zeta)\n";
  for (std::size_t x = 0; x < t.size(); ++x) {
    out << "X" << x + 1 << ':';
    for (const auto& v : t.row(x)) out << ' ' << (v.is_rational() ? std::to_string(v.c[0]) : "[" + v.to_string() + "]");
    out << '\n';
  }
  return out.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow automizer and character-theoretic checks on permutation groups"};
  app.require_subcommand(1);

  std::string cache_dir;
  bool no_cache = false;
  std::size_t limit_classes = 0;
  std::uint64_t limit_order = 0;
  app.add_option("--cache-dir", cache_dir, "Artifact cache directory");
  app.add_flag("--no-cache", no_cache, "Do not read or write the cache");
  app.add_option("--limit-classes", limit_classes, "Maximum number of conjugacy classes for tables");
  app.add_option("--limit-order", limit_order, "Maximum group order for character tables");

  std::string group_arg, claim = "t11", subgroup_arg, format = "text", report_path, catalog_dir, primes_arg,
                         claims_arg = "t11";
  std::uint64_t prime = 0;
  unsigned jobs = 0;

  auto* order_cmd = app.add_subcommand("order", "Print the order of a group");
  order_cmd->add_option("group", group_arg, "Group file or built-in name")->required();

  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow subgroup and its local data");
  sylow_cmd->add_option("group", group_arg)->required();
  sylow_cmd->add_option("-p,--prime", prime)->required();

  auto* factors_cmd = app.add_subcommand("factors", "Composition factors");
  factors_cmd->add_option("group", group_arg)->required();

  auto* table_cmd = app.add_subcommand("table", "Character table");
  table_cmd->add_option("group", group_arg)->required();
  table_cmd->add_option("--format", format, "text or raw")->check(CLI::IsMember({"text", "raw"}));

  auto* check_cmd = app.add_subcommand("check", "Check one claim for one prime");
  check_cmd->add_option("group", group_arg)->required();
  check_cmd->add_option("-p,--prime", prime)->required();
  check_cmd->add_option("--claim", claim)->check(CLI::IsMember(harness::claim_ids()));
  check_cmd->add_option("--subgroup", subgroup_arg, "Normal subgroup H for lemma21 (default O^p(G))");
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--report", report_path, "Write the report here instead of stdout");

  auto* scan_cmd = app.add_subcommand("scan", "Check claims over a catalog");
  scan_cmd->add_option("--catalog", catalog_dir, "Directory of .grp files (default: built-in catalog)");
  scan_cmd->add_option("--primes", primes_arg, "Comma-separated primes (default: odd primes <= 13 dividing |G|)");
  scan_cmd->add_option("--claims", claims_arg, "Comma-separated claim ids, or 'all'");
  scan_cmd->add_option("--report", report_path, "Report file");
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  scan_cmd->add_option("-j,--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  harness::Options opts;
  if (limit_classes) opts.limits.max_classes = limit_classes;
  if (limit_order) {
    opts.limits.max_table_order = limit_order;
    opts.limits.max_enumerated_order = std::min(opts.limits.max_enumerated_order, limit_order);
  }
  std::unique_ptr<harness::ArtifactCache> cache;
  if (!no_cache) {
    cache = std::make_unique<harness::ArtifactCache>(cache_dir.empty() ? default_cache_dir() : fs::path(cache_dir));
    opts.cache = cache.get();
  }
  opts.warn = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };

  try {
    if (app.got_subcommand(scan_cmd)) {
      auto catalog = catalog_dir.empty() ? harness::builtin_catalog() : harness::directory_catalog(catalog_dir);
      std::vector<std::uint64_t> primes;
      for (const auto& s : split(primes_arg)) primes.push_back(std::stoull(s));
      auto claims = claims_arg == "all" ? harness::claim_ids() : split(claims_arg);
      for (const auto& c : claims)
        if (std::find(harness::claim_ids().begin(), harness::claim_ids().end(), c) == harness::claim_ids().end()) {
          std::cerr << "unknown claim '" << c << "'\n";
          return 3;
        }
      auto result = harness::scan_catalog(catalog, primes, claims, opts, jobs);
      write_output(harness::emit_report(result.reports, format == "json" ? harness::Format::Json : harness::Format::Text),
                   report_path);
      if (!report_path.empty())
        std::cerr << result.summary.total() << " reports: " << result.summary.pass << " pass, " << result.summary.fail
                  << " fail, " << result.summary.vacuous << " vacuous, " << result.summary.error << " error\n";
      return harness::exit_code(result.summary);
    }

    PermGroup g;
    try {
      g = harness::with_cached_chain(resolve_group(group_arg), opts);
    } catch (const ParseError& e) {
      std::cerr << "parse error: " << e.what() << '\n';
      return 3;
    } catch (const DomainError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 3;
    }

    if (app.got_subcommand(order_cmd)) {
      std::cout << "name: " << g.name() << "\ndegree: " << g.degree() << "\norder: " << g.order() << '\n';
      return 0;
    }
    if (app.got_subcommand(sylow_cmd)) {
      auto d = local_data(g, prime);
      std::cout << "sylow order: " << d.P.order() << "\ngenerators:";
      for (const auto& x : d.P.generators()) std::cout << ' ' << x.to_string();
      std::cout << "\nnormalizer order: " << d.N.order() << "\ncentralizer order: " << d.C.order()
                << "\ncenter order: " << d.ZP.order() << "\nautomizer order: " << d.automizer_order
                << "\n|N/C|: " << d.nc_order << '\n';
      return 0;
    }
    if (app.got_subcommand(factors_cmd)) {
      for (const auto& f : composition_factors(g)) std::cout << f.to_string() << '\n';
      return 0;
    }
    if (app.got_subcommand(table_cmd)) {
      auto t = harness::cached_table(g, opts);
      std::cout << (format == "raw" ? t.serialize() : pretty_table(t, g));
      return 0;
    }
    // check
    std::optional<PermGroup> h;
    if (!subgroup_arg.empty()) {
      try {
        h = resolve_group(subgroup_arg);
      } catch (const Error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
      }
    }
    auto r = harness::run_check(g, prime, claim, opts, h);
    write_output(harness::emit_report({r}, format == "json" ? harness::Format::Json : harness::Format::Text), report_path);
    return harness::exit_code(harness::summarize({r}));
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
