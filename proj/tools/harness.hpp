#pragma once

#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sylab/chartab.hpp"
#include "sylab/limits.hpp"
#include "sylab/perm_group.hpp"
#include "sylab/report.hpp"

namespace sylab::harness {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kChainFormatVersion = 1;

/// Claim identifiers accepted by `run_check`.
const std::vector<std::string>& claim_ids();

/// On-disk store of stabilizer chains and character tables keyed by group hash.
/// Each artifact kind lives in its own versioned subdirectory, so a format
/// change leaves old entries unread.
class ArtifactCache {
 public:
  explicit ArtifactCache(std::filesystem::path root);

  std::optional<std::string> load(const std::string& kind, const std::string& hash) const;
  void store(const std::string& kind, const std::string& hash, const std::string& text);
  std::filesystem::path path(const std::string& kind, const std::string& hash) const;

 private:
  std::filesystem::path root_;
  std::mutex write_mutex_;
};

struct Options {
  Limits limits = default_limits();
  ArtifactCache* cache = nullptr;
  /// Receives cache warnings (corrupt entries and the like).
  std::function<void(const std::string&)> warn;
};

std::string serialize_chain(const PermGroup& g);
/// Rebuilds g from a serialized chain; nullopt if the text does not describe g.
std::optional<PermGroup> deserialize_chain(const std::string& text, const PermGroup& g);

/// Group with its chain loaded from (or stored into) the cache.
PermGroup with_cached_chain(const PermGroup& g, const Options& opts);
CharacterTable cached_table(const PermGroup& g, const Options& opts);

/// O^p(G): the normal closure of the p'-elements.
PermGroup p_residual(const PermGroup& g, std::uint64_t p);

/// Runs one claim. Library errors become ERROR reports; never throws for
/// mathematical or resource failures.
VerificationReport run_check(const PermGroup& g, std::uint64_t p, const std::string& claim, const Options& opts,
                             const std::optional<PermGroup>& subgroup = std::nullopt);

/// Odd primes ≤ 13 dividing |G|.
std::vector<std::uint64_t> default_primes(const PermGroup& g);

struct CatalogEntry {
  std::string name;
  std::optional<PermGroup> group;
  /// Set when the entry could not be loaded.
  std::string load_error;
};

/// Built-in catalog, in a fixed order.
std::vector<CatalogEntry> builtin_catalog();
/// Every *.grp file of a directory, sorted by file name.
std::vector<CatalogEntry> directory_catalog(const std::filesystem::path& dir);

struct ScanSummary {
  std::size_t pass = 0, fail = 0, vacuous = 0, error = 0;
  std::size_t total() const { return pass + fail + vacuous + error; }
};

struct ScanResult {
  std::vector<VerificationReport> reports;
  ScanSummary summary;
};

/// One report per (entry, prime, claim); primes empty means `default_primes`.
/// Entries run in parallel on up to `jobs` threads; results keep catalog order.
ScanResult scan_catalog(const std::vector<CatalogEntry>& catalog, const std::vector<std::uint64_t>& primes,
                        const std::vector<std::string>& claims, const Options& opts, unsigned jobs = 0);

ScanSummary summarize(const std::vector<VerificationReport>& reports);

/// 0 when everything passed or was vacuous, 1 on any FAIL, otherwise 2 on any ERROR.
int exit_code(const ScanSummary& s);

enum class Format { Json, Text };

std::string emit_report(const std::vector<VerificationReport>& reports, Format format);

}  // namespace sylab::harness
