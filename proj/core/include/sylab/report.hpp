#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sylab {

class PermGroup;

enum class Verdict { Pass, Fail, Vacuous, Error };
std::string to_string(Verdict v);

using Quantity = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>>;
using QuantityList = std::vector<std::pair<std::string, Quantity>>;

/// Outcome of one claim check on one group and prime.
struct VerificationReport {
  std::string claim;
  std::string group_name;
  std::string group_hash;
  std::uint64_t prime = 0;
  bool hypothesis_holds = false;
  Verdict verdict = Verdict::Error;
  /// For Verdict::Error: "resource", "precondition", "domain", "parse" or "internal".
  std::string error_kind;
  std::string message;
  QuantityList quantities;
  /// Data sufficient to replay a FAIL.
  QuantityList witness;
  double wall_time_ms = 0;

  void set(const std::string& key, Quantity value) { quantities.emplace_back(key, std::move(value)); }
  const Quantity* get(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
};

VerificationReport make_report(const std::string& claim, const PermGroup& g, std::uint64_t p);

/// Stopwatch that stores the elapsed time into a report when finished.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    r_.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  VerificationReport& r_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sylab
