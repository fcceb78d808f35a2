#include "sylab/report.hpp"

#include "sylab/error.hpp"
#include "sylab/perm_group.hpp"

namespace sylab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Vacuous: return "VACUOUS";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

const Quantity* VerificationReport::get(const std::string& key) const {
  for (const auto& [k, v] : quantities)
    if (k == key) return &v;
  return nullptr;
}

std::int64_t VerificationReport::get_int(const std::string& key) const {
  const Quantity* q = get(key);
  if (!q || !std::holds_alternative<std::int64_t>(*q))
    throw InternalError("report has no integer quantity '" + key + "'");
  return std::get<std::int64_t>(*q);
}

VerificationReport make_report(const std::string& claim, const PermGroup& g, std::uint64_t p) {
  VerificationReport r;
  r.claim = claim;
  r.group_name = g.name();
  r.group_hash = g.hash_hex();
  r.prime = p;
  return r;
}

}  // namespace sylab
