// Named-check report: every scenario and the verification runner aggregate
// {name, value, tol, pass} rows; `verify` serializes them as JSON.

#ifndef NLQG_REPORT_HPP
#define NLQG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nlqg::report {

struct Check {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
  int criterion = 0;  // acceptance-criterion tag; 0 = supplementary
};

inline Check make_check(std::string name, double value, double tol, int criterion = 0) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.tol = tol;
  c.pass = value <= tol;
  c.criterion = criterion;
  return c;
}

struct Report {
  std::vector<Check> checks;
  std::uint64_t config_hash = 0;
  std::string version;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Stable FNV-1a over the canonical option text.
std::uint64_t fnv1a(const std::string& data);

// Deterministic JSON: { "checks": [ {name, value, tol, pass} ], "meta": {...} }
std::string to_json(const Report& r);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nlqg::report

#endif  // NLQG_REPORT_HPP
