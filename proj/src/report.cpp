#include "nlqg/report.hpp"

#include <json.hpp>

namespace nlqg::report {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["value"] = c.value;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  j["meta"]["config_hash"] = r.config_hash;
  j["meta"]["version"] = r.version;
  return j.dump(2) + "\n";
}

}  // namespace nlqg::report
