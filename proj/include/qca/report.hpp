#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qca {

/// One checked identity instance.
struct CheckResult {
  std::string suite;
  std::string identity;
  int n = 0;
  bool ok = false;
  std::string detail;  // empty on success, first discrepancy otherwise
};

using Report = std::vector<CheckResult>;

inline bool all_ok(const Report& r) {
  for (const auto& c : r)
    if (!c.ok) return false;
  return true;
}

inline void append(Report& into, const Report& more) { into.insert(into.end(), more.begin(), more.end()); }

/// JSON array of {suite, identity, n, ok[, detail]}.
std::string report_to_json(const Report& r);

/// Raised when a computation exceeds a configured cap (layer size, wall-clock budget).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide cooperative deadline; long loops call check_deadline().
void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline);
void check_deadline();

}  // namespace qca
