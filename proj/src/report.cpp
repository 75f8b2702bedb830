#include "qca/report.hpp"

#include <atomic>

#include "json.hpp"

namespace qca {

std::string report_to_json(const Report& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r) {
    nlohmann::json j{{"suite", c.suite}, {"identity", c.identity}, {"n", c.n}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

namespace {

// Nanoseconds since the steady clock epoch; 0 means no deadline.
std::atomic<long long> g_deadline{0};

}  // namespace

void set_deadline(std::optional<std::chrono::steady_clock::time_point> deadline) {
  g_deadline = deadline ? deadline->time_since_epoch().count() : 0;
}

void check_deadline() {
  const long long d = g_deadline.load(std::memory_order_relaxed);
  if (d != 0 && std::chrono::steady_clock::now().time_since_epoch().count() > d)
    throw ResourceLimit("time budget exhausted");
}

}  // namespace qca
