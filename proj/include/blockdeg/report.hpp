#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace blockdeg {

inline constexpr const char* kReportSchema = "blockdeg/1";

struct Violation {
  std::string cell;
  std::string kind;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of one grid verification. Entries appear in grid order, so two
/// runs over the same grid give identical reports apart from wall_time.
struct VerificationReport {
  std::string command;
  nlohmann::ordered_json grid = nlohmann::ordered_json::object();
  std::size_t grid_size = 0;  // cells enumerated
  std::size_t cells_checked = 0;  // individual checks performed
  std::vector<Violation> violations;
  std::vector<Violation> ambiguous;  // half-factor cases, reported but not failing
  double wall_time = 0.0;

  [[nodiscard]] bool ok() const { return violations.empty(); }

  /// Folds a cell's findings in; callers merge in grid order.
  void absorb(std::size_t cells, std::vector<Violation> v, std::vector<Violation> a = {}) {
    cells_checked += cells;
    for (auto& x : v) violations.push_back(std::move(x));
    for (auto& x : a) ambiguous.push_back(std::move(x));
  }
};

namespace detail {

inline nlohmann::ordered_json violations_json(const std::vector<Violation>& list) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : list) arr.push_back({{"cell", v.cell}, {"kind", v.kind}, {"detail", v.detail}});
  return arr;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const VerificationReport& r, bool with_time = true) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = r.command;
  j["grid"] = r.grid;
  j["grid_size"] = r.grid_size;
  j["cells_checked"] = r.cells_checked;
  j["violations"] = detail::violations_json(r.violations);
  j["ambiguous"] = detail::violations_json(r.ambiguous);
  if (with_time) j["wall_time"] = r.wall_time;
  return j;
}

/// One line per violation or ambiguous case after a header.
inline std::string to_csv(const VerificationReport& r) {
  std::string out = "status,cell,kind,detail\n";
  auto rows = [&](const char* status, const std::vector<Violation>& list) {
    for (const auto& v : list)
      out += std::string(status) + "," + detail::csv_field(v.cell) + "," + detail::csv_field(v.kind) + "," +
             detail::csv_field(v.detail) + "\n";
  };
  rows("violation", r.violations);
  rows("ambiguous", r.ambiguous);
  return out;
}

}  // namespace blockdeg
