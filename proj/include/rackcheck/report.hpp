// Report assembly and serialization.  JSON output uses a fixed key order and
// renders group-scale integers as decimal strings, so identical runs produce
// byte-identical documents.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rackcheck/common.hpp"
#include "rackcheck/typed.hpp"

namespace rackcheck {

inline constexpr const char* kToolVersion = "0.1.0";

struct WitnessReport {
  std::string r, s;
  std::uint64_t orbit_r_size = 0, orbit_s_size = 0;
};

struct ClassReportEntry {
  std::string label;
  std::uint64_t element_order = 1;
  std::uint64_t class_size = 1;
  std::string centralizer_order;  // decimal string
  std::optional<bool> outer;      // set when an inner/outer split was computed
  std::string verdict;            // TypeD | NotTypeD | Unknown
  std::string method;
  std::optional<WitnessReport> witness;
  // Involution classes: product-order spectrum as [order, count] pairs.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> spectrum;
  ScanCounters counters;
  std::optional<std::uint64_t> wall_ms;  // only with --timings
};

struct ClassificationReport {
  std::string group;
  std::string group_order;  // decimal string
  std::size_t degree = 0;
  std::string strategy = "auto";
  std::uint64_t seed = 1;
  std::uint64_t budget_pairs = 0;
  std::uint64_t orbit_cap = 0;
  unsigned workers = 1;
  bool outer_only = false;
  std::optional<std::string> derived_order;  // with outer_only
  std::vector<ClassReportEntry> classes;
  std::vector<std::string> not_type_d;  // labels, class order
  std::vector<std::string> unknown;     // labels, class order

  bool any_unknown() const { return !unknown.empty(); }
};

nlohmann::ordered_json to_json(const ClassReportEntry& e);
nlohmann::ordered_json to_json(const ClassificationReport& r);
ClassificationReport classification_report_from_json(const nlohmann::json& j);

// Plain-text rendering: one line per class and a closing summary line
// "<group> : <labels of classes that are not type D>" (or "none").
std::string to_text(const ClassificationReport& r);

}  // namespace rackcheck
