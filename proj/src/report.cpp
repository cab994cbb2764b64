#include "rackcheck/report.hpp"

#include <sstream>

namespace rackcheck {

nlohmann::ordered_json to_json(const ClassReportEntry& e) {
  nlohmann::ordered_json j;
  j["label"] = e.label;
  j["element_order"] = e.element_order;
  j["size"] = e.class_size;
  j["centralizer_order"] = e.centralizer_order;
  if (e.outer) j["outer"] = *e.outer;
  j["verdict"] = e.verdict;
  j["method"] = e.method;
  if (e.witness) {
    nlohmann::ordered_json w;
    w["r"] = e.witness->r;
    w["s"] = e.witness->s;
    w["orbit_r_size"] = e.witness->orbit_r_size;
    w["orbit_s_size"] = e.witness->orbit_s_size;
    j["witness"] = std::move(w);
  }
  if (!e.spectrum.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (auto& [o, c] : e.spectrum) arr.push_back({o, c});
    j["product_order_spectrum"] = std::move(arr);
  }
  nlohmann::ordered_json c;
  c["pairs_scanned"] = e.counters.pairs_scanned;
  c["rejected_commuting"] = e.counters.rejected_commuting;
  c["rejected_same_orbit"] = e.counters.rejected_same_orbit;
  c["orbit_capped"] = e.counters.orbit_capped;
  j["counters"] = std::move(c);
  if (e.wall_ms) j["wall_ms"] = *e.wall_ms;
  return j;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["tool"] = "rackcheck";
  j["version"] = kToolVersion;
  j["mode"] = "classify";
  j["group"] = r.group;
  j["group_order"] = r.group_order;
  j["degree"] = r.degree;
  j["strategy"] = r.strategy;
  j["seed"] = r.seed;
  j["budget_pairs"] = r.budget_pairs;
  j["orbit_cap"] = r.orbit_cap;
  j["workers"] = r.workers;
  j["outer_only"] = r.outer_only;
  if (r.derived_order) j["derived_order"] = *r.derived_order;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : r.classes) arr.push_back(to_json(e));
  j["classes"] = std::move(arr);
  j["not_type_d"] = r.not_type_d;
  j["unknown"] = r.unknown;
  return j;
}

ClassificationReport classification_report_from_json(const nlohmann::json& j) {
  ClassificationReport r;
  try {
    r.group = j.at("group").get<std::string>();
    r.group_order = j.at("group_order").get<std::string>();
    r.degree = j.at("degree").get<std::size_t>();
    r.strategy = j.at("strategy").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.budget_pairs = j.at("budget_pairs").get<std::uint64_t>();
    r.orbit_cap = j.at("orbit_cap").get<std::uint64_t>();
    r.workers = j.at("workers").get<unsigned>();
    r.outer_only = j.at("outer_only").get<bool>();
    if (j.contains("derived_order")) r.derived_order = j["derived_order"].get<std::string>();
    for (const auto& je : j.at("classes")) {
      ClassReportEntry e;
      e.label = je.at("label").get<std::string>();
      e.element_order = je.at("element_order").get<std::uint64_t>();
      e.class_size = je.at("size").get<std::uint64_t>();
      e.centralizer_order = je.at("centralizer_order").get<std::string>();
      if (je.contains("outer")) e.outer = je["outer"].get<bool>();
      e.verdict = je.at("verdict").get<std::string>();
      e.method = je.at("method").get<std::string>();
      if (je.contains("witness")) {
        WitnessReport w;
        w.r = je["witness"].at("r").get<std::string>();
        w.s = je["witness"].at("s").get<std::string>();
        w.orbit_r_size = je["witness"].at("orbit_r_size").get<std::uint64_t>();
        w.orbit_s_size = je["witness"].at("orbit_s_size").get<std::uint64_t>();
        e.witness = std::move(w);
      }
      if (je.contains("product_order_spectrum"))
        for (const auto& p : je["product_order_spectrum"])
          e.spectrum.emplace_back(p.at(0).get<std::uint64_t>(), p.at(1).get<std::uint64_t>());
      const auto& c = je.at("counters");
      e.counters.pairs_scanned = c.at("pairs_scanned").get<std::uint64_t>();
      e.counters.rejected_commuting = c.at("rejected_commuting").get<std::uint64_t>();
      e.counters.rejected_same_orbit = c.at("rejected_same_orbit").get<std::uint64_t>();
      e.counters.orbit_capped = c.at("orbit_capped").get<std::uint64_t>();
      if (je.contains("wall_ms")) e.wall_ms = je["wall_ms"].get<std::uint64_t>();
      r.classes.push_back(std::move(e));
    }
    r.not_type_d = j.at("not_type_d").get<std::vector<std::string>>();
    r.unknown = j.at("unknown").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report json: ") + e.what());
  }
  return r;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "group " << r.group << "  order " << r.group_order << "  degree " << r.degree
      << "\n";
  if (r.derived_order) out << "derived subgroup order " << *r.derived_order << "\n";
  for (const auto& e : r.classes) {
    out << "class " << e.label << "  order " << e.element_order << "  size "
        << e.class_size;
    if (e.outer) out << (*e.outer ? "  outer" : "  inner");
    out << "  verdict " << e.verdict << "  method " << e.method;
    if (e.witness) out << "  witness r=" << e.witness->r << " s=" << e.witness->s;
    out << "\n";
  }
  out << r.group << " : ";
  if (r.not_type_d.empty()) {
    out << "none";
  } else {
    for (std::size_t i = 0; i < r.not_type_d.size(); ++i)
      out << (i ? " " : "") << r.not_type_d[i];
  }
  out << "\n";
  if (!r.unknown.empty()) {
    out << "unknown :";
    for (const auto& u : r.unknown) out << " " << u;
    out << "\n";
  }
  return out.str();
}

}  // namespace rackcheck
