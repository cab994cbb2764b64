#include <doctest.h>

#include "rackcheck/report.hpp"

using namespace rackcheck;

namespace {

ClassificationReport sample_report() {
  ClassificationReport r;
  r.group = "Sym(3)";
  r.group_order = "6";
  r.degree = 3;
  r.strategy = "auto";
  r.seed = 1;
  r.budget_pairs = 100000;
  r.orbit_cap = 200000;
  r.workers = 1;

  ClassReportEntry a;
  a.label = "1A";
  a.element_order = 1;
  a.class_size = 1;
  a.centralizer_order = "6";
  a.verdict = "NotTypeD";
  a.method = "singleton";
  r.classes.push_back(a);

  ClassReportEntry b;
  b.label = "2A";
  b.element_order = 2;
  b.class_size = 3;
  b.centralizer_order = "2";
  b.verdict = "NotTypeD";
  b.method = "involution-spectrum";
  b.spectrum = {{1, 1}, {3, 2}};
  b.counters.pairs_scanned = 3;
  r.classes.push_back(b);

  ClassReportEntry c;
  c.label = "3A";
  c.element_order = 3;
  c.class_size = 2;
  c.centralizer_order = "3";
  c.verdict = "NotTypeD";
  c.method = "exhaustive-scan";
  c.counters.pairs_scanned = 2;
  c.counters.rejected_commuting = 2;
  r.classes.push_back(c);

  r.not_type_d = {"1A", "2A", "3A"};
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("text rendering") {
  std::string text = to_text(sample_report());
  CHECK(text.find("group Sym(3)  order 6  degree 3\n") == 0);
  CHECK(text.find("class 2A  order 2  size 3  verdict NotTypeD  method "
                  "involution-spectrum\n") != std::string::npos);
  // closing summary line lists the classes that are not type D
  CHECK(text.rfind("Sym(3) : 1A 2A 3A\n") == text.size() - 18);
  CHECK(text.find("unknown") == std::string::npos);

  ClassificationReport clean = sample_report();
  clean.not_type_d.clear();
  CHECK(to_text(clean).rfind("Sym(3) : none\n") != std::string::npos);

  ClassificationReport undecided = sample_report();
  undecided.unknown = {"3A"};
  std::string t = to_text(undecided);
  CHECK(t.rfind("unknown : 3A\n") == t.size() - 13);
  CHECK(undecided.any_unknown());
  CHECK(!sample_report().any_unknown());
}

TEST_CASE("witness and outer markers in text") {
  ClassificationReport r = sample_report();
  r.classes[1].outer = true;
  r.classes[2].outer = false;
  r.classes[1].witness = WitnessReport{"(1,2)", "(1,3)", 3, 3};
  std::string text = to_text(r);
  CHECK(text.find("class 2A  order 2  size 3  outer  verdict") != std::string::npos);
  CHECK(text.find("class 3A  order 3  size 2  inner  verdict") != std::string::npos);
  CHECK(text.find("witness r=(1,2) s=(1,3)") != std::string::npos);
}

TEST_CASE("json round trip is byte-identical") {
  ClassificationReport r = sample_report();
  r.classes[1].witness = WitnessReport{"(1,2)", "(1,3)", 3, 3};
  r.derived_order = "3";
  r.outer_only = true;
  std::string first = to_json(r).dump(2);
  ClassificationReport back = classification_report_from_json(nlohmann::json::parse(first));
  std::string second = to_json(back).dump(2);
  CHECK(first == second);
}

TEST_CASE("json key order is fixed") {
  std::string dump = to_json(sample_report()).dump();
  CHECK(dump.find("\"tool\"") < dump.find("\"version\""));
  CHECK(dump.find("\"version\"") < dump.find("\"mode\""));
  CHECK(dump.find("\"group\"") < dump.find("\"group_order\""));
  CHECK(dump.find("\"classes\"") < dump.find("\"not_type_d\""));
  CHECK(dump.find("\"not_type_d\"") < dump.find("\"unknown\""));
  // group order is a decimal string, safe far beyond 2^64
  CHECK(dump.find("\"group_order\":\"6\"") != std::string::npos);
}

TEST_CASE("malformed json is rejected with context") {
  nlohmann::json j = to_json(sample_report());
  j.erase("group_order");
  try {
    (void)classification_report_from_json(j);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("malformed report json") != std::string::npos);
  }
  nlohmann::json bad = to_json(sample_report());
  bad["classes"][0]["element_order"] = "not a number";
  CHECK_THROWS_AS((void)classification_report_from_json(bad), ValidationError);
}

TEST_SUITE_END();
