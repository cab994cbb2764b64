// End-to-end tests that spawn the installed binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kBin = RACKCHECK_BIN;

fs::path temp_file(const std::string& stem) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("rackcheck_cli_" + std::to_string(::getpid()) + "_" + stem + "_" +
          std::to_string(counter++) + ".txt");
}

int run(const std::string& args) {
  int st = std::system(("'" + kBin + "' " + args + " 2>/dev/null").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& stem) : path(temp_file(stem)) {}
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("version and usage errors") {
  TempFile out("version");
  int st = std::system(("'" + kBin + "' --version > '" + out.path.string() + "'").c_str());
  CHECK(WEXITSTATUS(st) == 0);
  CHECK(slurp(out.path).find("rackcheck 0.1.0") != std::string::npos);

  CHECK(run("") == 1);                                  // subcommand required
  CHECK(run("classify") == 1);                          // group required
  CHECK(run("classify 'Sym(3)' --strategy sideways") == 1);
  CHECK(run("classify Monster") == 1);                  // unknown group
  CHECK(run("twisted 'Sym(3)'") == 1);                  // conjugator required
}

TEST_CASE("classify a tiny group as text") {
  TempFile out("s3");
  CHECK(run("classify 'Sym(3)' --format text --out '" + out.path.string() + "'") == 0);
  std::string text = slurp(out.path);
  CHECK(text.find("group Sym(3)  order 6  degree 3\n") == 0);
  CHECK(ends_with(text, "Sym(3) : 2A 3A\n"));
}

TEST_CASE("timings are opt-in") {
  TempFile plain("plain"), timed("timed");
  CHECK(run("classify 'Sym(3)' --out '" + plain.path.string() + "'") == 0);
  CHECK(run("classify 'Sym(3)' --timings --out '" + timed.path.string() + "'") == 0);
  json a = json::parse(slurp(plain.path));
  json b = json::parse(slurp(timed.path));
  CHECK(!a["classes"][0].contains("wall_ms"));
  CHECK(b["classes"][0].contains("wall_ms"));
}

TEST_CASE("classification of the smallest sporadic group") {
  TempFile j1("m11a"), j2("m11b"), j3("m11seed"), t("m11text");
  CHECK(run("classify M11 --out '" + j1.path.string() + "'") == 0);
  CHECK(run("classify M11 --out '" + j2.path.string() + "'") == 0);
  CHECK(run("classify M11 --seed 5 --out '" + j3.path.string() + "'") == 0);
  CHECK(run("classify M11 --format text --out '" + t.path.string() + "'") == 0);

  std::string first = slurp(j1.path);
  CHECK(first == slurp(j2.path));  // byte-identical rerun

  json rep = json::parse(first);
  CHECK(rep["group_order"] == "7920");
  CHECK(rep["not_type_d"] == json({"8A", "8B", "11A", "11B"}));
  CHECK(rep["unknown"].empty());
  CHECK(rep["classes"].size() == 10);

  // a different seed changes enumeration randomness but not the result
  json seeded = json::parse(slurp(j3.path));
  CHECK(rep["classes"] == seeded["classes"]);
  CHECK(ends_with(slurp(t.path), "M11 : 8A 8B 11A 11B\n"));

  // a different worker count changes only its own echo field
  TempFile j4("m11w3");
  CHECK(run("classify M11 --workers 3 --out '" + j4.path.string() + "'") == 0);
  json threaded = json::parse(slurp(j4.path));
  CHECK(threaded["workers"] == 3);
  json a = rep, b = threaded;
  a.erase("workers");
  b.erase("workers");
  CHECK(a == b);
}

TEST_CASE("outer-only classification") {
  TempFile out("s5outer");
  CHECK(run("classify 'Sym(5)' --outer-only --out '" + out.path.string() + "'") == 0);
  json rep = json::parse(slurp(out.path));
  CHECK(rep["outer_only"] == true);
  CHECK(rep["derived_order"] == "60");
  REQUIRE(rep["classes"].size() == 3);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : rep["classes"]) {
    CHECK(c["outer"] == true);
    sizes.insert(c["size"].get<std::uint64_t>());
  }
  CHECK(sizes == std::multiset<std::uint64_t>{10, 20, 30});
  CHECK(run("classify 'Alt(5)' --outer-only") == 1);  // derived subgroup index is 1
}

TEST_CASE("sampling strategy cannot settle a class and exits 2") {
  TempFile out("rand");
  CHECK(run("classify 'Metacyclic(29,14,4)' --strategy random --budget-pairs 5 --out '" +
            out.path.string() + "'") == 2);
  json rep = json::parse(slurp(out.path));
  CHECK(!rep["unknown"].empty());
}

TEST_CASE("named groups can come from a user data file") {
  TempFile dat("dat"), out("k4");
  {
    std::ofstream f(dat.path);
    f << "name K4\ndegree 4\norder 4\ngen (1,2)(3,4)\ngen (1,3)(2,4)\n";
  }
  CHECK(run("classify K4 --data '" + dat.path.string() + "' --format text --out '" +
            out.path.string() + "'") == 0);
  CHECK(ends_with(slurp(out.path), "K4 : 2A 2B 2C\n"));
  CHECK(run("classify K4 --data /nonexistent.dat") == 1);
}

TEST_CASE("twisted classes of Alt(5) under an odd conjugator") {
  TempFile out("tw");
  CHECK(run("twisted 'Alt(5)' --conjugator '(1,2)' --out '" + out.path.string() + "'") == 0);
  json rep = json::parse(slurp(out.path));
  CHECK(rep["mode"] == "twisted");
  CHECK(rep["aut_order"] == 2);
  CHECK(rep["outer"] == true);
  CHECK(rep["base"] == "()");
  CHECK(rep["orbit_size"] == 10);
  CHECK(rep["rack"]["quandle"] == true);
  CHECK(rep["rack"]["size"] == 10);
  CHECK(rep["correspondence"]["matched"] == true);
  CHECK(rep["correspondence"]["twisted_orbit_size"] ==
        rep["correspondence"]["extension_class_size"]);
  CHECK(rep["verdict"] == "NotTypeD");

  TempFile text("twtext");
  CHECK(run("twisted 'Alt(5)' --conjugator '(1,2)' --format text --out '" +
            text.path.string() + "'") == 0);
  CHECK(ends_with(slurp(text.path), "Alt(5) twisted : NotTypeD\n"));
}

TEST_CASE("an identity conjugator reduces to plain conjugacy") {
  TempFile tw("twid"), cl("s5plain");
  CHECK(run("twisted 'Sym(5)' --conjugator '()' --rep '(4,5)' --out '" +
            tw.path.string() + "'") == 0);
  CHECK(run("classify 'Sym(5)' --out '" + cl.path.string() + "'") == 0);
  json twisted = json::parse(slurp(tw.path));
  CHECK(twisted["aut_order"] == 1);
  CHECK(twisted["outer"] == false);
  CHECK(twisted["correspondence"]["matched"] == true);
  json classified = json::parse(slurp(cl.path));
  for (const auto& c : classified["classes"])
    if (c["label"] == "2A") {
      CHECK(twisted["orbit_size"] == c["size"]);
      CHECK(twisted["verdict"] == c["verdict"]);
      CHECK(twisted["product_order_spectrum"] == c["product_order_spectrum"]);
    }
}

TEST_CASE("a twisted class matches the class of its shifted representative") {
  TempFile tw("tw5"), cl("s5");
  CHECK(run("twisted 'Alt(5)' --conjugator '(1,2)' --rep '(1,2,3,4,5)' --out '" +
            tw.path.string() + "'") == 0);
  CHECK(run("classify 'Sym(5)' --out '" + cl.path.string() + "'") == 0);
  json twisted = json::parse(slurp(tw.path));
  json classified = json::parse(slurp(cl.path));
  // (1,2,3,4,5)*(1,2) is a 4-cycle, so the orbit mirrors class 4A of Sym(5)
  CHECK(twisted["orbit_size"] == 30);
  bool found = false;
  for (const auto& c : classified["classes"])
    if (c["label"] == "4A") {
      CHECK(twisted["verdict"] == c["verdict"]);
      CHECK(twisted["orbit_size"] == c["size"]);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("twisted rejects a conjugator that does not normalize") {
  CHECK(run("twisted 'Cyc(4)' --conjugator '(1,2)'") == 1);
}

TEST_SUITE_END();
