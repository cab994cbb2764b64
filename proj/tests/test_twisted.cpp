#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "rackcheck/catalog.hpp"
#include "rackcheck/twisted.hpp"

using namespace rackcheck;

TEST_SUITE_BEGIN("twisted");

TEST_CASE("automorphism basics") {
  PermGroup a5 = alternating_group(5);
  Automorphism u = conjugation_automorphism(a5, Perm::parse("(1,2)", 5));
  CHECK(u.aut_order() == 2);
  CHECK(u.is_outer());
  // conjugating by (1,2) relabels the two points
  CHECK(u.apply(Perm::parse("(1,2,3)", 5)) == Perm::parse("(1,3,2)", 5));
  CHECK(u.apply(Perm::parse("(1,3,5)", 5)) == Perm::parse("(2,3,5)", 5));
  CHECK(u.apply_inverse(u.apply(Perm::parse("(1,3,5)", 5))) == Perm::parse("(1,3,5)", 5));

  Automorphism inner = conjugation_automorphism(symmetric_group(4), Perm::parse("(1,2)", 4));
  CHECK(!inner.is_outer());
  CHECK(inner.aut_order() == 2);

  Automorphism trivial = conjugation_automorphism(symmetric_group(4), Perm::identity(4));
  CHECK(trivial.aut_order() == 1);
  CHECK(!trivial.is_outer());
}

TEST_CASE("conjugator must normalize the group") {
  PermGroup z3(4, {Perm::parse("(1,2,3)", 4)});
  try {
    (void)conjugation_automorphism(z3, Perm::parse("(3,4)", 4));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("(1,2,4)") != std::string::npos);  // offending image
    CHECK(msg.find("(1,2,3)") != std::string::npos);  // of this generator
  }
}

TEST_CASE("conjugator must lie in the stated ambient group") {
  PermGroup a5 = alternating_group(5);
  CHECK_THROWS_AS((void)conjugation_automorphism(a5, alternating_group(5),
                                                 Perm::parse("(1,2)", 5)),
                  ValidationError);
  CHECK_NOTHROW((void)conjugation_automorphism(a5, symmetric_group(5),
                                               Perm::parse("(1,2)", 5)));
}

TEST_CASE("twisted orbits of Alt(5) under a transposition") {
  PermGroup a5 = alternating_group(5);
  Automorphism u = conjugation_automorphism(a5, Perm::parse("(1,2)", 5));

  TwistedClass id_cls = twisted_class(a5, u, Perm::identity(5));
  CHECK(id_cls.orbit.size() == 10);
  REQUIRE(id_cls.rack.has_value());
  CHECK(id_cls.rack->is_quandle());
  CHECK(id_cls.rack->size() == 10);

  // Orbits partition the group; sizes come out as 10, 20, 30.
  std::set<Perm> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& cls : conjugacy_classes(a5))
    for (const Perm& x : cls.elements)
      if (!seen.count(x)) {
        TwistedClass tc = twisted_class(a5, u, x);
        sizes.insert(tc.orbit.size());
        for (const Perm& y : tc.orbit) CHECK(seen.insert(y).second);
      }
  CHECK(seen.size() == 60);
  CHECK(sizes == std::multiset<std::size_t>{10, 20, 30});
}

TEST_CASE("twisting by an inner automorphism shifts ordinary classes") {
  PermGroup s4 = symmetric_group(4);
  Perm w = Perm::parse("(1,2)", 4);
  Automorphism u = conjugation_automorphism(s4, w);

  // orbit of x is (class of x*w) * w^-1
  TwistedClass fixed = twisted_class(s4, u, w);
  CHECK(fixed.orbit.size() == 1);  // w*w = identity, its class is a singleton
  TwistedClass of_id = twisted_class(s4, u, Perm::identity(4));
  CHECK(of_id.orbit.size() == 6);  // transpositions, shifted
  for (const Perm& y : of_id.orbit) CHECK((y * w).order() <= 2);
}

TEST_CASE("twisted orbit must start inside the group") {
  PermGroup a5 = alternating_group(5);
  Automorphism u = conjugation_automorphism(a5, Perm::parse("(1,2)", 5));
  CHECK_THROWS_AS((void)twisted_class(a5, u, Perm::parse("(1,2)", 5)), ValidationError);
}

TEST_CASE("table cap suppresses rack materialization") {
  PermGroup a5 = alternating_group(5);
  Automorphism u = conjugation_automorphism(a5, Perm::parse("(1,2)", 5));
  TwistedClass tc = twisted_class(a5, u, Perm::identity(5), 4);
  CHECK(tc.orbit.size() == 10);
  CHECK(!tc.rack.has_value());
}

TEST_CASE("extension group arithmetic") {
  PermGroup a4 = alternating_group(4);
  Automorphism u = conjugation_automorphism(a4, Perm::parse("(1,2)", 4));
  SemidirectGroup sd(a4, u);
  CHECK(sd.twist_order() == 2);
  CHECK(sd.order() == 24);
  REQUIRE(sd.generators().size() == a4.generators().size() + 1);

  SemidirectOps ops{&sd};
  // associativity and inverses over all generator triples
  for (const SDElem& a : sd.generators())
    for (const SDElem& b : sd.generators())
      for (const SDElem& c : sd.generators()) {
        CHECK(ops.eq(sd.mul(sd.mul(a, b), c), sd.mul(a, sd.mul(b, c))));
        CHECK(ops.eq(sd.mul(a, sd.inv(a)), sd.identity()));
        CHECK(sd.contains(sd.mul(a, b)));
      }
  CHECK(ops.order(SDElem{Perm::parse("(1,2,3)", 4), 0}) == 3);
  CHECK(ops.order(SDElem{Perm::identity(4), 1}) == 2);
  CHECK(ops.str(SDElem{Perm::identity(4), 1}).find(", 1]") != std::string::npos);
}

TEST_CASE("Alt(4) extended by a transposition has the classes of Sym(4)") {
  PermGroup a4 = alternating_group(4);
  Automorphism u = conjugation_automorphism(a4, Perm::parse("(1,2)", 4));
  SemidirectGroup sd(a4, u);
  SemidirectOps ops{&sd};
  std::vector<SDElem> gens = sd.generators();
  auto cls = enumerate_classes(ops, gens, sd.order(), 1000, 5);
  std::multiset<std::size_t> sizes;
  for (const auto& c : cls) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("twisted orbits match extension classes") {
  PermGroup a5 = alternating_group(5);
  Automorphism u = conjugation_automorphism(a5, Perm::parse("(1,2)", 5));
  for (const char* rep : {"()", "(1,2,3)", "(1,2,3,4,5)", "(1,2)(3,4)"}) {
    CorrespondenceCheck cc = verify_class_correspondence(a5, u, Perm::parse(rep, 5));
    CHECK(cc.matched);
    CHECK(cc.twisted_orbit_size == cc.extension_class_size);
  }
  // inner case too
  PermGroup s4 = symmetric_group(4);
  Automorphism v = conjugation_automorphism(s4, Perm::parse("(1,2)", 4));
  CHECK(verify_class_correspondence(s4, v, Perm::parse("(1,3)", 4)).matched);
}

TEST_CASE("outer class split of an almost-simple-shaped group") {
  OuterSplit split = outer_classes(symmetric_group(5));
  CHECK(split.derived.order() == 60);
  CHECK(split.classes.size() == 7);
  REQUIRE(split.outer.size() == 3);
  std::multiset<std::size_t> sizes;
  for (std::size_t i : split.outer) {
    sizes.insert(split.classes[i].size());
    CHECK(!split.derived.contains(split.classes[i].representative));
  }
  CHECK(sizes == std::multiset<std::size_t>{10, 20, 30});

  CHECK_THROWS_AS((void)outer_classes(alternating_group(5)), ValidationError);  // index 1
  CHECK_THROWS_AS((void)outer_classes(alternating_group(4)), ValidationError);  // index 3
}

TEST_SUITE_END();
