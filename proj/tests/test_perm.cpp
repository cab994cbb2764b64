#include <doctest.h>

#include "rackcheck/perm.hpp"

using rackcheck::DegreeMismatchError;
using rackcheck::Perm;
using rackcheck::ValidationError;

TEST_SUITE_BEGIN("perm");

TEST_CASE("cycle parsing round-trips through printing") {
  for (const char* s : {"(1,2,3)(4,5)", "(1,2)", "(2,4,6)", "(1,5)(2,4)"}) {
    Perm p = Perm::parse(s, 6);
    CHECK(p.str() == s);
  }
  CHECK(Perm::parse("()", 4).is_identity());
  CHECK(Perm::identity(4).str() == "()");
  // whitespace and space-separated points are tolerated
  CHECK(Perm::parse(" (1, 2, 3) ( 4 5 ) ", 5) == Perm::parse("(1,2,3)(4,5)", 5));
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(Perm::parse("(0,1)", 4), ValidationError);
  CHECK_THROWS_AS(Perm::parse("(1,5)", 4), ValidationError);
  CHECK_THROWS_AS(Perm::parse("(1,2)(2,3)", 4), ValidationError);  // 2 repeats
  CHECK_THROWS_AS(Perm::parse("(1,2", 4), ValidationError);
  CHECK_THROWS_AS(Perm::parse("1,2", 4), ValidationError);
  CHECK_THROWS_AS(Perm::parse("", 4), ValidationError);
  CHECK_THROWS_AS(Perm::parse("(3)", 4), ValidationError);  // singleton cycle
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Perm::from_images({0, 3}), ValidationError);
}

TEST_CASE("composition applies the left factor first") {
  Perm a = Perm::parse("(1,2)", 3);
  Perm b = Perm::parse("(2,3)", 3);
  CHECK((a * b).str() == "(1,3,2)");  // 1 -a-> 2 -b-> 3
  CHECK((b * a).str() == "(1,2,3)");
  CHECK((a * a).is_identity());
}

TEST_CASE("inverse and order") {
  Perm p = Perm::parse("(1,2,3)(4,5)", 6);
  CHECK(p.order() == 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.inverse().str() == "(1,3,2)(4,5)");
  CHECK(Perm::identity(5).order() == 1);
  CHECK(Perm::parse("(1,2,3,4,5,6,7)", 9).order() == 7);
}

TEST_CASE("conjugation matches g^-1 * x * g") {
  Perm x = Perm::parse("(1,2,3)", 5);
  Perm g = Perm::parse("(3,4,5)", 5);
  CHECK(Perm::conj(x, g) == g.inverse() * x * g);
  // conjugation relabels points: (1,2,3)^(3,4,5) = (1,2,4)
  CHECK(Perm::conj(x, g).str() == "(1,2,4)");
  // order is a conjugation invariant
  CHECK(Perm::conj(x, g).order() == x.order());
}

TEST_CASE("degree mismatches are rejected") {
  Perm a = Perm::identity(3), b = Perm::identity(4);
  CHECK_THROWS_AS((void)(a * b), DegreeMismatchError);
  CHECK_THROWS_AS((void)Perm::conj(a, b), DegreeMismatchError);
}

TEST_CASE("ordering is lexicographic on images") {
  Perm id = Perm::identity(3);
  Perm t = Perm::parse("(1,2)", 3);
  CHECK(id < t);
  CHECK(!(t < t));
  CHECK(t == Perm::parse("(2,1)", 3));
  CHECK(t.hash() == Perm::parse("(2,1)", 3).hash());
}

TEST_SUITE_END();
