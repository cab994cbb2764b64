#include <doctest.h>

#include <unordered_set>

#include "rackcheck/catalog.hpp"
#include "rackcheck/perm_group.hpp"

using namespace rackcheck;

namespace {

// Independent order oracle: plain closure of the generated set under
// multiplication, no stabilizer chains involved.
std::size_t bfs_order(const PermGroup& g) {
  std::unordered_set<Perm, PermHash> seen{Perm::identity(g.degree())};
  std::vector<Perm> queue{Perm::identity(g.degree())};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& x : g.generators()) {
      Perm y = queue[i] * x;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  return queue.size();
}

}  // namespace

TEST_SUITE_BEGIN("perm_group");

TEST_CASE("chain order matches plain closure enumeration") {
  CHECK(symmetric_group(4).order() == bfs_order(symmetric_group(4)));
  CHECK(alternating_group(5).order() == bfs_order(alternating_group(5)));
  CHECK(dihedral_group(6).order() == bfs_order(dihedral_group(6)));
  CHECK(cyclic_group(7).order() == bfs_order(cyclic_group(7)));
  CHECK(metacyclic_group(7, 3, 2).order() == bfs_order(metacyclic_group(7, 3, 2)));
  CHECK(load_group("PSL(2,7)").order() == bfs_order(load_group("PSL(2,7)")));
  PermGroup m11 = load_group("M11");
  CHECK(m11.order() == 7920);
  CHECK(bfs_order(m11) == 7920);
}

TEST_CASE("known orders of parametric families") {
  CHECK(symmetric_group(7).order() == 5040);
  CHECK(alternating_group(7).order() == 2520);
  CHECK(dihedral_group(12).order() == 24);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(symmetric_group(1).order() == 1);
}

TEST_CASE("membership by sifting") {
  PermGroup s4 = symmetric_group(4);
  CHECK(s4.contains(Perm::parse("(1,2)", 4)));
  CHECK(s4.contains(Perm::parse("(1,2,3,4)", 4)));
  PermGroup a4 = alternating_group(4);
  CHECK(!a4.contains(Perm::parse("(1,2)", 4)));
  CHECK(a4.contains(Perm::parse("(1,2)(3,4)", 4)));
  CHECK(a4.contains(Perm::parse("(1,2,3)", 4)));
  CHECK_THROWS_AS((void)a4.contains(Perm::identity(5)), DegreeMismatchError);
}

TEST_CASE("trivial group") {
  PermGroup t(5, {});
  CHECK(t.order() == 1);
  CHECK(t.is_trivial());
  CHECK(t.contains(Perm::identity(5)));
  CHECK(!t.contains(Perm::parse("(1,2)", 5)));
}

TEST_CASE("generators are kept verbatim") {
  std::vector<Perm> gens{Perm::parse("(1,2)", 4), Perm::identity(4),
                         Perm::parse("(1,2)", 4)};
  PermGroup g(4, gens);
  CHECK(g.generators().size() == 3);
  CHECK(g.order() == 2);
}

TEST_CASE("random elements are members and cover a tiny group uniformly-ish") {
  PermGroup m11 = load_group("M11");
  RandomElements rnd(m11, 42);
  for (int i = 0; i < 200; ++i) CHECK(m11.contains(rnd.next()));

  PermGroup z2 = cyclic_group(2);
  RandomElements flip(z2, 7);
  int identity_count = 0;
  for (int i = 0; i < 10'000; ++i)
    if (flip.next().is_identity()) ++identity_count;
  CHECK(identity_count > 4000);
  CHECK(identity_count < 6000);
}

TEST_CASE("random element stream is seed-deterministic") {
  PermGroup g = load_group("PSL(2,11)");
  RandomElements a(g, 99), b(g, 99), c(g, 100);
  bool diverged = false;
  for (int i = 0; i < 50; ++i) {
    Perm x = a.next();
    CHECK(x == b.next());
    if (!(x == c.next())) diverged = true;
  }
  CHECK(diverged);
}

TEST_CASE("derived subgroups of small classics") {
  CHECK(symmetric_group(4).derived_subgroup().order() == 12);
  CHECK(symmetric_group(5).derived_subgroup().order() == 60);
  CHECK(alternating_group(4).derived_subgroup().order() == 4);
  CHECK(cyclic_group(6).derived_subgroup().order() == 1);
  CHECK(dihedral_group(6).derived_subgroup().order() == 3);
  CHECK(metacyclic_group(29, 14, 4).derived_subgroup().order() == 29);
  // derived subgroup of Sym(4) is Alt(4), not just any order-12 subgroup
  PermGroup d = symmetric_group(4).derived_subgroup();
  CHECK(d.contains(Perm::parse("(1,2,3)", 4)));
  CHECK(!d.contains(Perm::parse("(1,2)", 4)));
}

TEST_CASE("derived subgroup is normal") {
  for (const auto& g : {symmetric_group(5), dihedral_group(8), load_group("PSL(2,7)")}) {
    PermGroup d = g.derived_subgroup();
    for (const Perm& k : d.generators())
      for (const Perm& x : g.generators()) CHECK(d.contains(Perm::conj(k, x)));
  }
}

TEST_SUITE_END();
