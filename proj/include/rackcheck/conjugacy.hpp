// Conjugacy-class enumeration: random representative discovery plus full
// orbit expansion, terminating exactly when the class equation balances.
// Output is canonically ordered and labeled ("2A", "8B", ...) independent of
// the seed: classes sort by element order, then class size, then least
// element, and each class stores its sorted element list.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "rackcheck/element_ops.hpp"
#include "rackcheck/perm_group.hpp"

namespace rackcheck {

template <class Ops>
struct GenericClass {
  using Elem = typename Ops::Elem;
  Elem representative;        // least element of the class
  std::vector<Elem> elements; // sorted ascending
  std::uint64_t element_order = 1;

  std::size_t size() const { return elements.size(); }

  bool contains(const Ops& ops, const Elem& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e,
                               [&](const Elem& a, const Elem& b) { return ops.less(a, b); });
    return it != elements.end() && ops.eq(*it, e);
  }
};

template <class Ops>
std::vector<GenericClass<Ops>> enumerate_classes(
    const Ops& ops, const std::vector<typename Ops::Elem>& gens,
    const BigInt& group_order, std::size_t class_cap, std::uint64_t seed) {
  using E = typename Ops::Elem;
  std::vector<GenericClass<Ops>> classes;
  auto covered_by_existing = [&](const E& e) {
    for (const auto& c : classes)
      if (c.contains(ops, e)) return true;
    return false;
  };
  auto add_class_of = [&](const E& e) {
    auto orbit = conj_orbit(ops, e, gens, class_cap);
    if (!orbit.complete)
      throw CapExceededError("conjugacy class of " + ops.str(e) + " exceeds cap " +
                             std::to_string(class_cap));
    std::sort(orbit.elements.begin(), orbit.elements.end(),
              [&](const E& a, const E& b) { return ops.less(a, b); });
    GenericClass<Ops> c;
    c.representative = orbit.elements.front();
    c.element_order = ops.order(c.representative);
    c.elements = std::move(orbit.elements);
    classes.push_back(std::move(c));
  };

  add_class_of(ops.identity());
  BigInt covered = 1;
  GenericRandom<Ops> rnd(ops, gens, seed);
  std::uint64_t stalled = 0;
  while (covered < group_order) {
    E e = rnd.next();
    if (covered_by_existing(e)) {
      if (++stalled > 20'000'000)
        throw Error("class search stalled; group order may be wrong");
      continue;
    }
    stalled = 0;
    add_class_of(e);
    covered += static_cast<std::uint64_t>(classes.back().size());
    if (covered > group_order)
      throw Error("class sizes exceed the stated group order");
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size() != b.size()) return a.size() < b.size();
    return ops.less(a.representative, b.representative);
  });
  return classes;
}

// A labeled conjugacy class of a permutation group.
struct ConjugacyClass {
  Perm representative;
  std::vector<Perm> elements;  // sorted ascending
  std::uint64_t element_order = 1;
  std::string label;           // e.g. "8A"
  BigInt centralizer_order;

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    return it != elements.end() && *it == p;
  }
};

// All conjugacy classes of G, canonically ordered and labeled.  Throws
// CapExceededError if some class is larger than `class_cap`.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              std::size_t class_cap = 2'000'000,
                                              std::uint64_t seed = 1);

// Spreadsheet-style suffix: 0 -> "A", 25 -> "Z", 26 -> "AA".
std::string class_letter(std::size_t index);

}  // namespace rackcheck
