// Twisted conjugacy: for an automorphism u of G given by an ambient
// conjugator, the orbits of the action y : x -> y * x * u(y^-1), the rack
// structure y ▷ z = y * u(z * y^-1) on each orbit, the extension G ⋊ ⟨u⟩,
// and the check that the orbit of x matches the plain conjugacy class of
// (x, u) in the extension.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "rackcheck/conjugacy.hpp"
#include "rackcheck/element_ops.hpp"
#include "rackcheck/perm_group.hpp"
#include "rackcheck/rack.hpp"

namespace rackcheck {

// u(x) = w x w^-1 for a fixed ambient permutation w normalizing G.
class Automorphism {
 public:
  const Perm& conjugator() const { return w_; }
  // Order of u as an automorphism of G (divides the order of w).
  std::uint64_t aut_order() const { return aut_order_; }
  bool is_outer() const { return outer_; }

  Perm apply(const Perm& x) const { return w_ * x * w_inv_; }
  Perm apply_inverse(const Perm& x) const { return w_inv_ * x * w_; }

  friend Automorphism conjugation_automorphism(const PermGroup&, const Perm&);
  friend Automorphism conjugation_automorphism(const PermGroup&, const PermGroup&,
                                               const Perm&);

 private:
  Perm w_, w_inv_;
  std::uint64_t aut_order_ = 1;
  bool outer_ = false;
};

// Validates that w normalizes G (each generator's image must sift back into
// G); the two-argument form skips the ambient-membership test, treating the
// full symmetric group on G's points as the ambient group.
Automorphism conjugation_automorphism(const PermGroup& g, const Perm& w);
Automorphism conjugation_automorphism(const PermGroup& g, const PermGroup& ambient,
                                      const Perm& w);

struct TwistedClass {
  Perm base;                       // starting element
  std::vector<Perm> orbit;         // sorted
  std::optional<FiniteRack> rack;  // materialized when |orbit| <= table_cap
};

// Orbit of x under the twisted action, with the rack table on it.  The orbit
// is closed under the twisted rack operation, so the table is total.
TwistedClass twisted_class(const PermGroup& g, const Automorphism& u, const Perm& x,
                           std::size_t table_cap = 4096);

struct SDElem {
  Perm g;
  std::uint32_t t = 0;

  friend bool operator==(const SDElem&, const SDElem&) = default;
  friend std::strong_ordering operator<=>(const SDElem& a, const SDElem& b) {
    if (a.t != b.t) return a.t <=> b.t;
    return a.g <=> b.g;
  }
};

// G ⋊ ⟨u⟩ with cyclic top of order aut_order: elements (g, t) with
// (g, a)(h, b) = (g * u^a(h), a + b mod k).  (x, 1) conjugated by (y, 0)
// gives (y * x * u(y^-1), 1), matching the twisted action.
class SemidirectGroup {
 public:
  SemidirectGroup(PermGroup g, const Automorphism& u);

  const PermGroup& bottom() const { return g_; }
  std::uint32_t twist_order() const { return k_; }
  const BigInt& order() const { return order_; }
  std::size_t degree() const { return g_.degree(); }
  const std::vector<SDElem>& generators() const { return gens_; }

  SDElem identity() const { return {Perm::identity(g_.degree()), 0}; }
  SDElem mul(const SDElem& a, const SDElem& b) const;
  SDElem inv(const SDElem& a) const;
  bool contains(const SDElem& e) const { return e.t < k_ && g_.contains(e.g); }

  // u^t(x) and u^-t(x) via stored conjugator powers.
  Perm twist(std::uint32_t t, const Perm& x) const;
  Perm untwist(std::uint32_t t, const Perm& x) const;

 private:
  PermGroup g_;
  std::vector<Perm> wpow_, wpow_inv_;  // w^t and w^-t for t in 0..k-1
  std::uint32_t k_ = 1;
  BigInt order_;
  std::vector<SDElem> gens_;
};

struct SemidirectOps {
  using Elem = SDElem;
  const SemidirectGroup* sd = nullptr;

  SDElem identity() const { return sd->identity(); }
  SDElem mul(const SDElem& a, const SDElem& b) const { return sd->mul(a, b); }
  SDElem inv(const SDElem& a) const { return sd->inv(a); }
  SDElem conj(const SDElem& x, const SDElem& g) const {
    return sd->mul(sd->mul(sd->inv(g), x), g);
  }
  bool eq(const SDElem& a, const SDElem& b) const { return a == b; }
  bool less(const SDElem& a, const SDElem& b) const { return a < b; }
  std::size_t hash(const SDElem& a) const { return a.g.hash() * 1099511628211ull + a.t; }
  std::uint64_t order(const SDElem& a) const;
  std::string str(const SDElem& a) const;
};

struct CorrespondenceCheck {
  bool matched = false;
  std::size_t twisted_orbit_size = 0;
  std::size_t extension_class_size = 0;
};

// The twisted orbit of x must equal, elementwise, the set of g with (g, 1)
// in the conjugacy class of (x, 1) inside G ⋊ ⟨u⟩.
CorrespondenceCheck verify_class_correspondence(const PermGroup& g,
                                                const Automorphism& u, const Perm& x);

struct OuterSplit {
  PermGroup derived;                    // index-2 derived subgroup
  std::vector<ConjugacyClass> classes;  // all classes of the input group
  std::vector<std::size_t> outer;       // indices of classes outside `derived`
};

// For a group A with [A : A'] = 2, splits the classes of A into inner and
// outer; throws ValidationError when the derived subgroup has another index.
OuterSplit outer_classes(const PermGroup& a, std::size_t class_cap = 2'000'000,
                         std::uint64_t seed = 1);

}  // namespace rackcheck
