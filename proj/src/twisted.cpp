#include "rackcheck/twisted.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace rackcheck {

namespace {

Perm perm_pow(const Perm& p, std::uint64_t e) {
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

}  // namespace

Automorphism conjugation_automorphism(const PermGroup& g, const Perm& w) {
  if (w.degree() != g.degree())
    throw DegreeMismatchError("conjugator degree " + std::to_string(w.degree()) +
                              " vs group degree " + std::to_string(g.degree()));
  Automorphism u;
  u.w_ = w;
  u.w_inv_ = w.inverse();
  for (const Perm& x : g.generators()) {
    Perm img = u.apply(x);
    if (!g.contains(img))
      throw ValidationError("conjugator does not normalize the group: image " +
                            img.str() + " of generator " + x.str() +
                            " falls outside it");
  }
  // Smallest k >= 1 with w^k centralizing every generator; k divides the
  // order of w, so only divisors need testing.
  std::uint64_t wo = w.order();
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= wo; ++d)
    if (wo % d == 0) {
      divisors.push_back(d);
      if (d != wo / d) divisors.push_back(wo / d);
    }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t k : divisors) {
    Perm p = perm_pow(w, k);
    bool central = true;
    for (const Perm& x : g.generators())
      if (p * x != x * p) {
        central = false;
        break;
      }
    if (central) {
      u.aut_order_ = k;
      break;
    }
  }
  u.outer_ = !g.contains(w);
  return u;
}

Automorphism conjugation_automorphism(const PermGroup& g, const PermGroup& ambient,
                                      const Perm& w) {
  if (!ambient.contains(w))
    throw ValidationError("conjugator " + w.str() + " is not in the ambient group");
  for (const Perm& x : g.generators())
    if (!ambient.contains(x))
      throw ValidationError("group is not contained in the ambient group");
  return conjugation_automorphism(g, w);
}

TwistedClass twisted_class(const PermGroup& g, const Automorphism& u, const Perm& x,
                           std::size_t table_cap) {
  if (x.degree() != g.degree())
    throw DegreeMismatchError("twisted class seed has the wrong degree");
  if (!g.contains(x)) throw ValidationError("twisted class seed is not in the group");
  TwistedClass out;
  out.base = x;
  // Orbit under y : z -> y z u(y^-1) for generators y.  The orbit is finite
  // and each generator map is a bijection on it, so closing under the
  // generator maps alone suffices.
  std::unordered_set<Perm, PermHash> seen{x};
  out.orbit.push_back(x);
  for (std::size_t k = 0; k < out.orbit.size(); ++k) {
    for (const Perm& y : g.generators()) {
      Perm z = y * out.orbit[k] * u.apply(y.inverse());
      if (seen.insert(z).second) out.orbit.push_back(std::move(z));
    }
  }
  std::sort(out.orbit.begin(), out.orbit.end());

  std::size_t n = out.orbit.size();
  if (n <= table_cap && n <= 65535) {
    std::unordered_map<Perm, std::uint16_t, PermHash> index(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      index.emplace(out.orbit[i], static_cast<std::uint16_t>(i));
    std::vector<std::uint16_t> table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      const Perm& y = out.orbit[a];
      labels[a] = y.str();
      Perm y_inv = y.inverse();
      for (std::size_t b = 0; b < n; ++b) {
        // y ▷ z = y * u(z * y^-1)
        Perm img = y * u.apply(out.orbit[b] * y_inv);
        auto it = index.find(img);
        if (it == index.end())
          throw Error("twisted orbit is not closed under its rack operation");
        table[a * n + b] = it->second;
      }
    }
    auto check = n <= 512 ? FiniteRack::Check::Full : FiniteRack::Check::RowsOnly;
    out.rack = FiniteRack::from_table(std::move(table), std::move(labels), check);
  }
  return out;
}

SemidirectGroup::SemidirectGroup(PermGroup g, const Automorphism& u) : g_(std::move(g)) {
  if (u.conjugator().degree() != g_.degree())
    throw DegreeMismatchError("automorphism degree does not match the group");
  k_ = static_cast<std::uint32_t>(u.aut_order());
  wpow_.reserve(k_);
  wpow_inv_.reserve(k_);
  Perm p = Perm::identity(g_.degree());
  for (std::uint32_t t = 0; t < k_; ++t) {
    wpow_.push_back(p);
    wpow_inv_.push_back(p.inverse());
    p = p * u.conjugator();
  }
  order_ = g_.order() * static_cast<std::uint64_t>(k_);
  for (const Perm& x : g_.generators()) gens_.push_back({x, 0});
  // twist components live in Z_k; for k == 1 the twist generator is trivial
  gens_.push_back({Perm::identity(g_.degree()), 1 % k_});
}

Perm SemidirectGroup::twist(std::uint32_t t, const Perm& x) const {
  t %= k_;
  if (t == 0) return x;
  return wpow_[t] * x * wpow_inv_[t];
}

Perm SemidirectGroup::untwist(std::uint32_t t, const Perm& x) const {
  t %= k_;
  if (t == 0) return x;
  return wpow_inv_[t] * x * wpow_[t];
}

SDElem SemidirectGroup::mul(const SDElem& a, const SDElem& b) const {
  return {a.g * twist(a.t, b.g), (a.t + b.t) % k_};
}

SDElem SemidirectGroup::inv(const SDElem& a) const {
  std::uint32_t t = (k_ - a.t % k_) % k_;
  return {untwist(a.t, a.g.inverse()), t};
}

std::uint64_t SemidirectOps::order(const SDElem& a) const {
  SDElem x = a;
  SDElem e = identity();
  std::uint64_t n = 1;
  while (!(x == e)) {
    x = mul(x, a);
    if (++n > 100'000'000) throw Error("element order runaway");
  }
  return n;
}

std::string SemidirectOps::str(const SDElem& a) const {
  std::string s = "[" + a.g.str();
  s += ", " + std::to_string(a.t) + "]";
  return s;
}

CorrespondenceCheck verify_class_correspondence(const PermGroup& g,
                                                const Automorphism& u, const Perm& x) {
  CorrespondenceCheck out;
  TwistedClass tc = twisted_class(g, u, x, 0);  // orbit only
  SemidirectGroup sd(g, u);
  SemidirectOps ops{&sd};
  const std::uint32_t t1 = 1 % sd.twist_order();
  auto orbit = conj_orbit(ops, SDElem{x, t1}, sd.generators(),
                          std::numeric_limits<std::size_t>::max());
  out.twisted_orbit_size = tc.orbit.size();
  out.extension_class_size = orbit.elements.size();
  std::vector<Perm> slice;
  slice.reserve(orbit.elements.size());
  for (const SDElem& e : orbit.elements) {
    if (e.t != t1) return out;  // conjugation preserves the twist component
    slice.push_back(e.g);
  }
  std::sort(slice.begin(), slice.end());
  out.matched = slice == tc.orbit;
  return out;
}

OuterSplit outer_classes(const PermGroup& a, std::size_t class_cap, std::uint64_t seed) {
  OuterSplit out{a.derived_subgroup(), {}, {}};
  if (out.derived.order() * 2 != a.order())
    throw ValidationError("derived subgroup has index " +
                          (out.derived.order() == 0
                               ? std::string("?")
                               : BigInt(a.order() / out.derived.order()).str()) +
                          ", need exactly 2");
  out.classes = conjugacy_classes(a, class_cap, seed);
  for (std::size_t i = 0; i < out.classes.size(); ++i)
    if (!out.derived.contains(out.classes[i].representative)) out.outer.push_back(i);
  return out;
}

}  // namespace rackcheck
