// Group elements behind a small operations interface so orbit walks, class
// enumeration, and the type-D engine work the same for plain permutations
// and for elements of extensions built later.
//
// An Ops type provides:
//   using Elem = ...;
//   Elem identity() const;
//   Elem mul(a, b) const;            // a first, then b
//   Elem inv(a) const;
//   Elem conj(x, g) const;           // g^-1 x g
//   bool eq(a, b) const;  bool less(a, b) const;  std::size_t hash(a) const;
//   std::uint64_t order(a) const;
//   std::string str(a) const;
#pragma once

#include <cstdint>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "rackcheck/common.hpp"
#include "rackcheck/perm.hpp"

namespace rackcheck {

struct PermOps {
  using Elem = Perm;
  std::size_t deg = 0;

  Perm identity() const { return Perm::identity(deg); }
  Perm mul(const Perm& a, const Perm& b) const { return a * b; }
  Perm inv(const Perm& a) const { return a.inverse(); }
  Perm conj(const Perm& x, const Perm& g) const { return Perm::conj(x, g); }
  bool eq(const Perm& a, const Perm& b) const { return a == b; }
  bool less(const Perm& a, const Perm& b) const { return a < b; }
  std::size_t hash(const Perm& a) const { return a.hash(); }
  std::uint64_t order(const Perm& a) const { return a.order(); }
  std::string str(const Perm& a) const { return a.str(); }
};

template <class Ops>
struct OpsHash {
  const Ops* ops;
  std::size_t operator()(const typename Ops::Elem& e) const { return ops->hash(e); }
};

template <class Ops>
struct OpsEq {
  const Ops* ops;
  bool operator()(const typename Ops::Elem& a, const typename Ops::Elem& b) const {
    return ops->eq(a, b);
  }
};

template <class Ops>
struct OrbitResult {
  std::vector<typename Ops::Elem> elements;  // BFS discovery order
  bool complete = false;                     // cap was not hit
  bool found_target = false;
};

// Orbit of `seed` under conjugation by `gens`.  Because conjugation by a
// fixed element permutes a finite orbit, closing under the generators alone
// already yields the full orbit under the generated subgroup.  Stops early
// when `target` (if given) is reached or when the orbit exceeds `cap`.
template <class Ops>
OrbitResult<Ops> conj_orbit(const Ops& ops, const typename Ops::Elem& seed,
                            const std::vector<typename Ops::Elem>& gens,
                            std::size_t cap,
                            const typename Ops::Elem* target = nullptr) {
  using E = typename Ops::Elem;
  OrbitResult<Ops> out;
  std::unordered_set<E, OpsHash<Ops>, OpsEq<Ops>> seen(16, {&ops}, {&ops});
  out.elements.push_back(seed);
  seen.insert(seed);
  if (target && ops.eq(seed, *target)) {
    out.found_target = true;
    return out;
  }
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    for (const E& g : gens) {
      E y = ops.conj(out.elements[k], g);
      if (seen.contains(y)) continue;
      if (target && ops.eq(y, *target)) {
        out.elements.push_back(std::move(y));
        out.found_target = true;
        return out;
      }
      if (out.elements.size() >= cap) return out;  // complete stays false
      seen.insert(y);
      out.elements.push_back(std::move(y));
    }
  }
  out.complete = true;
  return out;
}

// Product-replacement random walk over any Ops; deterministic per seed.
template <class Ops>
class GenericRandom {
 public:
  GenericRandom(const Ops& ops, std::vector<typename Ops::Elem> gens,
                std::uint64_t seed)
      : ops_(&ops), acc_(ops.identity()), rng_(seed) {
    for (auto& g : gens)
      if (!ops.eq(g, acc_)) slots_.push_back(std::move(g));
    if (slots_.empty()) return;
    std::size_t ngen = slots_.size();
    while (slots_.size() < 8) slots_.push_back(slots_[slots_.size() % ngen]);
    for (int i = 0; i < 64; ++i) step();
  }

  typename Ops::Elem next() {
    if (slots_.empty()) return acc_;
    step();
    return acc_;
  }

 private:
  void step() {
    std::size_t i = rng_below(rng_, slots_.size());
    std::size_t j = rng_below(rng_, slots_.size() - 1);
    if (j >= i) ++j;
    if (rng_below(rng_, 2))
      slots_[i] = ops_->mul(slots_[i], slots_[j]);
    else
      slots_[i] = ops_->mul(ops_->inv(slots_[j]), slots_[i]);
    acc_ = rng_below(rng_, 2) ? ops_->mul(acc_, slots_[i]) : ops_->mul(slots_[i], acc_);
  }

  const Ops* ops_;
  std::vector<typename Ops::Elem> slots_;
  typename Ops::Elem acc_;
  std::mt19937_64 rng_;
};

}  // namespace rackcheck
