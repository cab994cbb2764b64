#include "rackcheck/perm_group.hpp"

#include <algorithm>

namespace rackcheck {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatchError("generator degree " + std::to_string(g.degree()) +
                                " does not match group degree " +
                                std::to_string(degree_));
  // Deterministic incremental Schreier-Sims: sift each generator, store the
  // residue at the level where sifting stalled, then re-verify the Schreier
  // condition bottom-up from that level.
  for (const Perm& g : gens_) {
    if (g.is_identity()) continue;
    auto [res, lvl] = sift(g, 0);
    if (res.is_identity()) continue;
    place(std::move(res), lvl);
    verify_from(lvl);
  }
  order_ = 1;
  for (const Level& lv : levels_) order_ *= static_cast<std::uint64_t>(lv.orbit.size());
}

void PermGroup::place(Perm res, std::size_t lvl) {
  if (lvl == levels_.size()) {
    Level lv;
    for (std::size_t i = 0; i < degree_; ++i)
      if (res[i] != i) {
        lv.base = i;
        break;
      }
    levels_.push_back(std::move(lv));
  }
  levels_[lvl].gens.push_back(std::move(res));
}

// Every stored generator fixing b_0 .. b_{i-1}: the level's own generators
// plus all deeper levels' (those fix even more base points).  The stabilizer
// subgroup at level i is generated by exactly this set, so orbits and
// Schreier generators must range over all of it.
std::vector<const Perm*> PermGroup::stabilizer_gens(std::size_t i) const {
  std::vector<const Perm*> out;
  for (std::size_t j = i; j < levels_.size(); ++j)
    for (const Perm& g : levels_[j].gens) out.push_back(&g);
  return out;
}

void PermGroup::rebuild_orbit(std::size_t i) {
  Level& lv = levels_[i];
  auto gens = stabilizer_gens(i);
  lv.orbit.clear();
  lv.pos.assign(degree_, 0);
  lv.transversal.clear();
  lv.orbit.push_back(static_cast<std::uint32_t>(lv.base));
  lv.pos[lv.base] = 1;
  lv.transversal.push_back(Perm::identity(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    std::uint32_t p = lv.orbit[k];
    for (const Perm* g : gens) {
      std::uint32_t q = (*g)[p];
      if (!lv.pos[q]) {
        lv.pos[q] = static_cast<std::uint32_t>(lv.orbit.size()) + 1;
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[k] * *g);
      }
    }
  }
}

void PermGroup::verify_from(std::size_t start) {
  // Verify levels bottom-up starting at `start`; on entry every level deeper
  // than `start` already satisfies the Schreier condition.  A failed test
  // deposits its residue deeper and restarts there, so deeper levels stay
  // verified whenever we move up.  Each failure strictly enlarges some orbit
  // on the next rebuild, which bounds the number of restarts.
  std::size_t i = start;
  while (true) {
    rebuild_orbit(i);
    std::optional<std::size_t> failed;
    {
      auto gens = stabilizer_gens(i);
      const Level& lv = levels_[i];
      for (std::size_t k = 0; k < lv.orbit.size() && !failed; ++k) {
        for (const Perm* g : gens) {
          std::uint32_t q = (*g)[lv.orbit[k]];
          Perm schreier = lv.transversal[k] * *g * lv.transversal[lv.pos[q] - 1].inverse();
          if (schreier.is_identity()) continue;
          auto [res, lvl] = sift(std::move(schreier), i + 1);
          if (res.is_identity()) continue;
          place(std::move(res), lvl);
          failed = lvl;
          break;
        }
      }
    }
    if (failed) {
      i = *failed;
      continue;
    }
    if (i == 0) break;
    --i;
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm x, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& lv = levels_[j];
    std::uint32_t p = x[lv.base];
    if (p == lv.base) continue;
    if (!lv.pos[p]) return {std::move(x), j};
    x = x * lv.transversal[lv.pos[p] - 1].inverse();
  }
  return {std::move(x), levels_.size()};
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatchError("membership test: element degree " +
                              std::to_string(p.degree()) + " vs group degree " +
                              std::to_string(degree_));
  auto [res, lvl] = sift(p, 0);
  (void)lvl;
  return res.is_identity();
}

std::vector<std::size_t> PermGroup::base() const {
  std::vector<std::size_t> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.base);
  return b;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> kgens;
  PermGroup k(degree_, {});
  auto absorb = [&](const Perm& c) {
    if (!c.is_identity() && !k.contains(c)) {
      kgens.push_back(c);
      k = PermGroup(degree_, kgens);
      return true;
    }
    return false;
  };
  for (const Perm& a : gens_)
    for (const Perm& b : gens_)
      absorb(a.inverse() * b.inverse() * a * b);
  // Normal closure: conjugate current generators by group generators until
  // nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot = kgens;
    for (const Perm& x : snapshot)
      for (const Perm& g : gens_)
        if (absorb(Perm::conj(x, g))) grew = true;
  }
  return k;
}

RandomElements::RandomElements(const PermGroup& g, std::uint64_t seed)
    : acc_(Perm::identity(g.degree())), rng_(seed) {
  for (const Perm& p : g.generators())
    if (!p.is_identity()) slots_.push_back(p);
  if (slots_.empty()) return;  // trivial group: next() stays at the identity
  std::size_t ngen = slots_.size();
  while (slots_.size() < 8) slots_.push_back(slots_[slots_.size() % ngen]);
  for (int i = 0; i < 64; ++i) step();
}

void RandomElements::step() {
  std::size_t i = rng_below(rng_, slots_.size());
  std::size_t j = rng_below(rng_, slots_.size() - 1);
  if (j >= i) ++j;  // j != i
  if (rng_below(rng_, 2))
    slots_[i] = slots_[i] * slots_[j];
  else
    slots_[i] = slots_[j].inverse() * slots_[i];
  acc_ = rng_below(rng_, 2) ? acc_ * slots_[i] : slots_[i] * acc_;
}

Perm RandomElements::next() {
  if (slots_.empty()) return acc_;
  step();
  return acc_;
}

}  // namespace rackcheck
