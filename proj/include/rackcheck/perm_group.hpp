// Permutation groups backed by a deterministic Schreier-Sims stabilizer
// chain.  Construction, order, and membership tests involve no randomness,
// so identical generator lists always produce identical chains.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rackcheck/common.hpp"
#include "rackcheck/perm.hpp"

namespace rackcheck {

class PermGroup {
 public:
  // Group generated by `gens` acting on {0, .., degree-1}.  An empty list
  // gives the trivial group.  Generators are kept verbatim (identities are
  // skipped for the chain but retained in generators()).
  PermGroup(std::size_t degree, std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }

  // Membership via sifting.  Throws DegreeMismatchError on degree mismatch.
  bool contains(const Perm& p) const;

  bool is_trivial() const { return order_ == 1; }

  // Base points of the chain, in order (useful for diagnostics).
  std::vector<std::size_t> base() const;

  // Derived subgroup: normal closure of generator commutators.
  PermGroup derived_subgroup() const;

 private:
  struct Level {
    std::size_t base = 0;
    std::vector<Perm> gens;            // generators fixing all earlier base points
    std::vector<std::uint32_t> orbit;  // BFS order, orbit[0] == base
    std::vector<std::uint32_t> pos;    // point -> 1+index into orbit, 0 if absent
    std::vector<Perm> transversal;     // transversal[i] maps base to orbit[i]
  };

  void place(Perm res, std::size_t lvl);
  std::vector<const Perm*> stabilizer_gens(std::size_t i) const;
  void rebuild_orbit(std::size_t i);
  void verify_from(std::size_t start);
  // Returns the sifted residue and the level where sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm x, std::size_t from) const;

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  BigInt order_;
};

// Seeded pseudo-random group elements via product replacement with an
// accumulator.  Deterministic for a fixed generator list and seed.
class RandomElements {
 public:
  RandomElements(const PermGroup& g, std::uint64_t seed);
  Perm next();

 private:
  std::vector<Perm> slots_;
  Perm acc_;
  std::mt19937_64 rng_;
  void step();
};

}  // namespace rackcheck
