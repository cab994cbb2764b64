// Permutations on {0, ..., n-1} stored as image vectors.
//
// Composition convention: (a * b) applies a first, then b, i.e.
// (a * b)[i] == b[a[i]].  Conjugation g^-1 * x * g is available as
// Perm::conj(x, g) in a single pass.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rackcheck/common.hpp"

namespace rackcheck {

class Perm {
 public:
  Perm() = default;

  // Identity on n points.
  static Perm identity(std::size_t n);

  // Takes ownership of an image vector; throws ValidationError unless it is
  // a bijection on {0, .., n-1}.
  static Perm from_images(std::vector<std::uint16_t> images);

  // Parses 1-based disjoint-cycle notation, e.g. "(1,2,3)(4,5)".  The
  // identity is written "()".  Points outside every cycle are fixed.
  static Perm parse(const std::string& text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  std::uint16_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  // g^-1 * x * g without forming intermediates.
  static Perm conj(const Perm& x, const Perm& g);

  // Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  // 1-based disjoint-cycle notation; "()" for the identity.
  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

  std::size_t hash() const { return fnv1a(img_.data(), img_.size() * 2); }

 private:
  std::vector<std::uint16_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace rackcheck
