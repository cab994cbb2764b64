// Finite racks as explicit operation tables, conjugation racks of group
// classes, and the decomposability test ("type D"): does the rack contain a
// decomposable subrack R ⊔ S with elements r ∈ R, s ∈ S such that
// r ▷ (s ▷ (r ▷ s)) != s?
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rackcheck/common.hpp"
#include "rackcheck/perm.hpp"

namespace rackcheck {

class FiniteRack {
 public:
  enum class Check {
    Full,      // row bijectivity + self-distributivity (cubic in size)
    RowsOnly,  // row bijectivity only; for large tables from trusted constructors
  };

  // Row-major table of size n*n with table[x*n + y] == x ▷ y.
  static FiniteRack from_table(std::vector<std::uint16_t> table,
                               std::vector<std::string> labels = {},
                               Check check = Check::Full);

  std::size_t size() const { return n_; }
  std::uint16_t op(std::size_t x, std::size_t y) const { return table_[x * n_ + y]; }
  bool is_quandle() const { return quandle_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint16_t>& table() const { return table_; }

  // 64-bit FNV-1a over the row-major table entries.
  std::uint64_t checksum() const;

  nlohmann::ordered_json to_json() const;
  static FiniteRack from_json(const nlohmann::json& j);

 private:
  std::vector<std::uint16_t> table_;
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  bool quandle_ = false;
};

// Conjugation rack x ▷ y = x^-1 y x on a conjugacy class given as a sorted
// element list.  Labels are the cycle strings.
FiniteRack conjugation_rack(const std::vector<Perm>& class_elements);

struct RackTypeDResult {
  Verdict verdict = Verdict::Unknown;
  // Witness, when verdict == TypeD: the orbits of r and s under the inner
  // maps of the subrack generated by {r, s} form a decomposable subrack.
  std::uint16_t r = 0, s = 0;
  std::vector<std::uint16_t> orbit_r, orbit_s;
  std::uint64_t pairs_scanned = 0;
};

// Exhaustive pair scan with closure-based verification, deterministic and
// independent of element order beyond the table itself.  Scans at most
// `pair_budget` ordered pairs; an interrupted scan reports Unknown.
RackTypeDResult rack_type_d(const FiniteRack& rack,
                            std::uint64_t pair_budget = 50'000'000);

// Checks a user-supplied decomposition: R and S must be disjoint, nonempty,
// in-range, and closed under every inner map of R ∪ S — anything else throws
// ValidationError.  Returns a pair (r, s) with r ▷ (s ▷ (r ▷ s)) != s if one
// exists, std::nullopt if the decomposition is valid but witnesses none.
std::optional<std::pair<std::uint16_t, std::uint16_t>> verify_decomposition(
    const FiniteRack& rack, const std::vector<std::uint16_t>& r_part,
    const std::vector<std::uint16_t>& s_part);

}  // namespace rackcheck
