// Group catalog: named groups stored as generator records (with order
// checksums, verified on load) plus parametric families.
//
// Record format, one group per blank-line-separated block:
//   name M11
//   degree 11
//   order 7920
//   gen (1,6)(2,8,7,9,5,11,3,4)
//   gen ...
//
// Accepted parametric names: Sym(n), Alt(n), Cyc(n), Dih(n),
// Metacyclic(a,b,k), and Za:Zb (least multiplier of order b mod a).
#pragma once

#include <string>
#include <vector>

#include "rackcheck/perm_group.hpp"

namespace rackcheck {

struct CatalogEntry {
  std::string name;
  std::size_t degree = 0;
  BigInt order;
  std::vector<std::string> gens;       // cycle notation
  std::vector<std::size_t> gen_lines;  // source line of each generator
};

// Raw text of the built-in group data (mirrors data/groups.dat).
const char* embedded_group_data();

// Parses record text; throws CatalogError with a line number on bad input.
std::vector<CatalogEntry> parse_group_data(const std::string& text);

// Builds the group for one entry and checks its order against the record.
PermGroup realize_entry(const CatalogEntry& entry);

// Resolves a name against the built-in data, then the parametric families.
// Throws CatalogError for unknown names, listing what is available.
PermGroup load_group(const std::string& name);

// Same, but named groups resolve against caller-supplied record text.
PermGroup load_group(const std::string& name, const std::string& data_text);

// Names of the built-in named groups, in data order.
std::vector<std::string> catalog_names();

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);  // order 2n, n >= 3

// Split metacyclic group Za x Zb with the Zb-generator acting on Za by
// t -> k*t.  Requires k to have multiplicative order exactly b mod a, so the
// action is faithful.  Acts on a+b points.
PermGroup metacyclic_group(std::uint64_t a, std::uint64_t b, std::uint64_t k);

// Least k >= 2 of multiplicative order b mod a; throws ParameterError if none.
std::uint64_t least_multiplier(std::uint64_t a, std::uint64_t b);

}  // namespace rackcheck
