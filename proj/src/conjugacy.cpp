#include "rackcheck/conjugacy.hpp"

namespace rackcheck {

std::string class_letter(std::size_t index) {
  std::string s;
  ++index;  // bijective base 26
  while (index > 0) {
    --index;
    s.insert(s.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return s;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              std::size_t class_cap,
                                              std::uint64_t seed) {
  PermOps ops{g.degree()};
  auto raw = enumerate_classes(ops, g.generators(), g.order(), class_cap, seed);
  std::vector<ConjugacyClass> out;
  out.reserve(raw.size());
  std::uint64_t prev_order = 0;
  std::size_t letter = 0;
  for (auto& c : raw) {
    ConjugacyClass cc;
    cc.representative = std::move(c.representative);
    cc.element_order = c.element_order;
    cc.elements = std::move(c.elements);
    BigInt sz = static_cast<std::uint64_t>(cc.elements.size());
    if (g.order() % sz != 0)
      throw Error("class size " + sz.str() + " does not divide the group order");
    cc.centralizer_order = g.order() / sz;
    if (cc.element_order != prev_order) {
      prev_order = cc.element_order;
      letter = 0;
    }
    cc.label = std::to_string(cc.element_order) + class_letter(letter++);
    out.push_back(std::move(cc));
  }
  return out;
}

}  // namespace rackcheck
