#include "rackcheck/rack.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace rackcheck {

FiniteRack FiniteRack::from_table(std::vector<std::uint16_t> table,
                                  std::vector<std::string> labels, Check check) {
  FiniteRack r;
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(table.size()))));
  if (n * n != table.size())
    throw ValidationError("rack table has " + std::to_string(table.size()) +
                          " entries, not a perfect square");
  if (n > 65535) throw ValidationError("rack size exceeds 65535");
  if (!labels.empty() && labels.size() != n)
    throw ValidationError("rack has " + std::to_string(n) + " elements but " +
                          std::to_string(labels.size()) + " labels");
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      std::uint16_t v = table[x * n + y];
      if (v >= n)
        throw ValidationError("entry (" + std::to_string(x) + "," + std::to_string(y) +
                              ") = " + std::to_string(v) + " is out of range");
      if (seen[v])
        throw ValidationError("row " + std::to_string(x) +
                              " is not a bijection: value " + std::to_string(v) +
                              " repeats");
      seen[v] = true;
    }
  }
  if (check == Check::Full) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::uint16_t xy = table[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          // x ▷ (y ▷ z) == (x ▷ y) ▷ (x ▷ z)
          std::uint16_t lhs = table[x * n + table[y * n + z]];
          std::uint16_t rhs = table[xy * n + table[x * n + z]];
          if (lhs != rhs)
            throw ValidationError("self-distributivity fails at (x,y,z) = (" +
                                  std::to_string(x) + "," + std::to_string(y) + "," +
                                  std::to_string(z) + ")");
        }
      }
  }
  r.quandle_ = true;
  for (std::size_t x = 0; x < n; ++x)
    if (table[x * n + x] != x) {
      r.quandle_ = false;
      break;
    }
  r.n_ = n;
  r.table_ = std::move(table);
  r.labels_ = std::move(labels);
  return r;
}

std::uint64_t FiniteRack::checksum() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint16_t v : table_) {
    unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>(v >> 8)};
    h = fnv1a(b, 2, h);
  }
  return h;
}

nlohmann::ordered_json FiniteRack::to_json() const {
  nlohmann::ordered_json j;
  j["size"] = n_;
  j["quandle"] = quandle_;
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum()));
  j["checksum"] = buf;
  if (!labels_.empty()) j["labels"] = labels_;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < n_; ++x) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t y = 0; y < n_; ++y) row.push_back(table_[x * n_ + y]);
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

FiniteRack FiniteRack::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array())
    throw ValidationError("rack json must be an object with a \"table\" array");
  std::vector<std::uint16_t> table;
  std::size_t n = j["table"].size();
  table.reserve(n * n);
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != n)
      throw ValidationError("rack json table must be square");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 65535)
        throw ValidationError("rack json entries must be small non-negative integers");
      table.push_back(v.get<std::uint16_t>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return from_table(std::move(table), std::move(labels));
}

FiniteRack conjugation_rack(const std::vector<Perm>& cls) {
  std::size_t n = cls.size();
  if (n == 0) throw ValidationError("empty element list");
  if (n > 65535) throw ValidationError("class too large for a rack table");
  std::unordered_map<Perm, std::uint16_t, PermHash> index(2 * n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(cls[i], static_cast<std::uint16_t>(i));
  if (index.size() != n) throw ValidationError("element list contains duplicates");
  std::vector<std::uint16_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = cls[x].str();
    for (std::size_t y = 0; y < n; ++y) {
      auto it = index.find(Perm::conj(cls[y], cls[x]));
      if (it == index.end())
        throw ValidationError("element list is not closed under conjugation");
      table[x * n + y] = it->second;
    }
  }
  // Cubic validation only at small sizes; bijectivity is always checked.
  auto check = n <= 512 ? FiniteRack::Check::Full : FiniteRack::Check::RowsOnly;
  return FiniteRack::from_table(std::move(table), std::move(labels), check);
}

namespace {

struct UnionFind {
  std::vector<std::uint16_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {}
  std::uint16_t find(std::uint16_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint16_t a, std::uint16_t b) { parent[find(a)] = find(b); }
};

}  // namespace

RackTypeDResult rack_type_d(const FiniteRack& rack, std::uint64_t pair_budget) {
  RackTypeDResult res;
  const std::size_t n = rack.size();
  std::vector<std::uint16_t> members;
  std::vector<std::int32_t> pos(n, -1);
  UnionFind uf(n);

  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (r == s) continue;
      if (res.pairs_scanned >= pair_budget) {
        res.verdict = Verdict::Unknown;
        return res;
      }
      ++res.pairs_scanned;
      // A witness pair must fail to return s.
      if (rack.op(r, rack.op(s, rack.op(r, s))) == s) continue;

      // Close {r, s} under ▷, union-finding the inner-map edges as they
      // appear; if r and s ever land in one component the pair is dead
      // (components only ever merge), so bail out early.
      members.clear();
      members.push_back(static_cast<std::uint16_t>(r));
      members.push_back(static_cast<std::uint16_t>(s));
      pos[r] = 0;
      pos[s] = 1;
      uf.parent[r] = static_cast<std::uint16_t>(r);
      uf.parent[s] = static_cast<std::uint16_t>(s);
      bool rejected = false;
      for (std::size_t i = 0; i < members.size() && !rejected; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          const std::uint16_t pair[2][2] = {{members[i], members[j]},
                                            {members[j], members[i]}};
          for (const auto& ab : pair) {
            std::uint16_t p = rack.op(ab[0], ab[1]);
            if (pos[p] < 0) {
              pos[p] = static_cast<std::int32_t>(members.size());
              members.push_back(p);
              uf.parent[p] = p;
            }
            uf.unite(ab[1], p);
          }
          if (uf.find(static_cast<std::uint16_t>(r)) ==
              uf.find(static_cast<std::uint16_t>(s))) {
            rejected = true;
            break;
          }
        }
      }
      if (!rejected) {
        res.verdict = Verdict::TypeD;
        res.r = static_cast<std::uint16_t>(r);
        res.s = static_cast<std::uint16_t>(s);
        auto root_r = uf.find(static_cast<std::uint16_t>(r));
        auto root_s = uf.find(static_cast<std::uint16_t>(s));
        for (std::uint16_t m : members) {
          if (uf.find(m) == root_r) res.orbit_r.push_back(m);
          if (uf.find(m) == root_s) res.orbit_s.push_back(m);
        }
        std::sort(res.orbit_r.begin(), res.orbit_r.end());
        std::sort(res.orbit_s.begin(), res.orbit_s.end());
        for (std::uint16_t m : members) pos[m] = -1;
        return res;
      }
      for (std::uint16_t m : members) pos[m] = -1;
    }
  }
  res.verdict = Verdict::NotTypeD;
  return res;
}

std::optional<std::pair<std::uint16_t, std::uint16_t>> verify_decomposition(
    const FiniteRack& rack, const std::vector<std::uint16_t>& r_part,
    const std::vector<std::uint16_t>& s_part) {
  const std::size_t n = rack.size();
  if (r_part.empty() || s_part.empty())
    throw ValidationError("decomposition parts must be nonempty");
  // 0 = outside, 1 = R, 2 = S
  std::vector<unsigned char> side(n, 0);
  for (std::uint16_t x : r_part) {
    if (x >= n) throw ValidationError("index " + std::to_string(x) + " out of range");
    if (side[x]) throw ValidationError("index " + std::to_string(x) + " listed twice");
    side[x] = 1;
  }
  for (std::uint16_t x : s_part) {
    if (x >= n) throw ValidationError("index " + std::to_string(x) + " out of range");
    if (side[x]) throw ValidationError("index " + std::to_string(x) + " listed twice");
    side[x] = 2;
  }
  auto require_closed = [&](const std::vector<std::uint16_t>& movers) {
    for (std::uint16_t x : movers)
      for (std::size_t y = 0; y < n; ++y)
        if (side[y] && side[rack.op(x, static_cast<std::uint16_t>(y))] != side[y])
          throw ValidationError("parts are not closed: " + std::to_string(x) +
                                " maps " + std::to_string(y) + " across the split");
  };
  require_closed(r_part);
  require_closed(s_part);
  for (std::uint16_t r : r_part)
    for (std::uint16_t s : s_part)
      if (rack.op(r, rack.op(s, rack.op(r, s))) != s) return {{r, s}};
  return std::nullopt;
}

}  // namespace rackcheck
