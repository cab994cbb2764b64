#include "rackcheck/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rackcheck {

std::vector<CatalogEntry> parse_group_data(const std::string& text) {
  std::vector<CatalogEntry> entries;
  CatalogEntry cur;
  bool in_record = false;
  std::size_t lineno = 0;
  auto flush = [&] {
    if (!in_record) return;
    if (cur.name.empty() || cur.degree == 0 || cur.order == 0 || cur.gens.empty())
      throw CatalogError("incomplete group record ending at line " +
                         std::to_string(lineno));
    entries.push_back(std::move(cur));
    cur = CatalogEntry{};
    in_record = false;
  };
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    auto sp = line.find(' ');
    if (sp == std::string::npos)
      throw CatalogError("line " + std::to_string(lineno) + ": expected 'key value'");
    std::string key = line.substr(0, sp);
    std::string val = line.substr(sp + 1);
    in_record = true;
    try {
      if (key == "name")
        cur.name = val;
      else if (key == "degree")
        cur.degree = std::stoul(val);
      else if (key == "order")
        cur.order = BigInt(val);
      else if (key == "gen") {
        cur.gens.push_back(val);
        cur.gen_lines.push_back(lineno);
      }
      else
        throw CatalogError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const CatalogError&) {
      throw;
    } catch (const std::exception& e) {
      throw CatalogError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  ++lineno;
  flush();
  return entries;
}

PermGroup realize_entry(const CatalogEntry& entry) {
  std::vector<Perm> gens;
  gens.reserve(entry.gens.size());
  for (std::size_t i = 0; i < entry.gens.size(); ++i) {
    try {
      gens.push_back(Perm::parse(entry.gens[i], entry.degree));
    } catch (const std::exception& e) {
      std::string where = i < entry.gen_lines.size()
                              ? "line " + std::to_string(entry.gen_lines[i])
                              : "generator " + std::to_string(i + 1);
      throw CatalogError(where + ": " + e.what());
    }
  }
  PermGroup g(entry.degree, std::move(gens));
  if (g.order() != entry.order)
    throw CatalogError("group data for '" + entry.name + "' is corrupt: generators give order " +
                       g.order().str() + ", record says " + entry.order.str());
  return g;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : parse_group_data(embedded_group_data())) names.push_back(e.name);
  return names;
}

namespace {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

PermGroup checked(PermGroup g, const BigInt& expect, const std::string& what) {
  if (g.order() != expect)
    throw Error(what + ": construction gave order " + g.order().str() + ", expected " +
                expect.str());
  return g;
}

// Parses "Head(a,b,c)" into numeric arguments; empty result if no match.
bool parse_call(const std::string& name, const std::string& head,
                std::vector<std::uint64_t>& args) {
  if (name.size() < head.size() + 2 || name.compare(0, head.size(), head) != 0) return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  args.clear();
  std::uint64_t cur = 0;
  bool have = false;
  for (std::size_t i = head.size() + 1; i + 1 < name.size(); ++i) {
    char c = name[i];
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
      have = true;
    } else if (c == ',' && have) {
      args.push_back(cur);
      cur = 0;
      have = false;
    } else {
      return false;
    }
  }
  if (!have) return false;
  args.push_back(cur);
  return true;
}

bool parse_semidirect_name(const std::string& name, std::uint64_t& a, std::uint64_t& b) {
  // ZA:ZB
  if (name.size() < 5 || name[0] != 'Z') return false;
  auto colon = name.find(":Z");
  if (colon == std::string::npos) return false;
  std::string sa = name.substr(1, colon - 1);
  std::string sb = name.substr(colon + 2);
  if (sa.empty() || sb.empty()) return false;
  for (char c : sa)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  for (char c : sb)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  a = std::stoull(sa);
  b = std::stoull(sb);
  return true;
}

}  // namespace

PermGroup symmetric_group(std::size_t n) {
  // Transversal storage is quadratic in the degree, so keep demo-scale caps.
  if (n < 1 || n > 300) throw ParameterError("Sym(n) needs 1 <= n <= 300");
  if (n == 1) return PermGroup(1, {});
  std::vector<Perm> gens;
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[0], img[1]);
  gens.push_back(Perm::from_images(img));
  if (n > 2) {
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
    gens.push_back(Perm::from_images(img));
  }
  return checked(PermGroup(n, std::move(gens)), factorial(n), "Sym(" + std::to_string(n) + ")");
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3 || n > 300) throw ParameterError("Alt(n) needs 3 <= n <= 300");
  std::vector<Perm> gens;
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  img[0] = 1, img[1] = 2, img[2] = 0;
  gens.push_back(Perm::from_images(img));
  if (n > 3) {
    std::iota(img.begin(), img.end(), 0);
    if (n % 2 == 1) {
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
    } else {
      for (std::size_t i = 1; i < n; ++i) img[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);
    }
    gens.push_back(Perm::from_images(img));
  }
  return checked(PermGroup(n, std::move(gens)), factorial(n) / 2, "Alt(" + std::to_string(n) + ")");
}

PermGroup cyclic_group(std::size_t n) {
  if (n < 1 || n > 10000) throw ParameterError("Cyc(n) needs 1 <= n <= 10000");
  if (n == 1) return PermGroup(1, {});
  std::vector<std::uint16_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return checked(PermGroup(n, {Perm::from_images(img)}), BigInt(static_cast<std::uint64_t>(n)),
                 "Cyc(" + std::to_string(n) + ")");
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3 || n > 10000) throw ParameterError("Dih(n) needs 3 <= n <= 10000");
  std::vector<std::uint16_t> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    ref[i] = static_cast<std::uint16_t>(n - 1 - i);
  }
  return checked(PermGroup(n, {Perm::from_images(rot), Perm::from_images(ref)}),
                 BigInt(2) * static_cast<std::uint64_t>(n), "Dih(" + std::to_string(n) + ")");
}

std::uint64_t least_multiplier(std::uint64_t a, std::uint64_t b) {
  for (std::uint64_t k = 2; k < a; ++k) {
    if (std::gcd(k, a) != 1) continue;
    std::uint64_t pow = k % a, ord = 1;
    while (pow != 1 && ord <= b) {
      pow = pow * k % a;
      ++ord;
    }
    if (ord == b) return k;
  }
  throw ParameterError("no multiplier of order " + std::to_string(b) + " modulo " +
                       std::to_string(a));
}

PermGroup metacyclic_group(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
  if (a < 2 || b < 2 || a + b > 10000)
    throw ParameterError("Metacyclic(a,b,k) needs a,b >= 2 and a+b <= 10000");
  if (k < 2 || k >= a || std::gcd(k, a) != 1)
    throw ParameterError("multiplier k must satisfy 2 <= k < a and gcd(k,a) = 1");
  std::uint64_t pow = k % a, ord = 1;
  while (pow != 1) {
    pow = pow * k % a;
    if (++ord > b) break;
  }
  if (ord != b)
    throw ParameterError("multiplier " + std::to_string(k) + " has order " +
                         (ord > b ? std::string(">") + std::to_string(b) : std::to_string(ord)) +
                         " mod " + std::to_string(a) + ", need exactly " + std::to_string(b));
  std::size_t n = static_cast<std::size_t>(a + b);
  std::vector<std::uint16_t> x(n), y(n);
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), 0);
  for (std::uint64_t i = 0; i < a; ++i) {
    x[i] = static_cast<std::uint16_t>((i + 1) % a);
    y[i] = static_cast<std::uint16_t>(i * k % a);
  }
  for (std::uint64_t i = 0; i < b; ++i)
    y[a + i] = static_cast<std::uint16_t>(a + (i + 1) % b);
  return checked(PermGroup(n, {Perm::from_images(x), Perm::from_images(y)}),
                 BigInt(a) * b,
                 "Metacyclic(" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(k) + ")");
}

PermGroup load_group(const std::string& name, const std::string& data_text) {
  auto entries = parse_group_data(data_text);
  std::string dotted = name;
  std::replace(dotted.begin(), dotted.end(), ':', '.');
  for (const auto& e : entries)
    if (e.name == name || e.name == dotted) return realize_entry(e);

  std::vector<std::uint64_t> args;
  if (parse_call(name, "Sym", args) && args.size() == 1) return symmetric_group(args[0]);
  if (parse_call(name, "Alt", args) && args.size() == 1) return alternating_group(args[0]);
  if (parse_call(name, "Cyc", args) && args.size() == 1) return cyclic_group(args[0]);
  if (parse_call(name, "Dih", args) && args.size() == 1) return dihedral_group(args[0]);
  if (parse_call(name, "Metacyclic", args) && args.size() == 3)
    return metacyclic_group(args[0], args[1], args[2]);
  std::uint64_t a = 0, b = 0;
  if (parse_semidirect_name(name, a, b))
    return metacyclic_group(a, b, least_multiplier(a, b));

  std::string msg = "unknown group '" + name + "'. Named groups:";
  for (const auto& e : entries) msg += " " + e.name;
  msg += ". Parametric: Sym(n) Alt(n) Cyc(n) Dih(n) Metacyclic(a,b,k) Za:Zb";
  throw CatalogError(msg);
}

PermGroup load_group(const std::string& name) {
  return load_group(name, embedded_group_data());
}

}  // namespace rackcheck
