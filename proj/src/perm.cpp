#include "rackcheck/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rackcheck {

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Perm Perm::from_images(std::vector<std::uint16_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::uint16_t v = images[i];
    if (v >= images.size())
      throw ValidationError("image " + std::to_string(v + 1) + " of point " +
                            std::to_string(i + 1) + " is out of range");
    if (seen[v])
      throw ValidationError("image map is not a bijection: point " +
                            std::to_string(v + 1) + " hit twice");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::parse(const std::string& text, std::size_t degree) {
  if (degree > 65535) throw ValidationError("degree exceeds 65535");
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ValidationError("empty permutation string");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw ValidationError("expected '(' at position " + std::to_string(i) +
                            " in \"" + text + "\"");
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i)
        throw ValidationError("expected a point number at position " +
                              std::to_string(i) + " in \"" + text + "\"");
      std::uint32_t pt = 0;
      for (std::size_t k = i; k < j; ++k) pt = pt * 10 + (text[k] - '0');
      if (pt == 0 || pt > degree)
        throw ValidationError("point " + std::to_string(pt) +
                              " outside 1.." + std::to_string(degree));
      if (used[pt - 1])
        throw ValidationError("point " + std::to_string(pt) +
                              " appears in two cycles");
      used[pt - 1] = true;
      cycle.push_back(pt - 1);
      i = j;
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw ValidationError("unterminated cycle in \"" + text + "\"");
    ++i;  // ')'
    any_cycle = true;
    if (cycle.size() == 1)
      throw ValidationError("singleton cycle (" + std::to_string(cycle[0] + 1) +
                            ") is redundant; fixed points are implicit");
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
      img[cycle[k]] = static_cast<std::uint16_t>(cycle[k + 1]);
    if (!cycle.empty()) img[cycle.back()] = static_cast<std::uint16_t>(cycle[0]);
    skip_ws();
  }
  if (!any_cycle) throw ValidationError("no cycles found in \"" + text + "\"");
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatchError("cannot compose degree " + std::to_string(degree()) +
                              " with degree " + std::to_string(rhs.degree()));
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = rhs.img_[img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<std::uint16_t>(i);
  return out;
}

Perm Perm::conj(const Perm& x, const Perm& g) {
  if (x.degree() != g.degree())
    throw DegreeMismatchError("conjugation operands have different degrees");
  Perm out;
  out.img_.resize(x.degree());
  // (g^-1 x g)(g(i)) = g(x(i))
  for (std::size_t i = 0; i < x.degree(); ++i) out.img_[g.img_[i]] = g.img_[x.img_[i]];
  return out;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::str() const {
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << (j + 1);
      first = false;
      j = img_[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace rackcheck
