// Shared basics: arbitrary-precision integers for group orders, error types,
// and a portable helper for seeded uniform sampling.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace rackcheck {

using BigInt = boost::multiprecision::cpp_int;

// Three-valued answer for the decomposability tests.  Unknown only ever
// arises from budget or cap limits, never from a completed search.
enum class Verdict { TypeD, NotTypeD, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TypeD: return "TypeD";
    case Verdict::NotTypeD: return "NotTypeD";
    default: return "Unknown";
  }
}

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad image maps, unparsable cycle notation, bad tables.
struct ValidationError : Error {
  using Error::Error;
};

// Operands live on a different number of points.
struct DegreeMismatchError : Error {
  using Error::Error;
};

// Orbit or class enumeration hit its cap before completing.
struct CapExceededError : Error {
  using Error::Error;
};

// Catalog lookups and data-file problems.
struct CatalogError : Error {
  using Error::Error;
};

// Invalid parameters for parametric group constructions.
struct ParameterError : Error {
  using Error::Error;
};

// Uniform integer in [0, n) from a mt19937_64, without the
// distribution-object portability trap (libstdc++/libc++ differ).
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  // Lemire's multiply-shift rejection method
  std::uint64_t x = rng();
  __uint128_t m = static_cast<__uint128_t>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    std::uint64_t t = (0 - n) % n;
    while (lo < t) {
      x = rng();
      m = static_cast<__uint128_t>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 1469598103934665603ull) {
  auto p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace rackcheck
