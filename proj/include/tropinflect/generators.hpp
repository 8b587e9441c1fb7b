#pragma once

#include <cstdint>

#include "tropinflect/inflection.hpp"

namespace tropinflect {

/// Deterministic 64-bit generator (splitmix64); identical across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  Int int_in(long lo, long hi) {  // inclusive
    return Int(lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))));
  }
};

/// One draw of the honeycomb lift: a_ij = -scale*(i^2+ij+j^2) + jitter with
/// jitter in {0,..,J}. Any jitter below scale/4 keeps the honeycomb
/// triangulation, so the result is always non-singular.
inline TropicalPolynomial honeycomb_lift(const Int& d, Rng& rng, long scale, long max_jitter) {
  TropicalPolynomial p;
  for (Int i = 0; i <= d; ++i)
    for (Int j = 0; i + j <= d; ++j) {
      Int q = i * i + i * j + j * j;
      Int jit = max_jitter > 0 ? rng.int_in(0, max_jitter) : Int(0);
      p.add_term({i, j}, Rat(-scale * q + jit));
    }
  return p;
}

/// Honeycomb curve of degree d with integer coefficients, redrawn until it
/// passes the genericity check and all inflection components are compact.
/// Deterministic in the seed.
inline TropicalPolynomial honeycomb_poly(const Int& d, std::uint64_t seed) {
  long scale = 5, jitter = 1;
  for (int attempt = 0; attempt < 512; ++attempt) {
    Rng rng(seed * 0x100000001b3ull + static_cast<std::uint64_t>(attempt));
    auto p = honeycomb_lift(d, rng, scale, jitter);
    auto c = build_curve(p);
    if (!is_nonsingular(c)) continue;
    if (!genericity_check(c).generic) continue;
    if (d >= 2) {
      auto res = inflection_components(c);
      bool all_compact = true;
      for (const auto& comp : res.components)
        if (!comp.compact()) all_compact = false;
      if (!all_compact) continue;
    }
    return p;
    // widen the jitter range if the loop ever runs dry
  }
  for (int attempt = 0; attempt < 512; ++attempt) {
    Rng rng(seed * 0x100000001b3ull + 7777u + static_cast<std::uint64_t>(attempt));
    auto p = honeycomb_lift(d, rng, 13, 3);
    auto c = build_curve(p);
    if (!genericity_check(c).generic) continue;
    auto res = inflection_components(c);
    bool all_compact = true;
    for (const auto& comp : res.components)
      if (!comp.compact()) all_compact = false;
    if (!all_compact) continue;
    return p;
  }
  throw std::runtime_error("honeycomb_poly: no generic draw found");
}

/// Random non-singular curve of degree d: negative-definite quadratic lift
/// plus jitter, resampled until the subdivision is a primitive triangulation
/// (cap 1000 tries).
inline TropicalPolynomial random_curve_poly(const Int& d, std::uint64_t seed) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rng rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(attempt) + 1);
    Int A = rng.int_in(2, 6), C = rng.int_in(2, 6), B = rng.int_in(-2, 2);
    if (B * B >= 4 * A * C) continue;
    Int D = rng.int_in(-3, 3), E = rng.int_in(-3, 3);
    long scale = 8;
    TropicalPolynomial p;
    for (Int i = 0; i <= d; ++i)
      for (Int j = 0; i + j <= d; ++j) {
        Int q = A * i * i + B * i * j + C * j * j + D * i + E * j;
        p.add_term({i, j}, Rat(-scale * q + rng.int_in(0, 3)));
      }
    auto c = build_curve(p);
    if (is_nonsingular(c)) return p;
  }
  throw std::runtime_error("random_curve_poly: cap of 1000 tries exhausted");
}

}  // namespace tropinflect
