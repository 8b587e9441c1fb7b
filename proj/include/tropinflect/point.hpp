#pragma once

#include <stdexcept>
#include <string>

#include "tropinflect/rational.hpp"

namespace tropinflect {

/// Integer lattice vector (exponents, edge directions).
struct IVec2 {
  Int x{0}, y{0};

  IVec2() = default;
  IVec2(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}

  friend IVec2 operator+(const IVec2& a, const IVec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend IVec2 operator-(const IVec2& a, const IVec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend IVec2 operator-(const IVec2& a) { return {-a.x, -a.y}; }
  friend IVec2 operator*(const Int& k, const IVec2& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const IVec2& a, const IVec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const IVec2& a, const IVec2& b) { return !(a == b); }
  friend bool operator<(const IVec2& a, const IVec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Int cross(const IVec2& a, const IVec2& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const IVec2& a, const IVec2& b) { return a.x * b.x + a.y * b.y; }

/// Exact rational point of the plane.
struct QVec2 {
  Rat x{0}, y{0};

  QVec2() = default;
  QVec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  QVec2(const IVec2& v) : x(v.x), y(v.y) {}

  friend QVec2 operator+(const QVec2& a, const QVec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend QVec2 operator-(const QVec2& a, const QVec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend QVec2 operator*(const Rat& k, const QVec2& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const QVec2& a, const QVec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const QVec2& a, const QVec2& b) { return !(a == b); }
  friend bool operator<(const QVec2& a, const QVec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline Rat cross(const QVec2& a, const QVec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const QVec2& a, const QVec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat dot(const QVec2& a, const IVec2& b) { return a.x * b.x + a.y * b.y; }

struct QVec3 {
  Rat x{0}, y{0}, z{0};

  friend QVec3 operator+(const QVec3& a, const QVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend QVec3 operator-(const QVec3& a, const QVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend bool operator==(const QVec3& a, const QVec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator<(const QVec3& a, const QVec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

struct IVec3 {
  Int x{0}, y{0}, z{0};

  friend IVec3 operator+(const IVec3& a, const IVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend IVec3 operator-(const IVec3& a) { return {-a.x, -a.y, -a.z}; }
  friend IVec3 operator*(const Int& k, const IVec3& a) { return {k * a.x, k * a.y, k * a.z}; }
  friend bool operator==(const IVec3& a, const IVec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator<(const IVec3& a, const IVec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

/// v / gcd(|v_x|,|v_y|), keeping orientation. Zero vector is rejected.
inline IVec2 primitive_direction(const IVec2& v) {
  if (v.is_zero()) throw std::invalid_argument("primitive_direction: zero vector");
  Int g = int_gcd(int_abs(v.x), int_abs(v.y));
  return {v.x / g, v.y / g};
}

inline IVec3 primitive_direction(const IVec3& v) {
  if (v.is_zero()) throw std::invalid_argument("primitive_direction: zero vector");
  Int g = int_gcd(int_gcd(int_abs(v.x), int_abs(v.y)), int_abs(v.z));
  return {v.x / g, v.y / g, v.z / g};
}

/// Number of lattice points on [a,b] minus one, i.e. gcd of the coordinate gaps.
inline Int lattice_length(const IVec2& a, const IVec2& b) {
  if (a == b) throw std::invalid_argument("lattice_length: equal endpoints");
  return int_gcd(int_abs(b.x - a.x), int_abs(b.y - a.y));
}

/// Rational direction scaled to a primitive integer vector.
inline IVec2 primitive_direction(const QVec2& v) {
  Int m = int_lcm(rat_den(v.x), rat_den(v.y));
  return primitive_direction(IVec2{rat_num(v.x) * (m / rat_den(v.x)), rat_num(v.y) * (m / rat_den(v.y))});
}

/// Lattice length of a rational segment: the factor t with b-a = t*primitive.
inline Rat lattice_length_q(const QVec2& a, const QVec2& b) {
  if (a == b) throw std::invalid_argument("lattice_length_q: equal endpoints");
  QVec2 d = b - a;
  IVec2 u = primitive_direction(d);
  return u.x != 0 ? Rat(d.x / Rat(u.x)) : Rat(d.y / Rat(u.y));
}

}  // namespace tropinflect
