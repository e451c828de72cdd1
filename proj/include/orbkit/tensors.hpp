#pragma once

#include <array>
#include <cmath>

#include "orbkit/errors.hpp"

namespace orbkit {

/// Euclidean 3-vector. Plain value type, unit-agnostic.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  constexpr double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const { return *this / norm(); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline constexpr Vec3 kXhat{1.0, 0.0, 0.0};
inline constexpr Vec3 kYhat{0.0, 1.0, 0.0};
inline constexpr Vec3 kZhat{0.0, 0.0, 1.0};

/// 3x3 tensor with row-major components T(i,j).
struct Mat3 {
  std::array<double, 9> a{};

  constexpr double operator()(int r, int c) const { return a[3 * r + c]; }
  constexpr double& operator()(int r, int c) { return a[3 * r + c]; }

  static constexpr Mat3 zero() { return {}; }
  static constexpr Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  constexpr Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }
  constexpr Mat3 operator*(double s) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = a[i] * s;
    return r;
  }
  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  constexpr Vec3 operator*(const Vec3& v) const {
    return {(*this)(0, 0) * v.x + (*this)(0, 1) * v.y + (*this)(0, 2) * v.z,
            (*this)(1, 0) * v.x + (*this)(1, 1) * v.y + (*this)(1, 2) * v.z,
            (*this)(2, 0) * v.x + (*this)(2, 1) * v.y + (*this)(2, 2) * v.z};
  }

  constexpr Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  constexpr double trace() const { return a[0] + a[4] + a[8]; }
  constexpr double det() const {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  }
  double max_abs() const {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
  }
  bool finite() const {
    for (double v : a)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

constexpr Mat3 operator*(double s, const Mat3& m) { return m * s; }

/// u (x) v
constexpr Mat3 outer(const Vec3& u, const Vec3& v) {
  Mat3 m;
  m(0, 0) = u.x * v.x; m(0, 1) = u.x * v.y; m(0, 2) = u.x * v.z;
  m(1, 0) = u.y * v.x; m(1, 1) = u.y * v.y; m(1, 2) = u.y * v.z;
  m(2, 0) = u.z * v.x; m(2, 1) = u.z * v.y; m(2, 2) = u.z * v.z;
  return m;
}

/// Antisymmetric 2-tensor stored by its axial vector, so M + M^T = 0 exactly.
struct SkewSym {
  Vec3 axial;

  constexpr Mat3 mat() const {
    Mat3 m;
    m(0, 1) = -axial.z; m(0, 2) = axial.y;
    m(1, 0) = axial.z;  m(1, 2) = -axial.x;
    m(2, 0) = -axial.y; m(2, 1) = axial.x;
    return m;
  }
  constexpr Vec3 operator*(const Vec3& u) const { return axial.cross(u); }
};

/// Axial operator: hat(v) u = v x u for all u.
constexpr SkewSym hat(const Vec3& v) { return SkewSym{v}; }

/// Axial vector of the antisymmetric part of a general 2-tensor, (M - M^T)/2.
constexpr Vec3 unhat(const Mat3& m) {
  return {0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1))};
}

constexpr Vec3 unhat(const SkewSym& s) { return s.axial; }

/// Antisymmetrized tensor product u (x) v - v (x) u.
constexpr Mat3 wedge(const Vec3& u, const Vec3& v) { return outer(u, v) - outer(v, u); }

/// Proper orthogonal 2-tensor. Construction validates R R^T = I and det R = 1.
class Rotation {
 public:
  static constexpr double kOrthTol = 1e-12;

  static Rotation identity() { return Rotation(Mat3::identity()); }

  /// Throws NotSpecialOrthogonal when either invariant is violated.
  static Rotation from_mat(const Mat3& m) {
    const Mat3 defect = m * m.transposed() - Mat3::identity();
    const double orth = defect.max_abs();
    const double d = m.det();
    if (!(orth <= kOrthTol) || !(std::abs(d - 1.0) <= kOrthTol)) {
      throw NotSpecialOrthogonal(orth, d);
    }
    return Rotation(m);
  }

  const Mat3& mat() const { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_); }
  Rotation transposed() const { return Rotation(m_.transposed()); }
  double trace() const { return m_.trace(); }

 private:
  explicit Rotation(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

inline Rotation rotation_from_mat(const Mat3& m) { return Rotation::from_mat(m); }

}  // namespace orbkit
