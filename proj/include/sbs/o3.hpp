#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "sbs/errors.hpp"

namespace sbs {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kDefaultTol = 1e-8;

inline bool mat_close(const Mat3& a, const Mat3& b, double tol = kDefaultTol) {
  return (a - b).cwiseAbs().maxCoeff() < tol;
}

inline bool is_orthogonal(const Mat3& m, double tol = kDefaultTol) {
  return mat_close(m.transpose() * m, Mat3::Identity(), tol);
}

// Orthogonal with det = +1 or -1 within tolerance.
inline bool is_o3_element(const Mat3& m, double tol = kDefaultTol) {
  if (!is_orthogonal(m, tol)) return false;
  double d = m.determinant();
  return std::abs(std::abs(d) - 1.0) < tol;
}

inline double o3_det(const Mat3& m) { return m.determinant() > 0 ? 1.0 : -1.0; }

// Rotation by angle about an axis (Rodrigues).
Mat3 rotation_about(const Vec3& axis, double angle);

inline Mat3 rot_z(double angle) { return rotation_about(Vec3::UnitZ(), angle); }
inline Mat3 rot_x(double angle) { return rotation_about(Vec3::UnitX(), angle); }

inline Mat3 inversion() { return -Mat3::Identity(); }

// Reflection across the plane with unit normal n.
Mat3 reflection(const Vec3& normal);

// Horizontal mirror z -> -z.
inline Mat3 sigma_h() { return reflection(Vec3::UnitZ()); }

// Vertical mirror whose plane contains the z axis and the in-plane direction
// at the given azimuth.
inline Mat3 sigma_v(double azimuth) {
  return reflection(Vec3(-std::sin(azimuth), std::cos(azimuth), 0.0));
}

struct ElementKind {
  bool proper = true;      // det +1
  double angle = 0.0;      // rotation angle in [0, pi] (rotation part)
  Vec3 axis = Vec3::UnitZ();
  bool is_identity = false;
  bool is_inversion = false;
  bool is_mirror = false;  // improper with rotation part = identity
};

// Decompose an O(3) element into rotation angle/axis and parity.
ElementKind classify_element(const Mat3& m, double tol = kDefaultTol);

// Smallest n >= 1 with m^n = 1 (n <= cap), or 0 if none found.
int element_order(const Mat3& m, int cap = 256, double tol = kDefaultTol);

}  // namespace sbs
