#include "sbs/o3.hpp"

namespace sbs {

Mat3 rotation_about(const Vec3& axis, double angle) {
  Vec3 u = axis.normalized();
  Mat3 k;
  k << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  return Mat3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * (k * k);
}

Mat3 reflection(const Vec3& normal) {
  Vec3 n = normal.normalized();
  return Mat3::Identity() - 2.0 * (n * n.transpose());
}

ElementKind classify_element(const Mat3& m, double tol) {
  if (!is_o3_element(m, tol)) fail(errc::invalid_input, "matrix is not orthogonal with det +-1");
  ElementKind k;
  k.proper = m.determinant() > 0;
  Mat3 r = k.proper ? m : Mat3(-m);  // rotation part
  double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  k.angle = std::acos(c);
  k.is_identity = k.proper && mat_close(m, Mat3::Identity(), tol);
  k.is_inversion = !k.proper && mat_close(m, inversion(), tol);
  k.is_mirror = !k.proper && std::abs(M_PI - k.angle) < 1e-6;

  if (k.angle < 1e-9) {
    k.axis = Vec3::UnitZ();
  } else if (std::abs(M_PI - k.angle) < 1e-6) {
    // Eigenvector of (r + I)/2 with the largest diagonal contribution.
    Mat3 p = 0.5 * (r + Mat3::Identity());
    int col = 0;
    p.colwise().norm().maxCoeff(&col);
    k.axis = p.col(col).normalized();
  } else {
    Vec3 w(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
    k.axis = w.normalized();
  }
  // Fix the sign convention: lexicographically largest of the two unit vectors.
  Vec3 neg = -k.axis;
  auto lex_less = [](const Vec3& a, const Vec3& b) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(a[i] - b[i]) > 1e-9) return a[i] < b[i];
    }
    return false;
  };
  if (lex_less(k.axis, neg) && k.angle > 1e-9 && std::abs(M_PI - k.angle) < 1e-6) {
    k.axis = neg;  // axis of a 2-fold (or mirror normal) is only defined up to sign
  }
  return k;
}

int element_order(const Mat3& m, int cap, double tol) {
  Mat3 p = m;
  for (int n = 1; n <= cap; ++n) {
    if (mat_close(p, Mat3::Identity(), tol)) return n;
    p = p * m;
  }
  return 0;
}

}  // namespace sbs
