#include "sbs/irreps.hpp"

#include <array>
#include <sstream>

namespace sbs {

namespace {

std::array<Mat3, 5> make_l2_basis() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  std::array<Mat3, 5> b;
  b[0] << 0, s2, 0, s2, 0, 0, 0, 0, 0;        // xy
  b[1] << 0, 0, 0, 0, 0, s2, 0, s2, 0;        // yz
  b[2] << -s6, 0, 0, 0, -s6, 0, 0, 0, 2 * s6; // 3z^2 - r^2
  b[3] << 0, 0, s2, 0, 0, 0, s2, 0, 0;        // xz
  b[4] << s2, 0, 0, 0, -s2, 0, 0, 0, 0;       // x^2 - y^2
  return b;
}

const std::array<Mat3, 5>& l2_basis() {
  static const std::array<Mat3, 5> basis = make_l2_basis();
  return basis;
}

}  // namespace

const Mat3& l2_basis_matrix(int idx) { return l2_basis()[idx]; }

Mat3 l2_coeffs_to_matrix(const Eigen::VectorXd& coeffs) {
  Mat3 a = Mat3::Zero();
  for (int i = 0; i < 5; ++i) a += coeffs[i] * l2_basis()[i];
  return a;
}

Eigen::VectorXd l2_matrix_to_coeffs(const Mat3& a) {
  Eigen::VectorXd c(5);
  for (int i = 0; i < 5; ++i) c[i] = (l2_basis()[i].transpose() * a).trace();
  return c;
}

IrrepObject IrrepObject::scalar(double v, Parity p) {
  IrrepComponent c;
  c.l = 0;
  c.parity = p;
  c.coeffs = Eigen::VectorXd::Constant(1, v);
  return IrrepObject{{c}};
}

IrrepObject IrrepObject::vector3(const Vec3& v, Parity p) {
  IrrepComponent c;
  c.l = 1;
  c.parity = p;
  c.coeffs = v;
  return IrrepObject{{c}};
}

IrrepObject IrrepObject::quadrupole(const Eigen::VectorXd& coeffs, Parity p) {
  if (coeffs.size() != 5) fail(errc::invalid_input, "l=2 component needs 5 coefficients");
  IrrepComponent c;
  c.l = 2;
  c.parity = p;
  c.coeffs = coeffs;
  return IrrepObject{{c}};
}

IrrepObject IrrepObject::quadrupole_along(const Vec3& axis, Parity p) {
  Vec3 u = axis.normalized();
  Mat3 a = 3.0 * (u * u.transpose()) - Mat3::Identity();
  Eigen::VectorXd c = l2_matrix_to_coeffs(a);
  return quadrupole(c / c.norm(), p);
}

IrrepObject& IrrepObject::append(const IrrepObject& other) {
  components.insert(components.end(), other.components.begin(), other.components.end());
  return *this;
}

IrrepComponent act(const Mat3& g, const IrrepComponent& c) {
  const double det = o3_det(g);
  IrrepComponent out = c;
  switch (c.l) {
    case 0:
      if (c.parity == Parity::odd) out.coeffs = det * c.coeffs;
      return out;
    case 1: {
      Vec3 v = g * Vec3(c.coeffs);
      if (c.parity == Parity::even) v *= det;
      out.coeffs = v;
      return out;
    }
    case 2: {
      Mat3 a = l2_coeffs_to_matrix(c.coeffs);
      Eigen::VectorXd cc = l2_matrix_to_coeffs(g * a * g.transpose());
      if (c.parity == Parity::odd) cc *= det;
      out.coeffs = cc;
      return out;
    }
    default:
      fail(errc::unsupported_irrep, "irrep action supports l <= 2 only");
  }
}

IrrepObject act(const Mat3& g, const IrrepObject& obj) {
  IrrepObject out;
  out.components.reserve(obj.components.size());
  for (const IrrepComponent& c : obj.components) out.components.push_back(act(g, c));
  return out;
}

bool approx_equal(const IrrepComponent& a, const IrrepComponent& b, double tol) {
  if (a.l != b.l || a.parity != b.parity) return false;
  return (a.coeffs - b.coeffs).cwiseAbs().maxCoeff() < tol;
}

bool approx_equal(const IrrepObject& a, const IrrepObject& b, double tol) {
  if (a.components.size() != b.components.size()) return false;
  for (size_t i = 0; i < a.components.size(); ++i)
    if (!approx_equal(a.components[i], b.components[i], tol)) return false;
  return true;
}

double squared_distance(const IrrepObject& a, const IrrepObject& b) {
  if (a.components.size() != b.components.size())
    fail(errc::invalid_input, "distance between objects of different shape");
  double d = 0;
  for (size_t i = 0; i < a.components.size(); ++i) {
    const auto& ca = a.components[i];
    const auto& cb = b.components[i];
    if (ca.l != cb.l || ca.parity != cb.parity)
      fail(errc::invalid_input, "distance between objects of different shape");
    d += (ca.coeffs - cb.coeffs).squaredNorm();
  }
  return d;
}

double norm(const IrrepObject& a) {
  double n = 0;
  for (const auto& c : a.components) n += c.coeffs.squaredNorm();
  return std::sqrt(n);
}

std::string to_string(const IrrepObject& obj) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < obj.components.size(); ++i) {
    const auto& c = obj.components[i];
    if (i) os << ", ";
    os << "l=" << c.l << (c.parity == Parity::even ? "e" : "o") << " (";
    for (int j = 0; j < c.coeffs.size(); ++j) {
      if (j) os << ", ";
      os << c.coeffs[j];
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace sbs
