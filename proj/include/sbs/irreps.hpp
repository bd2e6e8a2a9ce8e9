#pragma once

#include <string>
#include <vector>

#include "sbs/o3.hpp"

namespace sbs {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// One real-irrep component: coefficients in the real spherical harmonic basis,
// ordered m = -l..l, no Condon-Shortley phase. Supported l: 0, 1, 2.
struct IrrepComponent {
  int l = 0;
  Parity parity = Parity::even;
  Eigen::VectorXd coeffs;  // length 2l+1
};

// A symmetry breaking object: a list of irrep components acted on jointly.
struct IrrepObject {
  std::vector<IrrepComponent> components;

  static IrrepObject scalar(double v, Parity p = Parity::even);
  static IrrepObject vector3(const Vec3& v, Parity p = Parity::odd);
  // l=2 component from m-ordered coefficients (xy, yz, z^2, xz, x^2-y^2 axes).
  static IrrepObject quadrupole(const Eigen::VectorXd& coeffs, Parity p = Parity::even);
  // Unit-norm l=2 component invariant under rotations about the given axis
  // (the traceless projector 3uu^T - I, normalized).
  static IrrepObject quadrupole_along(const Vec3& axis, Parity p = Parity::even);

  IrrepObject& append(const IrrepObject& other);
};

// Orthonormal basis of traceless symmetric matrices matching the m = -2..2
// coefficient order.
const Mat3& l2_basis_matrix(int idx);

Mat3 l2_coeffs_to_matrix(const Eigen::VectorXd& coeffs);
Eigen::VectorXd l2_matrix_to_coeffs(const Mat3& a);

// Action of an O(3) element:
//   l=0 even: unchanged;            l=0 odd: scaled by det
//   l=1 odd:  v -> g v (polar);     l=1 even: v -> det(g) g v
//   l=2 even: A -> g A g^T on the traceless symmetric form; l=2 odd: x det(g)
IrrepComponent act(const Mat3& g, const IrrepComponent& c);
IrrepObject act(const Mat3& g, const IrrepObject& obj);

bool approx_equal(const IrrepComponent& a, const IrrepComponent& b, double tol = 1e-6);
bool approx_equal(const IrrepObject& a, const IrrepObject& b, double tol = 1e-6);

double squared_distance(const IrrepObject& a, const IrrepObject& b);
double norm(const IrrepObject& a);

std::string to_string(const IrrepObject& obj);

}  // namespace sbs
