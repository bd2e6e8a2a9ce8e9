#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sbs/finite_group.hpp"
#include "sbs/group_ops.hpp"
#include "sbs/irreps.hpp"
#include "sbs/o3.hpp"

namespace sbs {

// Schoenflies family tokens. Axial families take the order parameter n
// separately; the trailing tokens are the closed infinite groups, handled
// symbolically.
enum class PgName {
  C1, Ci, Cs, Cn, Cnv, Cnh, S2n, Dn, Dnd, Dnh, T, Td, Th, O, Oh, I, Ih,
  Cinf, Cinfv, Cinfh, Dinf, Dinfh, SO2, O2, SO3, O3, K, Kh
};

std::string to_string(PgName name);
PgName parse_pg_name(const std::string& token);

bool is_axial(PgName name);     // needs n
bool is_finite_name(PgName name);
// Collapse the sampling aliases SO2=Cinf, O2=Cinfv, K=SO3, Kh=O3.
PgName symbolic_alias(PgName name);

// A group of O(3) matrices with its composition table. Element order is the
// deterministic closure order of its construction.
class MatrixGroup {
 public:
  MatrixGroup() = default;
  MatrixGroup(FiniteGroup table, std::vector<Mat3> mats)
      : table_(std::move(table)), mats_(std::move(mats)) {}

  static MatrixGroup from_generators(const std::vector<Mat3>& gens, int max_order = 1024,
                                     double tol = kDefaultTol);
  // Build the table for a set already known to be closed (order preserved).
  static MatrixGroup from_elements(std::vector<Mat3> mats, double tol = kDefaultTol);

  const FiniteGroup& table() const { return table_; }
  const std::vector<Mat3>& mats() const { return mats_; }
  const Mat3& mat(int i) const { return mats_[i]; }
  int order() const { return table_.order(); }

  int index_of(const Mat3& m, double tol = kDefaultTol) const;  // -1 if absent
  bool contains(const Mat3& m, double tol = kDefaultTol) const { return index_of(m, tol) >= 0; }
  bool contains_all(const MatrixGroup& other, double tol = kDefaultTol) const;

  MatrixGroup conjugated(const Mat3& g) const;  // g * this * g^-1, same table
  MatrixGroup subgroup_of(const Subgroup& s) const;

 private:
  FiniteGroup table_;
  std::vector<Mat3> mats_;
};

// A point group as (orientation, name, n): the realized elements are
// orientation * canonical(name, n) * orientation^-1 when the name is finite.
struct PointGroup {
  Mat3 orientation = Mat3::Identity();
  PgName name = PgName::C1;
  int n = 0;  // axial order parameter, 0 when not axial
  std::shared_ptr<const MatrixGroup> elements;  // null for symbolic names

  bool finite() const { return elements != nullptr; }
  int order() const { return elements ? elements->order() : -1; }
  std::string label() const;
};

// Canonical generator matrices for a finite family instance; the canonical
// pose puts the principal axis on z, a 2-fold rotation (if any) on x, else a
// vertical mirror plane through the yz plane. Cubic groups are axis-aligned;
// icosahedral groups have a 5-fold axis on z and a 2-fold axis on x.
std::vector<Mat3> canonical_generators(PgName name, int n);

// The canonical group itself (identity orientation). Realized groups cap the
// axial order at n <= 32.
PointGroup canonical_point_group(PgName name, int n = 0);

// The same group conjugated into the given orientation.
PointGroup oriented_point_group(const Mat3& orientation, PgName name, int n = 0);

// Symbolic (infinite) point group with an orientation.
PointGroup symbolic_point_group(const Mat3& orientation, PgName name);

// Membership test for symbolic groups (axis predicates).
bool symbolic_contains(const PointGroup& symbolic, const Mat3& m, double tol = kDefaultTol);

// Name + orientation recovery for a matrix group: returns (g, name, n) with
// g * canonical(name, n) * g^-1 equal to the input elementwise and det g = +1.
PointGroup identify_point_group(const MatrixGroup& group, double tol = 1e-6);

// Stabilizer of an irrep object inside a finite point group.
Subgroup object_stabilizer(const PointGroup& p, const IrrepObject& obj, double tol = 1e-6);

// Uniform element: exact for finite groups, Haar on the continuous factor for
// symbolic ones. Deterministic per seed.
Mat3 sample_group_element(const PointGroup& p, uint64_t seed);

}  // namespace sbs
