#include "sbs/sbs_engine.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace sbs {

namespace {

constexpr double kObjTol = 1e-6;

// Finite matrix group or an oriented symbolic point group.
struct GroupHandle {
  std::optional<MatrixGroup> fin;
  std::optional<PointGroup> sym;

  bool finite() const { return fin.has_value(); }
};

GroupHandle handle_of(const PointGroup& p) {
  GroupHandle h;
  if (p.finite()) h.fin = *p.elements;
  else h.sym = p;
  return h;
}

GroupHandle canonical_normalizer_handle(PgName name, int n) {
  auto [elem, norm] = normalizer_of(name, n);
  (void)elem;  // identity by the pose convention
  return handle_of(norm);
}

bool symbolic_is_whole_o3(const PointGroup& p) { return symbolic_alias(p.name) == PgName::O3; }

MatrixGroup filter_by_symbolic(const MatrixGroup& g, const PointGroup& sym) {
  std::vector<Mat3> kept;
  for (const Mat3& m : g.mats())
    if (symbolic_contains(sym, m)) kept.push_back(m);
  return MatrixGroup::from_elements(std::move(kept));
}

GroupHandle intersect(const GroupHandle& a, const GroupHandle& b) {
  if (a.finite() && b.finite()) {
    std::vector<Mat3> kept;
    for (const Mat3& m : a.fin->mats())
      if (b.fin->contains(m)) kept.push_back(m);
    GroupHandle out;
    out.fin = MatrixGroup::from_elements(std::move(kept));
    return out;
  }
  if (a.finite() && !b.finite()) {
    GroupHandle out;
    out.fin = symbolic_is_whole_o3(*b.sym) ? *a.fin : filter_by_symbolic(*a.fin, *b.sym);
    return out;
  }
  if (!a.finite() && b.finite()) return intersect(b, a);
  // both symbolic
  if (symbolic_is_whole_o3(*a.sym)) return b;
  if (symbolic_is_whole_o3(*b.sym)) return a;
  if (symbolic_alias(a.sym->name) == symbolic_alias(b.sym->name)) {
    Vec3 az = a.sym->orientation * Vec3::UnitZ();
    Vec3 bz = b.sym->orientation * Vec3::UnitZ();
    if ((az - bz).cwiseAbs().maxCoeff() < 1e-8) return a;
  }
  fail(errc::symbolic_group, "intersection of two distinct symbolic groups is unsupported");
}

// S * N for canonical S (matrix set product). The result must be a group.
GroupHandle left_product(const MatrixGroup& s, const GroupHandle& n) {
  if (!n.finite()) {
    for (const Mat3& m : s.mats())
      if (!symbolic_contains(*n.sym, m))
        fail(errc::symbolic_group, "coset product with a symbolic group that does not contain S");
    return n;
  }
  std::vector<Mat3> prod;
  auto known = [&](const Mat3& m) {
    for (const Mat3& q : prod)
      if (mat_close(q, m, 1e-7)) return true;
    return false;
  };
  for (const Mat3& a : s.mats())
    for (const Mat3& b : n.fin->mats()) {
      Mat3 m = a * b;
      if (!known(m)) prod.push_back(m);
    }
  GroupHandle out;
  out.fin = MatrixGroup::from_elements(std::move(prod));  // throws GroupNotClosed if not a group
  return out;
}

PointGroup to_point_group(const GroupHandle& h, const Mat3& conjugate_by) {
  if (!h.finite()) {
    PointGroup p = *h.sym;
    return symbolic_point_group(conjugate_by * p.orientation, p.name);
  }
  PointGroup id = identify_point_group(*h.fin);
  return oriented_point_group(conjugate_by * id.orientation, id.name, id.n);
}

Subgroup members_in(const MatrixGroup& g, const MatrixGroup& sub) {
  Subgroup s;
  for (const Mat3& m : sub.mats()) {
    int idx = g.index_of(m);
    if (idx < 0) fail(errc::not_nested, "expected subgroup is not inside the group");
    s.members.push_back(idx);
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

Subgroup stabilizer_in(const MatrixGroup& g, const IrrepObject& obj) {
  Subgroup s;
  for (int i = 0; i < g.order(); ++i)
    if (approx_equal(act(g.mat(i), obj), obj, kObjTol)) s.members.push_back(i);
  return s;
}

void require_nested(const PointGroup& s, const PointGroup& k) {
  if (!s.finite() || !k.finite())
    fail(errc::symbolic_group, "nested pair must be finite point groups");
  if (!s.elements->contains_all(*k.elements))
    fail(errc::not_nested, "K is not a subgroup of S");
}

struct PartialFrame {
  Mat3 g_s;               // orientation of S
  MatrixGroup s_canon;    // canonical S
  MatrixGroup k_rel;      // K in the canonical frame of S
  GroupHandle n1;         // normalizer of canonical S
  GroupHandle n2;         // normalizer of K, oriented into the S frame
};

PartialFrame partial_frame(const PointGroup& s, const PointGroup& k) {
  require_nested(s, k);
  PartialFrame f;
  f.g_s = s.orientation;
  f.s_canon = *canonical_point_group(s.name, s.n).elements;
  Mat3 rel = s.orientation.transpose() * k.orientation;
  f.k_rel = canonical_point_group(k.name, k.n).elements->conjugated(rel);
  f.n1 = canonical_normalizer_handle(s.name, s.n);
  GroupHandle nk = canonical_normalizer_handle(k.name, k.n);
  if (nk.finite()) {
    f.n2 = GroupHandle{};
    f.n2.fin = nk.fin->conjugated(rel);
  } else {
    f.n2 = GroupHandle{};
    f.n2.sym = symbolic_point_group(rel * nk.sym->orientation, nk.sym->name);
  }
  return f;
}

GroupHandle nsk_canonical(const PartialFrame& f) {
  GroupHandle n = intersect(f.n1, f.n2);
  return left_product(f.s_canon, n);
}

std::vector<Subgroup> conjugacy_class_in(const MatrixGroup& s, const Subgroup& k) {
  return conjugacy_class_of_subgroup(s.table(), k);
}

}  // namespace

std::vector<IrrepObject> materialize(const SBSpec& b) {
  if (!b.orbit_group.finite())
    fail(errc::symbolic_group, "cannot materialize an orbit of a symbolic group");
  const MatrixGroup& n = *b.orbit_group.elements;
  std::vector<IrrepObject> out;
  auto known = [&](const IrrepObject& p) {
    for (const IrrepObject& q : out)
      if (approx_equal(q, p, kObjTol)) return true;
    return false;
  };
  std::vector<IrrepObject> seeds = {b.object};
  seeds.insert(seeds.end(), b.extra_seeds.begin(), b.extra_seeds.end());
  for (const IrrepObject& seed : seeds)
    for (int i = 0; i < n.order(); ++i) {
      IrrepObject p = act(n.mat(i), seed);
      if (!known(p)) out.push_back(std::move(p));
    }
  return out;
}

PointGroup normalizer_group(const PointGroup& s) {
  GroupHandle n = canonical_normalizer_handle(s.name, s.n);
  return to_point_group(n, s.orientation);
}

SBSpec full_sbs(const PointGroup& s, std::optional<IrrepObject> b) {
  IrrepObject obj = b.value_or(canonical_breaking_object(s.name, s.n));
  if (s.finite()) {
    Subgroup stab = stabilizer_in(*canonical_point_group(s.name, s.n).elements, obj);
    if (stab.order() != 1)
      fail(errc::not_symmetry_breaking, "object has a nontrivial stabilizer in S");
  }
  SBSpec out;
  out.object = act(s.orientation, obj);
  out.orbit_group = normalizer_group(s);
  out.kind = SbsKind::full;
  return out;
}

PointGroup generalized_normalizer_group(const PointGroup& s, const PointGroup& k) {
  PartialFrame f = partial_frame(s, k);
  return to_point_group(nsk_canonical(f), f.g_s);
}

SBSpec partial_sbs(const PointGroup& s, const PointGroup& k, std::optional<IrrepObject> p) {
  PartialFrame f = partial_frame(s, k);
  IrrepObject obj = p.has_value() ? *p : derive_partial_object(s, k);

  // The object must not break below some conjugate of K.
  Subgroup stab = stabilizer_in(f.s_canon, obj);
  Subgroup k_sub = members_in(f.s_canon, f.k_rel);
  bool inside = false;
  for (const Subgroup& c : conjugacy_class_in(f.s_canon, k_sub))
    if (is_subset(stab, c)) {
      inside = true;
      break;
    }
  if (!inside)
    fail(errc::not_partial_breaking, "object stabilizer is not inside any conjugate of K");

  SBSpec out;
  out.object = act(f.g_s, obj);
  out.orbit_group = to_point_group(nsk_canonical(f), f.g_s);
  out.kind = SbsKind::partial;
  return out;
}

namespace {

// Core of the ideal-object search, in the canonical frame of S: returns the
// realized H <= N1 ∩ N2 whose pullback is the complement of the image of
// N_S(K) in the quotient by K, or nullopt when no complement exists.
std::optional<MatrixGroup> ideal_object_symmetry_canonical(const PartialFrame& f) {
  if (!f.n1.finite() || !f.n2.finite())
    fail(errc::infinite_normalizer, "a required normalizer is an infinite symbolic group");
  GroupHandle nh = intersect(f.n1, f.n2);
  const MatrixGroup& n = *nh.fin;
  GroupHandle nph = intersect(GroupHandle{f.s_canon, std::nullopt}, f.n2);
  const MatrixGroup& n_prime = *nph.fin;

  Subgroup k_in_n = members_in(n, f.k_rel);
  Quotient q = quotient(n.table(), k_in_n);
  Subgroup q2 = project_subgroup(q, members_in(n, n_prime));
  std::optional<Subgroup> c = find_complement(q.group, q2);
  if (!c) return std::nullopt;
  Subgroup h = lift_subgroup(q, *c);
  return n.subgroup_of(h);
}

}  // namespace

std::optional<std::pair<PointGroup, PointGroup>> ideal_partial_object_symmetry(
    const PointGroup& s, const PointGroup& k) {
  PartialFrame f = partial_frame(s, k);
  std::optional<MatrixGroup> h = ideal_object_symmetry_canonical(f);
  if (!h) return std::nullopt;
  PointGroup hid = identify_point_group(*h);
  PointGroup oriented = oriented_point_group(f.g_s * hid.orientation, hid.name, hid.n);
  return std::make_pair(oriented, k);
}

IrrepObject derive_partial_object(const PointGroup& s, const PointGroup& k) {
  PartialFrame f = partial_frame(s, k);
  std::optional<MatrixGroup> h = ideal_object_symmetry_canonical(f);
  if (!h)
    fail(errc::not_partial_breaking,
         "no ideal object symmetry exists; supply an object explicitly");

  Subgroup k_sub = members_in(f.s_canon, f.k_rel);
  // Average a generic object over H; the result carries at least the H
  // symmetry, and generically no more than forced.
  const Vec3 seeds[] = {Vec3(0.731, 0.292, 0.614), Vec3(0.177, 0.823, 0.531),
                        Vec3(0.493, 0.107, 0.862)};
  for (const Vec3& v : seeds) {
    IrrepObject generic = IrrepObject::scalar(0.9, Parity::odd);
    generic.append(IrrepObject::vector3(v));
    generic.append(IrrepObject::vector3(Vec3(v.y(), v.z(), v.x()), Parity::even));
    Mat3 q = v * Vec3(1.1 * v.z(), 0.9 * v.x(), 1.3 * v.y()).transpose();
    Mat3 sym = q + q.transpose();
    sym -= (sym.trace() / 3.0) * Mat3::Identity();
    generic.append(IrrepObject::quadrupole(l2_matrix_to_coeffs(sym)));

    IrrepObject avg;
    for (const IrrepComponent& comp : generic.components) {
      IrrepComponent acc = comp;
      acc.coeffs.setZero();
      for (const Mat3& m : h->mats()) acc.coeffs += act(m, comp).coeffs;
      acc.coeffs /= static_cast<double>(h->order());
      if (acc.coeffs.norm() > 1e-9) {
        acc.coeffs.normalize();
        avg.components.push_back(std::move(acc));
      }
    }
    if (avg.components.empty()) continue;
    if (stabilizer_in(f.s_canon, avg) == k_sub) return avg;
  }
  fail(errc::not_partial_breaking, "could not derive an object with stabilizer exactly K");
}

bool is_equivariant_sbs(const SBSpec& b, const PointGroup& s,
                        const std::optional<PointGroup>& k) {
  PointGroup n = k.has_value() ? generalized_normalizer_group(s, *k) : normalizer_group(s);
  if (!n.finite()) fail(errc::symbolic_group, "the required normalizer is not materializable");
  if (!s.finite()) fail(errc::symbolic_group, "S must be finite and materialized");

  std::vector<IrrepObject> set = materialize(b);
  auto member = [&](const IrrepObject& p) {
    for (const IrrepObject& q : set)
      if (approx_equal(q, p, kObjTol)) return true;
    return false;
  };
  for (const Mat3& m : n.elements->mats())
    for (const IrrepObject& p : set)
      if (!member(act(m, p))) return false;

  const MatrixGroup& sg = *s.elements;
  if (!k.has_value()) {
    for (const IrrepObject& p : set)
      if (stabilizer_in(sg, p).order() != 1) return false;
    return true;
  }
  Subgroup k_sub = members_in(sg, *k->elements);
  std::vector<Subgroup> cls = conjugacy_class_in(sg, k_sub);
  for (const IrrepObject& p : set) {
    Subgroup stab = stabilizer_in(sg, p);
    bool ok = false;
    for (const Subgroup& c : cls)
      if (is_subset(stab, c)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

namespace {

// Partition the materialized set into S-orbits; returns one representative
// index list per orbit.
std::vector<std::vector<int>> s_orbits(const std::vector<IrrepObject>& set,
                                       const MatrixGroup& s) {
  std::vector<int> owner(set.size(), -1);
  std::vector<std::vector<int>> orbits;
  auto index_of = [&](const IrrepObject& p) {
    for (size_t i = 0; i < set.size(); ++i)
      if (approx_equal(set[i], p, kObjTol)) return static_cast<int>(i);
    return -1;
  };
  for (size_t i = 0; i < set.size(); ++i) {
    if (owner[i] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orb;
    for (int g = 0; g < s.order(); ++g) {
      int j = index_of(act(s.mat(g), set[i]));
      if (j >= 0 && owner[j] < 0) {
        owner[j] = id;
        orb.push_back(j);
      }
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace

DegeneracyReport degeneracy_full(const SBSpec& b, const PointGroup& s) {
  DegeneracyReport r;
  if (!b.orbit_group.finite()) {
    r.infinite = true;
    return r;
  }
  if (!s.finite()) fail(errc::symbolic_group, "S must be finite");
  std::vector<IrrepObject> set = materialize(b);
  auto orbits = s_orbits(set, *s.elements);
  r.orbit_count = static_cast<int>(orbits.size());
  r.value = r.orbit_count;
  return r;
}

DegeneracyReport degeneracy_partial(const SBSpec& p, const PointGroup& s, const PointGroup& k) {
  require_nested(s, k);
  DegeneracyReport r;
  if (!p.orbit_group.finite()) {
    r.infinite = true;
    return r;
  }
  std::vector<IrrepObject> set = materialize(p);
  const MatrixGroup& sg = *s.elements;
  Subgroup k_sub = members_in(sg, *k.elements);
  auto orbits = s_orbits(set, sg);
  r.orbit_count = static_cast<int>(orbits.size());
  long total = 0;
  for (const auto& orb : orbits) {
    long contribution = -1;
    for (int idx : orb) {
      Subgroup stab = stabilizer_in(sg, set[idx]);
      if (is_subset(stab, k_sub)) {
        contribution = k_sub.order() / stab.order();
        break;
      }
    }
    if (contribution < 0)
      fail(errc::not_partial_sbs, "an S-orbit has no representative with stabilizer inside K");
    total += contribution;
  }
  r.value = total;
  return r;
}

DegeneracyBound degeneracy_bound_full(const PointGroup& s, const MatrixGroup& m) {
  PointGroup n = normalizer_group(s);
  if (!n.finite()) fail(errc::symbolic_group, "N(S) is not materializable");
  if (!m.contains_all(*s.elements) || !n.elements->contains_all(m))
    fail(errc::hypothesis_unmet, "need S <= M <= N(S)");
  DegeneracyBound b;
  b.value = n.elements->order() / m.order();
  Subgroup s_in_m = members_in(m, *s.elements);
  b.complement_hypothesis = find_complement(m.table(), s_in_m).has_value();
  return b;
}

DegeneracyBound degeneracy_bound_partial(const PointGroup& s, const PointGroup& k,
                                         const MatrixGroup& k_prime, const MatrixGroup& m) {
  require_nested(s, k);
  if (!k.elements->contains_all(k_prime)) fail(errc::hypothesis_unmet, "need K' <= K");
  PointGroup nsk = generalized_normalizer_group(s, k);
  if (!nsk.finite()) fail(errc::symbolic_group, "N(S,K) is not materializable");
  if (!m.contains_all(*s.elements) || !nsk.elements->contains_all(m))
    fail(errc::hypothesis_unmet, "need S <= M <= N(S,K)");
  // M must also normalize the pair (S, K'): M <= N(S,K').
  PointGroup k_prime_pg = identify_point_group(k_prime);
  PointGroup nskp = generalized_normalizer_group(
      s, oriented_point_group(k_prime_pg.orientation, k_prime_pg.name, k_prime_pg.n));
  if (!nskp.elements->contains_all(m)) fail(errc::hypothesis_unmet, "need M <= N(S,K')");

  DegeneracyBound b;
  b.value = (static_cast<long>(k.elements->order()) / k_prime.order()) *
            (nsk.elements->order() / m.order());

  // Hypothesis: N_S(K')/K' has a complement in N_M(K')/K'.
  Subgroup kp_in_m = members_in(m, k_prime);
  Subgroup nm_kp = normalizer(m.table(), kp_in_m);
  MatrixGroup nm = m.subgroup_of(nm_kp);
  Subgroup kp_in_nm = members_in(nm, k_prime);
  Quotient q = quotient(nm.table(), kp_in_nm);
  // N_S(K') = S ∩ N_M(K') since S <= M.
  Subgroup ns_kp;
  for (int i = 0; i < nm.order(); ++i)
    if (s.elements->contains(nm.mat(i))) ns_kp.members.push_back(i);
  b.complement_hypothesis = find_complement(q.group, project_subgroup(q, ns_kp)).has_value();
  return b;
}

namespace {

Eigen::VectorXd flatten(const IrrepObject& obj) {
  int total = 0;
  for (const auto& c : obj.components) total += static_cast<int>(c.coeffs.size());
  Eigen::VectorXd v(total);
  int at = 0;
  for (const auto& c : obj.components) {
    v.segment(at, c.coeffs.size()) = c.coeffs;
    at += static_cast<int>(c.coeffs.size());
  }
  return v;
}

IrrepObject quantized(const IrrepObject& obj, double grid) {
  IrrepObject out = obj;
  for (auto& c : out.components)
    for (int i = 0; i < c.coeffs.size(); ++i)
      c.coeffs[i] = std::round(c.coeffs[i] / grid) * grid;
  return out;
}

}  // namespace

double orbit_min_loss(const PointGroup& s, const IrrepObject& y_pred,
                      const IrrepObject& y_true) {
  if (!s.finite()) fail(errc::symbolic_group, "orbit_min_loss needs a finite group");
  const MatrixGroup& g = *s.elements;
  // Choose a canonical orbit representative on a coarse grid; the quantized
  // representative is bit-identical no matter which orbit member was passed.
  constexpr double grid = 1e-6;
  IrrepObject canon = quantized(act(g.mat(0), y_true), grid);
  Eigen::VectorXd best = flatten(canon);
  for (int i = 1; i < g.order(); ++i) {
    IrrepObject cand = quantized(act(g.mat(i), y_true), grid);
    Eigen::VectorXd v = flatten(cand);
    for (int j = 0; j < v.size(); ++j) {
      if (v[j] < best[j] - 0.5 * grid) {
        best = v;
        canon = cand;
        break;
      }
      if (v[j] > best[j] + 0.5 * grid) break;
    }
  }
  double min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.order(); ++i)
    min = std::min(min, squared_distance(y_pred, act(g.mat(i), canon)));
  return min;
}

std::vector<IrrepObject> enumerate_or_sample(const SBSpec& b, int count, uint64_t seed) {
  if (count < 1) fail(errc::invalid_input, "count must be >= 1");
  std::mt19937_64 rng(seed);
  if (b.orbit_group.finite()) {
    std::vector<IrrepObject> orb = materialize(b);
    if (count >= static_cast<int>(orb.size())) return orb;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(orb.size()) - 1);
    std::vector<IrrepObject> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(orb[pick(rng)]);
    return out;
  }
  std::vector<IrrepObject> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    uint64_t sub = rng();
    out.push_back(act(sample_group_element(b.orbit_group, sub), b.object));
  }
  return out;
}

}  // namespace sbs
