#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbs/point_group.hpp"
#include "sbs/tables.hpp"

namespace sbs {

enum class SbsKind { full, partial };

// A symmetry breaking set as (object, orbit group): the set is the orbit of
// the object under the orbit group. Extra seed objects express unions of
// several orbits; constructors never produce them.
struct SBSpec {
  IrrepObject object;
  PointGroup orbit_group;
  SbsKind kind = SbsKind::full;
  std::vector<IrrepObject> extra_seeds;
};

struct DegeneracyReport {
  bool infinite = false;
  long value = 0;       // meaningful when !infinite
  int orbit_count = 0;  // S-orbits of the materialized set
  std::optional<long> bound;
};

// Orbit of the object (and any extra seeds) under a finite orbit group,
// deduplicated componentwise at 1e-6. Throws SymbolicGroup when the orbit
// group is not materializable.
std::vector<IrrepObject> materialize(const SBSpec& b);

// Equivariant full symmetry breaking set for S = (g, name): looks up the
// normalizer N of the canonical group, returns (g b, (g n, name N)). When b is
// omitted the family's canonical breaking object is used.
SBSpec full_sbs(const PointGroup& s, std::optional<IrrepObject> b = std::nullopt);

// Equivariant partial symmetry breaking set for nested K <= S; the orbit
// group is the generalized normalizer N(S,K) = S (N(S) ∩ N(K)) computed in
// the canonical frame of S and conjugated back.
SBSpec partial_sbs(const PointGroup& s, const PointGroup& k,
                   std::optional<IrrepObject> p = std::nullopt);

// The generalized normalizer N(S,K) as an identified point group.
PointGroup generalized_normalizer_group(const PointGroup& s, const PointGroup& k);

// The normalizer N(S) of an oriented point group (table lookup + conjugation);
// symbolic when the table row is infinite.
PointGroup normalizer_group(const PointGroup& s);

// Object symmetry (H, K) such that any p with H <= Stab_O3(p) and
// Stab_S(p) = K generates an ideal partial set: intersect normalizers, form
// the quotient by K, and look for a complement there. nullopt when the
// quotient has no complement. Throws InfiniteNormalizer when a required
// normalizer is symbolic.
std::optional<std::pair<PointGroup, PointGroup>> ideal_partial_object_symmetry(
    const PointGroup& s, const PointGroup& k);

// An object that generates an ideal partial set for (S, K): invariant under
// the H from ideal_partial_object_symmetry with S-stabilizer exactly K.
IrrepObject derive_partial_object(const PointGroup& s, const PointGroup& k);

// Definition check: the materialized set is fixed setwise by every element of
// N(S) (full) or N(S,K) (partial), and the per-element stabilizer condition
// holds (free action / stabilizer inside a conjugate of K).
bool is_equivariant_sbs(const SBSpec& b, const PointGroup& s,
                        const std::optional<PointGroup>& k = std::nullopt);

// Number of S-orbits of the materialized set; infinite for symbolic orbit
// groups with continuous factors.
DegeneracyReport degeneracy_full(const SBSpec& b, const PointGroup& s);

// Partial degeneracy: for each S-orbit pick a representative with stabilizer
// inside K and accumulate |K| / |Stab_S(p)|.
DegeneracyReport degeneracy_partial(const SBSpec& p, const PointGroup& s, const PointGroup& k);

struct DegeneracyBound {
  long value = 0;
  bool complement_hypothesis = false;  // the bound is attained iff this holds
};

// |N(S)| / |M| for S <= M <= N(S); the hypothesis predicate is "S has a
// complement in M".
DegeneracyBound degeneracy_bound_full(const PointGroup& s, const MatrixGroup& m);

// |K/K'| * |N(S,K)| / |M|; hypothesis: N_S(K')/K' has a complement in
// N_M(K')/K'.
DegeneracyBound degeneracy_bound_partial(const PointGroup& s, const PointGroup& k,
                                         const MatrixGroup& k_prime, const MatrixGroup& m);

// min over s in S of dist(y_pred, act(s, y_true)), by exact enumeration. The
// target is first snapped to a quantized canonical orbit representative so
// the result is exactly invariant under replacing y_true by act(s, y_true).
double orbit_min_loss(const PointGroup& s, const IrrepObject& y_pred, const IrrepObject& y_true);

// Full orbit when the orbit group is finite and count >= orbit size; otherwise
// `count` seeded draws (uniform over a finite orbit, Haar samples of the
// symbolic group applied to the object otherwise).
std::vector<IrrepObject> enumerate_or_sample(const SBSpec& b, int count, uint64_t seed);

}  // namespace sbs
