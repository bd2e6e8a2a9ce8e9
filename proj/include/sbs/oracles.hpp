#pragma once

#include <string>
#include <vector>

#include "sbs/finite_group.hpp"
#include "sbs/group_ops.hpp"

namespace sbs {

struct OracleReport {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

// Restricted wreath product A wr H over a finite index set: elements are
// (base tuple, top element) with h acting on tuples by coordinate reindexing
// omega -> h^-1 omega.
struct WreathSpec {
  FiniteGroup base;                          // A
  FiniteGroup top;                           // H
  int omega_size = 0;                        // |Omega|
  std::vector<std::vector<int>> top_action;  // top element -> permutation of Omega
};

struct WreathGroup {
  FiniteGroup group;
  // label of element i: omega_size base indices followed by the top index
  std::vector<std::vector<int>> labels;
  int index_of(const std::vector<int>& label) const;
};

WreathGroup wreath_product(const WreathSpec& spec);

// The order-1024 wreath-product counterexample: in G = (C2 wr D4)^2 with
// S = <a1, b1^2, c1, a2, b2^2, c2> and K = <c1 c2>, the ideal full set has
// size |S| = 256 while any exact partial set has orbit size |G|/|K| = 512.
// Verifies: the six presentation relators and |G'| = 32; N_G(S) = N_G(S,K)
// = G; <a1 b1, a2 b2> is a complement of S; for every g outside S either
// g K g^-1 != K or g^2 lies in S - K; and the two set sizes.
std::vector<OracleReport> wreath_counterexample();

// For every subgroup S of G: when S has a complement H in N_G(S), the coset
// space N_G(S)/H under left translation is a free, S-transitive,
// N_G(S)-closed set; when no complement exists, no coset space N_G(S)/H' has
// those properties for any subgroup H'.
std::vector<OracleReport> complement_coset_oracle(const FiniteGroup& g, const std::string& name);

// For all nested K <= S <= G, the product formula S (N_G(S) ∩ N_G(K)) equals
// the defining set {g in N_G(S) : g K g^-1 in Cl_S(K)}.
std::vector<OracleReport> generalized_normalizer_oracle(const FiniteGroup& g,
                                                        const std::string& name);

// For all nested K <= S <= G: whenever N_S(K)/K has a complement in
// N_{N_G(S,K)}(K)/K, the union-of-cosets construction yields an exact,
// S-transitive, N_G(S,K)-closed partial set with degeneracy 1; otherwise no
// quotient coset model does.
std::vector<OracleReport> partial_complement_oracle(const FiniteGroup& g,
                                                    const std::string& name);

// All three oracles over the fixed corpus: abstract C4, C6, D3, D4 plus the
// realized D8, D4h, D6h, D8h, Oh and Td point groups.
std::vector<OracleReport> theorem_corpus_verification();

// Brute-force verification of the point-group tables for every family
// instance with n <= 8 plus the fixed cubic and icosahedral groups: realized
// subgroups are normal in their realized normalizers, tabulated complements
// verify, and canonical breaking objects have trivial stabilizers (and carry
// the full complement symmetry where one exists).
std::vector<OracleReport> tables_verification(int max_n = 8);

}  // namespace sbs
