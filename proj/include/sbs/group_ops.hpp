#pragma once

#include <optional>
#include <vector>

#include "sbs/finite_group.hpp"

namespace sbs {

// A subgroup is a sorted list of element indices of its parent group. The
// parent is passed explicitly to each operation.
struct Subgroup {
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const;
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup subgroup_from(const FiniteGroup& g, const std::vector<int>& generators);

bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
bool is_subset(const Subgroup& a, const Subgroup& b);

// Conjugate subgroup g S g^-1.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int by);

// Every distinct subgroup, by cyclic-extension enumeration, sorted by
// (order, lexicographic member list). Throws SubgroupOverflow past max_count.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_count = 100000);

// Orbit of a point under a group action, duplicates removed with the action's
// equality, in first-visit order (element index order).
template <class Point, class Act, class Eq>
std::vector<Point> orbit(const FiniteGroup& g, Act&& act, Eq&& eq, const Point& x) {
  std::vector<Point> out;
  auto known = [&](const Point& p) {
    for (const Point& q : out)
      if (eq(q, p)) return true;
    return false;
  };
  for (int i = 0; i < g.order(); ++i) {
    Point p = act(i, x);
    if (!known(p)) out.push_back(std::move(p));
  }
  return out;
}

template <class Point, class Act, class Eq>
Subgroup stabilizer(const FiniteGroup& g, Act&& act, Eq&& eq, const Point& x) {
  Subgroup s;
  for (int i = 0; i < g.order(); ++i)
    if (eq(act(i, x), x)) s.members.push_back(i);
  return s;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);

// All distinct conjugates g S g^-1; count equals |G| / |N_G(S)|.
std::vector<Subgroup> conjugacy_class_of_subgroup(const FiniteGroup& g, const Subgroup& s);

struct Quotient {
  FiniteGroup group;
  std::vector<int> project;            // parent index -> quotient index
  std::vector<std::vector<int>> lift;  // quotient index -> coset members (sorted)
};

// Quotient by a normal subgroup. Quotient element 0 is the coset N itself;
// the rest are indexed by first appearance when scanning parent indices.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

// Image of a subgroup under the quotient projection.
Subgroup project_subgroup(const Quotient& q, const Subgroup& s);
// Union of the cosets lifting a quotient subgroup.
Subgroup lift_subgroup(const Quotient& q, const Subgroup& s);

// Some H with |H| = |G|/|S|, H∩S = {e}, SH = G, or nullopt. Deterministic:
// first candidate in all_subgroups order.
std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& s);

// Check of the complement property for a given candidate.
bool is_complement(const FiniteGroup& g, const Subgroup& s, const Subgroup& h);

// S (N_G(S) ∩ N_G(K)) for K <= S <= G; equals {g in N_G(S) : gKg^-1 in Cl_S(K)}.
Subgroup generalized_normalizer(const FiniteGroup& g, const Subgroup& s, const Subgroup& k);

// The defining set of the generalized normalizer, for cross-checks.
Subgroup generalized_normalizer_by_definition(const FiniteGroup& g, const Subgroup& s,
                                              const Subgroup& k);

// One representative per left coset gS: the identity first, then the smallest
// element index per coset in ascending order.
std::vector<int> left_transversal(const FiniteGroup& g, const Subgroup& s);

// Product set {s*h : s in S, h in H} as a sorted index list (not always a group).
std::vector<int> product_set(const FiniteGroup& g, const Subgroup& s, const Subgroup& h);

// A subgroup as a standalone group; second value maps its indices back to the
// parent's element indices (in sorted member order).
std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g,
                                                           const Subgroup& s);

}  // namespace sbs
