#include "sbs/group_ops.hpp"

#include <algorithm>
#include <set>

namespace sbs {

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (members.size() != o.members.size()) return members.size() < o.members.size();
  return members < o.members;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.members[i] = i;
  return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup subgroup_from(const FiniteGroup& g, const std::vector<int>& generators) {
  return Subgroup{subgroup_generated(g, generators)};
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (!s.contains(g.identity())) return false;
  for (int a : s.members) {
    if (!s.contains(g.inverse(a))) return false;
    for (int b : s.members)
      if (!s.contains(g.compose(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int x = 0; x < g.order(); ++x)
    for (int a : s.members)
      if (!s.contains(g.conjugate(x, a))) return false;
  return true;
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int by) {
  Subgroup out;
  out.members.reserve(s.members.size());
  for (int a : s.members) out.members.push_back(g.conjugate(by, a));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_count) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  std::vector<size_t> frontier;

  auto add = [&](std::vector<int> members) -> bool {
    auto [it, fresh] = seen.insert(std::move(members));
    if (!fresh) return false;
    if (static_cast<int>(out.size()) >= max_count)
      fail(errc::subgroup_overflow, "subgroup count exceeds max_count");
    out.push_back(Subgroup{*it});
    frontier.push_back(out.size() - 1);
    return true;
  };

  add({g.identity()});
  // Grow each known subgroup by adjoining one extra element until fixpoint.
  for (size_t i = 0; i < frontier.size(); ++i) {
    Subgroup h = out[frontier[i]];
    for (int x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<int> gens = h.members;
      gens.push_back(x);
      add(subgroup_generated(g, gens));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  Subgroup out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int a : s.members) {
      if (!s.contains(g.conjugate(x, a))) {
        ok = false;
        break;
      }
    }
    if (ok) out.members.push_back(x);
  }
  return out;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  Subgroup out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int a : s.members) {
      if (g.compose(x, a) != g.compose(a, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.members.push_back(x);
  }
  return out;
}

std::vector<Subgroup> conjugacy_class_of_subgroup(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Subgroup> out;
  for (int x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate_subgroup(g, s, x);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n)) fail(errc::invalid_input, "quotient: not a subgroup");
  if (!is_normal(g, n)) fail(errc::not_normal, "quotient: subgroup is not normal");

  int order = g.order();
  Quotient q;
  q.project.assign(order, -1);

  // Coset of the identity gets index 0, the rest by first appearance.
  auto assign_coset = [&](int rep) {
    int idx = static_cast<int>(q.lift.size());
    std::vector<int> coset;
    for (int m : n.members) coset.push_back(g.compose(rep, m));
    std::sort(coset.begin(), coset.end());
    for (int m : coset) q.project[m] = idx;
    q.lift.push_back(std::move(coset));
  };
  assign_coset(g.identity());
  for (int x = 0; x < order; ++x)
    if (q.project[x] < 0) assign_coset(x);

  int qn = static_cast<int>(q.lift.size());
  std::vector<uint16_t> table(static_cast<size_t>(qn) * qn);
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b)
      table[static_cast<size_t>(a) * qn + b] =
          static_cast<uint16_t>(q.project[g.compose(q.lift[a][0], q.lift[b][0])]);
  q.group = FiniteGroup::from_table(std::move(table), qn);
  return q;
}

Subgroup project_subgroup(const Quotient& q, const Subgroup& s) {
  std::set<int> img;
  for (int m : s.members) img.insert(q.project[m]);
  Subgroup out;
  out.members.assign(img.begin(), img.end());
  return out;
}

Subgroup lift_subgroup(const Quotient& q, const Subgroup& s) {
  Subgroup out;
  for (int c : s.members)
    out.members.insert(out.members.end(), q.lift[c].begin(), q.lift[c].end());
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool is_complement(const FiniteGroup& g, const Subgroup& s, const Subgroup& h) {
  if (static_cast<long>(s.order()) * h.order() != g.order()) return false;
  int common = 0;
  for (int x : h.members)
    if (s.contains(x)) ++common;
  if (common != 1 || !h.contains(g.identity()) || !s.contains(g.identity())) return false;
  // Unique factorization: |S||H| = |G| and trivial intersection imply the
  // products are pairwise distinct; confirm coverage anyway.
  std::vector<char> hit(g.order(), 0);
  for (int a : s.members)
    for (int b : h.members) hit[g.compose(a, b)] = 1;
  for (char c : hit)
    if (!c) return false;
  return true;
}

std::optional<Subgroup> find_complement(const FiniteGroup& g, const Subgroup& s) {
  if (g.order() % s.order() != 0) return std::nullopt;
  int target = g.order() / s.order();
  for (const Subgroup& h : all_subgroups(g)) {
    if (h.order() != target) continue;
    if (is_complement(g, s, h)) return h;
  }
  return std::nullopt;
}

Subgroup generalized_normalizer(const FiniteGroup& g, const Subgroup& s, const Subgroup& k) {
  if (!is_subset(k, s)) fail(errc::not_nested, "generalized_normalizer: K is not inside S");
  Subgroup ns = normalizer(g, s);
  Subgroup nk = normalizer(g, k);
  Subgroup both;
  std::set_intersection(ns.members.begin(), ns.members.end(), nk.members.begin(),
                        nk.members.end(), std::back_inserter(both.members));
  std::set<int> prod;
  for (int a : s.members)
    for (int b : both.members) prod.insert(g.compose(a, b));
  Subgroup out;
  out.members.assign(prod.begin(), prod.end());
  if (!is_subgroup(g, out))
    fail(errc::group_not_closed, "generalized normalizer product set is not a group");
  return out;
}

Subgroup generalized_normalizer_by_definition(const FiniteGroup& g, const Subgroup& s,
                                              const Subgroup& k) {
  if (!is_subset(k, s)) fail(errc::not_nested, "generalized_normalizer: K is not inside S");
  std::vector<Subgroup> cls;
  for (int x : s.members) {
    Subgroup c = conjugate_subgroup(g, k, x);
    if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(std::move(c));
  }
  Subgroup ns = normalizer(g, s);
  Subgroup out;
  for (int x : ns.members) {
    Subgroup c = conjugate_subgroup(g, k, x);
    if (std::find(cls.begin(), cls.end(), c) != cls.end()) out.members.push_back(x);
  }
  return out;
}

std::vector<int> left_transversal(const FiniteGroup& g, const Subgroup& s) {
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  auto cover = [&](int rep) {
    reps.push_back(rep);
    for (int m : s.members) covered[g.compose(rep, m)] = 1;
  };
  cover(g.identity());
  for (int x = 0; x < g.order(); ++x)
    if (!covered[x]) cover(x);
  return reps;
}

std::vector<int> product_set(const FiniteGroup& g, const Subgroup& s, const Subgroup& h) {
  std::set<int> prod;
  for (int a : s.members)
    for (int b : h.members) prod.insert(g.compose(a, b));
  return std::vector<int>(prod.begin(), prod.end());
}

std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g,
                                                           const Subgroup& s) {
  if (!is_subgroup(g, s)) fail(errc::invalid_input, "subgroup_as_group: not a subgroup");
  int n = s.order();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < n; ++i) pos[s.members[i]] = i;
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] =
          static_cast<uint16_t>(pos[g.compose(s.members[a], s.members[b])]);
  return {FiniteGroup::from_table(std::move(table), n), s.members};
}

}  // namespace sbs
