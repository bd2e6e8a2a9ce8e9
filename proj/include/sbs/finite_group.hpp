#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbs/errors.hpp"

namespace sbs {

// A finite group as a composition table over element indices 0..order-1.
// Immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // table is row-major: table[a * order + b] = a*b. Identity and inverses are
  // located and checked; associativity is the caller's responsibility (the
  // test suite checks it exhaustively for small orders).
  static FiniteGroup from_table(std::vector<uint16_t> table, int order);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int compose(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int g, int x) const { return compose(compose(g, x), inverse(g)); }

  const std::vector<uint16_t>& table() const { return table_; }

  bool is_associative_exhaustive() const;
  bool is_associative_sampled(int samples, uint64_t seed) const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inverse_;
};

// Closure of opaque generators under a binary operation: the group plus the
// per-element labels in deterministic order (generators first in the given
// order, then products breadth-first).
template <class T>
struct Closure {
  FiniteGroup group;
  std::vector<T> labels;
};

template <class T, class Compose, class Eq>
Closure<T> close_generators(const std::vector<T>& generators, Compose&& op, Eq&& eq,
                            int max_order) {
  if (generators.empty()) fail(errc::invalid_input, "close_generators: no generators");
  if (max_order < 1) fail(errc::invalid_input, "close_generators: max_order must be >= 1");
  std::vector<T> elems;
  auto find = [&](const T& x) -> int {
    for (size_t i = 0; i < elems.size(); ++i)
      if (eq(elems[i], x)) return static_cast<int>(i);
    return -1;
  };
  for (const T& g : generators)
    if (find(g) < 0) elems.push_back(g);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const T& g : generators) {
      T p = op(elems[i], g);
      if (find(p) < 0) {
        if (static_cast<int>(elems.size()) >= max_order)
          fail(errc::closure_overflow, "closure exceeds max_order");
        elems.push_back(std::move(p));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = find(op(elems[a], elems[b]));
      if (c < 0) fail(errc::group_not_closed, "closure is not closed under composition");
      table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(c);
    }
  }
  return Closure<T>{FiniteGroup::from_table(std::move(table), n), std::move(elems)};
}

// Subgroup of the group generated by the given element indices (BFS order on
// the index level; returned sorted).
std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators);

// Direct product A x B; element (a, b) gets index a * B.order() + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Abstract cyclic and dihedral groups, handy for geometry-free tests.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);  // order 2n

}  // namespace sbs
