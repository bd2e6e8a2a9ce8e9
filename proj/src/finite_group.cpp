#include "sbs/finite_group.hpp"

#include <algorithm>
#include <random>

namespace sbs {

FiniteGroup FiniteGroup::from_table(std::vector<uint16_t> table, int order) {
  if (order < 1 || order > 65535) fail(errc::invalid_input, "group order out of range");
  if (table.size() != static_cast<size_t>(order) * order)
    fail(errc::invalid_input, "composition table has wrong size");
  for (uint16_t v : table)
    if (v >= order) fail(errc::invalid_input, "composition table entry out of range");

  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);

  int identity = -1;
  for (int e = 0; e < order; ++e) {
    bool neutral = true;
    for (int x = 0; x < order && neutral; ++x)
      neutral = g.compose(e, x) == x && g.compose(x, e) == x;
    if (neutral) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail(errc::not_invertible, "no identity element in table");
  g.identity_ = identity;

  g.inverse_.assign(order, 0);
  for (int x = 0; x < order; ++x) {
    int inv = -1;
    for (int y = 0; y < order; ++y) {
      if (g.compose(x, y) == identity && g.compose(y, x) == identity) {
        inv = y;
        break;
      }
    }
    if (inv < 0) fail(errc::not_invertible, "element without two-sided inverse");
    g.inverse_[x] = static_cast<uint16_t>(inv);
  }
  return g;
}

bool FiniteGroup::is_associative_exhaustive() const {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;
  return true;
}

bool FiniteGroup::is_associative_sampled(int samples, uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, order_ - 1);
  for (int i = 0; i < samples; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;
  }
  return true;
}

std::vector<int> subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!seen[x]) {
      seen[x] = 1;
      work.push_back(x);
    }
  };
  add(g.identity());
  for (int x : generators) add(x);
  for (size_t i = 0; i < work.size(); ++i)
    for (int x : generators) add(g.compose(work[i], x));
  std::sort(work.begin(), work.end());
  return work;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  if (n > 65535) fail(errc::closure_overflow, "direct product too large");
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    int xa = x / nb, xb = x % nb;
    for (int y = 0; y < n; ++y) {
      int ya = y / nb, yb = y % nb;
      table[static_cast<size_t>(x) * n + y] =
          static_cast<uint16_t>(a.compose(xa, ya) * nb + b.compose(xb, yb));
    }
  }
  return FiniteGroup::from_table(std::move(table), n);
}

FiniteGroup cyclic_group(int n) {
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a + b) % n);
  return FiniteGroup::from_table(std::move(table), n);
}

FiniteGroup dihedral_group(int n) {
  // Element r^k f^j encoded as k + n*j; f r f = r^-1.
  int order = 2 * n;
  auto enc = [&](int k, int j) { return ((k % n + n) % n) + n * j; };
  std::vector<uint16_t> table(static_cast<size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    int kx = x % n, jx = x / n;
    for (int y = 0; y < order; ++y) {
      int ky = y % n, jy = y / n;
      // (r^kx f^jx)(r^ky f^jy) = r^(kx + s*ky) f^(jx^jy), s = +-1 by jx
      int k = jx == 0 ? kx + ky : kx - ky;
      table[static_cast<size_t>(x) * order + y] = static_cast<uint16_t>(enc(k, jx ^ jy));
    }
  }
  return FiniteGroup::from_table(std::move(table), order);
}

}  // namespace sbs
