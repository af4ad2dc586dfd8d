#pragma once

// Seeded generators of Seifert forms, knot expressions and angles for
// property tests and the verification harness. Values depend only on the
// seed (raw mt19937_64 output reduced by modulo), not on the standard
// library's distribution implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "knotcord/angle.hpp"
#include "knotcord/expr.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1U) != 0; }

  long odd(long lo, long hi) {
    for (;;) {
      const long x = uniform(lo, hi);
      if (x % 2 != 0) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// A unimodular skew form congruent to the standard symplectic one.
inline IntMatrix random_symplectic(Rng& rng, int genus) {
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  IntMatrix omega(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    omega(i, i + 1) = 1;
    omega(i + 1, i) = -1;
  }
  if (n == 0) return omega;
  // Congruence by elementary matrices: row i += c row j, then column i += c column j.
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const long c = rng.coin() ? 1 : -1;
    for (std::size_t k = 0; k < n; ++k) omega(i, k) += c * omega(j, k);
    for (std::size_t k = 0; k < n; ++k) omega(k, i) += c * omega(k, j);
  }
  return omega;
}

/// V = S + (strict upper part of Omega) with S symmetric, so V - V^T = Omega.
inline SeifertMatrix random_seifert(Rng& rng, int genus, long entry_bound = 2) {
  const IntMatrix omega = random_symplectic(rng, genus);
  const std::size_t n = omega.rows();
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const long s = rng.uniform(-entry_bound, entry_bound);
      v(i, j) = s + (j > i ? omega(i, j) : Integer(0));
      if (j > i) v(j, i) = s;
    }
  return validate(std::move(v), "random");
}

/// A random primitive vector with entries in [-bound, bound].
inline IntVector random_primitive(Rng& rng, std::size_t n, long bound = 3) {
  for (;;) {
    IntVector v(n);
    for (auto& x : v) x = rng.uniform(-bound, bound);
    if (content(v) == 1) return v;
  }
}

namespace detail {

inline KnotExpr random_leaf(Rng& rng, int max_genus) {
  for (;;) {
    switch (rng.uniform(0, 3)) {
      case 0: {
        const int k = static_cast<int>(rng.uniform(1, std::min(2, max_genus)));
        std::vector<long> p;
        for (int i = 0; i < 2 * k + 1; ++i) p.push_back(rng.odd(-7, 9));
        return KnotExpr::pretzel(std::move(p));
      }
      case 1: {
        const long q = 2 * rng.uniform(1, std::min(3, max_genus)) + 1;
        return KnotExpr::torus2(q);
      }
      case 2: {
        long m = 0;
        while (m == 0) m = rng.uniform(-4, 4);
        return KnotExpr::twist(m);
      }
      default: {
        const int g = static_cast<int>(rng.uniform(1, std::min(2, max_genus)));
        return KnotExpr::literal(random_seifert(rng, g).entries());
      }
    }
  }
}

inline KnotExpr random_unary(Rng& rng, KnotExpr e) {
  switch (rng.uniform(0, 4)) {
    case 0: return KnotExpr::reverse(std::move(e));
    case 1: return KnotExpr::inverse(std::move(e));
    case 2: return KnotExpr::mirror(std::move(e));
    default: return e;
  }
}

}  // namespace detail

/// Expression of genus between 1 and max_genus built from every constructor
/// and operator.
inline KnotExpr random_knot_expr(Rng& rng, int max_genus) {
  const int target = static_cast<int>(rng.uniform(1, max_genus));
  KnotExpr acc;
  int genus = 0;
  while (genus < target) {
    KnotExpr leaf = detail::random_unary(rng, detail::random_leaf(rng, target - genus));
    genus += g3_upper(leaf);
    acc = genus == g3_upper(leaf) ? leaf : KnotExpr::sum(acc, leaf);
  }
  return detail::random_unary(rng, acc);
}

/// `count` distinct angles drawn from the grid, in grid order.
inline std::vector<RationalAngle> sample_angles(Rng& rng, std::size_t count,
                                                const std::vector<RationalAngle>& grid = default_angle_grid()) {
  std::vector<bool> take(grid.size(), false);
  std::size_t chosen = 0;
  while (chosen < std::min(count, grid.size())) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(grid.size()) - 1));
    if (!take[i]) {
      take[i] = true;
      ++chosen;
    }
  }
  std::vector<RationalAngle> out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (take[i]) out.push_back(grid[i]);
  return out;
}

}  // namespace knotcord
