#pragma once

// Integer lattice helpers: solving u . y = 1 for a primitive u, and a basis
// for the lattice spanned by a set of integer vectors.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "knotcord/matrix.hpp"

namespace knotcord {

/// Some y with u . y = gcd(u), via a chain of extended gcds.
inline IntVector bezout_vector(std::span<const Integer> u) {
  IntVector y(u.size(), Integer(0));
  Integer g = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (g == 0) {
      g = u[i];
      y[i] = 1;
      continue;
    }
    Integer d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), u[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) y[j] *= s;
    y[i] = t;
    g = d;
  }
  if (g < 0)
    for (auto& c : y) c = -c;
  return y;
}

/// Rows of the Hermite form of `rows`: a basis of the lattice they span.
inline std::vector<IntVector> lattice_basis(std::vector<IntVector> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < n && pivot < rows.size(); ++col) {
    for (;;) {
      // smallest nonzero |entry| in this column at or below the pivot row
      std::optional<std::size_t> best;
      for (std::size_t r = pivot; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (!best || abs(rows[r][col]) < abs(rows[*best][col]))) best = r;
      if (!best) break;
      std::swap(rows[pivot], rows[*best]);
      bool done = true;
      for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[pivot][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  rows.resize(pivot);
  return rows;
}

}  // namespace knotcord
