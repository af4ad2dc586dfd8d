#pragma once

// Factorization of integer polynomials: squarefree decomposition (Yun),
// factorization modulo a small prime (distinct-degree then Cantor-Zassenhaus),
// multifactor Hensel lifting and Zassenhaus recombination. Sized for the
// Alexander polynomials of hand-built knots (degree a few dozen at most).

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "knotcord/polynomial.hpp"

namespace knotcord {

namespace modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // constant term first, trimmed

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline Poly reduce(const IntPoly& f, u64 p) {
  Poly r(f.size());
  const Integer mod(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), f[i].get_mpz_t(), mod.get_mpz_t());
    r[i] = c.get_ui();
  }
  trim(r);
  return r;
}

inline Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
  trim(r);
  return r;
}

inline Poly monic(const Poly& a, u64 p) { return a.empty() ? a : scale(a, inv(a.back(), p), p); }

/// Quotient and remainder; b must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
  assert(!b.empty());
  if (a.size() < b.size()) return {{}, a};
  const u64 lead_inv = inv(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const u64 c = mulmod(a.back(), lead_inv, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, u64 p) { return divmod(a, b, p).second; }

inline Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// s, t with s a + t b = gcd(a, b) (monic).
inline std::pair<Poly, Poly> xgcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 li = inv(r0.back(), p);
  return {scale(s0, li, p), scale(t0, li, p)};
}

/// base^e mod m, with a multiprecision exponent.
inline Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

inline Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], i % p, p);
  trim(d);
  return d;
}

struct SplitMix {
  u64 state;
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Splits a monic squarefree product of irreducibles of degree d.
inline void equal_degree_split(const Poly& f, std::size_t d, u64 p, SplitMix& rng, std::vector<Poly>& out) {
  const std::size_t n = f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  for (;;) {
    Poly a(n);
    for (auto& c : a) c = rng.next() % p;
    trim(a);
    if (a.size() <= 1) continue;
    Poly b = sub(powmod(a, e, f, p), Poly{1}, p);
    Poly g = gcd(f, b, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic squarefree polynomial, odd p.
inline std::vector<Poly> factor_squarefree(Poly f, u64 p) {
  std::vector<Poly> out;
  SplitMix rng{0x5eed0000ULL + p};
  Poly h{0, 1};  // x
  const Poly x{0, 1};
  for (std::size_t d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace modp

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Integer symmetric_mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

inline IntPoly reduce_mod(IntPoly f, const Integer& m, bool symmetric) {
  for (auto& c : f) {
    if (symmetric) {
      c = symmetric_mod(c, m);
    } else {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
      c = r;
    }
  }
  poly::trim(f);
  return f;
}

inline IntPoly lift_poly(const modp::Poly& f) {
  IntPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = Integer(static_cast<unsigned long>(f[i]));
  return r;
}

// Lifts f = g h (mod p) to f = G H (mod p^k), g monic, lc(H) = lc(f).
inline std::pair<IntPoly, IntPoly> hensel_two(const IntPoly& f, const modp::Poly& g, const modp::Poly& h,
                                              std::uint64_t p, unsigned k) {
  const auto [s, t] = modp::xgcd(g, h, p);
  IntPoly big_g = lift_poly(g), big_h = lift_poly(h);
  big_h.back() = f.back();
  const Integer pz(static_cast<unsigned long>(p));
  Integer m = pz;
  for (unsigned step = 1; step < k; ++step) {
    IntPoly err = poly::sub(f, poly::mul(big_g, big_h));
    for (auto& c : err) {
      assert(mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()));
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    const modp::Poly e = modp::reduce(err, p);
    const auto [q, r] = modp::divmod(modp::mul(t, e, p), g, p);
    const modp::Poly dh = modp::add(modp::mul(s, e, p), modp::mul(q, h, p), p);
    big_g = poly::add(big_g, poly::scale(lift_poly(r), m));
    big_h = poly::add(big_h, poly::scale(lift_poly(dh), m));
    m *= pz;
    big_g = reduce_mod(big_g, m, false);
    const Integer lead = big_h.back();
    big_h = reduce_mod(big_h, m, false);
    big_h.resize(std::max(big_h.size(), f.size() - big_g.size() + 1));
    big_h.back() = f.back();
    (void)lead;
  }
  return {big_g, big_h};
}

inline std::vector<IntPoly> hensel_lift(IntPoly f, std::vector<modp::Poly> factors, std::uint64_t p, unsigned k) {
  std::vector<IntPoly> lifted;
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), p, k);
  while (factors.size() > 1) {
    modp::Poly rest{1};
    for (std::size_t i = 1; i < factors.size(); ++i) rest = modp::mul(rest, factors[i], p);
    rest = modp::scale(rest, modp::reduce(IntPoly{f.back()}, p).front(), p);
    auto [g, h] = hensel_two(f, factors.front(), rest, p, k);
    lifted.push_back(std::move(g));
    f = std::move(h);
    factors.erase(factors.begin());
  }
  // Remaining factor: f / lc(f), monic modulo p^k.
  Integer lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  lifted.push_back(reduce_mod(poly::scale(f, lead_inv), modulus, false));
  return lifted;
}

// Irreducible factors of a primitive squarefree polynomial with positive
// leading coefficient and degree >= 1.
inline std::vector<IntPoly> zassenhaus(IntPoly f) {
  const int n = poly::degree(f);
  if (n <= 1) return {f};

  // Pick the prime (among a few admissible ones) with the fewest modular factors.
  std::uint64_t best_p = 0;
  std::vector<modp::Poly> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    const modp::Poly fp = modp::reduce(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (modp::gcd(fp, modp::derivative(fp, p), p).size() != 1) continue;
    ++tried;
    auto facs = modp::factor_squarefree(modp::monic(fp, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) return {f};
  }
  assert(best_p != 0);

  // Lift beyond twice a coefficient bound for lc(f) * (any factor).
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = 2 * abs(f.back()) * maxc * (n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  unsigned k = 1;
  Integer modulus(static_cast<unsigned long>(best_p));
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(best_p);
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_lift(f, best, best_p, k);

  std::vector<IntPoly> result;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    for (;;) {
      IntPoly candidate{f.back()};
      for (std::size_t i : idx) candidate = reduce_mod(poly::mul(candidate, lifted[i]), modulus, true);
      candidate = poly::primitive_part(candidate);
      if (auto q = poly::divide_exact(f, candidate)) {
        result.push_back(candidate);
        f = std::move(*q);
        for (std::size_t i = idx.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = subset_size;
      while (i-- > 0 && idx[i] == lifted.size() - subset_size + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (poly::degree(f) >= 1) result.push_back(poly::primitive_part(f));
  return result;
}

}  // namespace detail

struct Factorization {
  /// Signed content.
  Integer unit_content = 1;
  /// Irreducible primitive factors with positive leading coefficient and
  /// their multiplicities, sorted by degree then coefficients.
  std::vector<std::pair<IntPoly, int>> factors;
};

/// Squarefree decomposition f = c * prod a_i^i of a nonzero polynomial (Yun).
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly prim = poly::primitive_part(f);
  if (poly::degree(prim) < 1) return out;
  const IntPoly a0 = poly::gcd(prim, poly::derivative(prim));
  IntPoly b = *poly::divide_exact(prim, a0);
  IntPoly c = *poly::divide_exact(poly::derivative(prim), a0);
  IntPoly d = poly::sub(c, poly::derivative(b));
  for (int i = 1; poly::degree(b) >= 1; ++i) {
    const IntPoly a = poly::gcd(b, d);
    if (poly::degree(a) >= 1) out.emplace_back(a, i);
    b = *poly::divide_exact(b, a);
    c = *poly::divide_exact(d, a);
    d = poly::sub(c, poly::derivative(b));
  }
  return out;
}

inline Factorization factor(const IntPoly& f) {
  assert(!f.empty());
  Factorization result;
  result.unit_content = poly::content(f);
  if (f.back() < 0) result.unit_content = -result.unit_content;
  for (auto& [part, mult] : squarefree_decomposition(f))
    for (auto& irreducible : detail::zassenhaus(part)) result.factors.emplace_back(std::move(irreducible), mult);
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return result;
}

}  // namespace knotcord
