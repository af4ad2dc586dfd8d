#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcord/matrix.hpp"

namespace knotcord {

/// Dense integer polynomial, coefficients from the constant term upward.
/// The zero polynomial is the empty vector.
using IntPoly = std::vector<Integer>;

namespace poly {

inline void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const IntPoly& f) { return static_cast<int>(f.size()) - 1; }

inline const Integer& leading(const IntPoly& f) { return f.back(); }

inline IntPoly constant(const Integer& c) {
  if (c == 0) return {};
  return {c};
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline IntPoly scale(IntPoly f, const Integer& c) {
  for (auto& x : f) x *= c;
  trim(f);
  return f;
}

inline IntPoly pow(const IntPoly& f, unsigned e) {
  IntPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

inline IntPoly derivative(const IntPoly& f) {
  if (f.size() <= 1) return {};
  IntPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(d);
  return d;
}

/// Coefficients reversed: t^deg f(1/t).
inline IntPoly reciprocal(IntPoly f) {
  std::reverse(f.begin(), f.end());
  trim(f);
  return f;
}

inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// Content removed and sign fixed so the leading coefficient is positive.
inline IntPoly primitive_part(IntPoly f) {
  if (f.empty()) return f;
  Integer c = content(f);
  if (leading(f) < 0) c = -c;
  for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return f;
}

inline Integer evaluate(const IntPoly& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Remainder of f modulo a monic polynomial m.
inline IntPoly rem_monic(IntPoly f, const IntPoly& m) {
  assert(!m.empty() && leading(m) == 1);
  const std::size_t dm = m.size() - 1;
  while (f.size() > dm && !f.empty()) {
    const Integer c = f.back();
    const std::size_t shift = f.size() - 1 - dm;
    if (c != 0)
      for (std::size_t i = 0; i <= dm; ++i) f[shift + i] -= c * m[i];
    f.pop_back();
    trim(f);
  }
  trim(f);
  return f;
}

/// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[t].
inline std::optional<IntPoly> divide_exact(IntPoly a, const IntPoly& b) {
  assert(!b.empty());
  trim(a);
  if (a.empty()) return IntPoly{};
  if (a.size() < b.size()) return std::nullopt;
  IntPoly q(a.size() - b.size() + 1);
  const Integer& lb = leading(b);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    q[shift] = c;
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

/// Primitive gcd over Z[t] (positive leading coefficient), via primitive
/// pseudo-remainder sequences.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b
    IntPoly r = a;
    const Integer lb = leading(b);
    while (!r.empty() && r.size() >= b.size()) {
      const Integer lr = leading(r);
      const std::size_t shift = r.size() - b.size();
      for (auto& x : r) x *= lb;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
      r.pop_back();
      trim(r);
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

/// Rational coefficients back to integers, when all are integral.
inline std::optional<IntPoly> to_integer_poly(const std::vector<Rational>& f) {
  IntPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].get_den() != 1) return std::nullopt;
    r[i] = f[i].get_num();
  }
  trim(r);
  return r;
}

/// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
inline std::vector<Rational> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  assert(ys.size() == n);
  // Newton divided differences.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  std::vector<Rational> result(n, Rational(0));
  // Horner expansion of the Newton form from the innermost term outward.
  std::vector<Rational> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * Rational(xs[k]);
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  for (std::size_t i = 0; i < n && i < acc.size(); ++i) result[i] = acc[i];
  return result;
}

}  // namespace poly

/// The q-th cyclotomic polynomial.
inline IntPoly cyclotomic(unsigned q) {
  assert(q >= 1);
  thread_local std::map<unsigned, IntPoly> cache;
  if (const auto it = cache.find(q); it != cache.end()) return it->second;
  IntPoly f(q + 1);
  f[0] = -1;
  f[q] = 1;  // t^q - 1
  for (unsigned d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    auto quotient = poly::divide_exact(f, cyclotomic(d));
    assert(quotient);
    f = std::move(*quotient);
  }
  cache.emplace(q, f);
  return f;
}

/// True when f vanishes at the primitive q-th roots of unity.
inline bool vanishes_at_primitive_root(const IntPoly& f, unsigned q) {
  return poly::rem_monic(f, cyclotomic(q)).empty();
}

/// Integer Laurent polynomial, stored sparsely by exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, Integer> terms) : terms_(std::move(terms)) { prune(); }

  /// sum_i f[i] t^(i + shift)
  static LaurentPoly from_dense(const IntPoly& f, int shift = 0) {
    std::map<int, Integer> t;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] != 0) t[static_cast<int>(i) + shift] = f[i];
    return LaurentPoly(std::move(t));
  }

  static LaurentPoly one() { return LaurentPoly({{0, Integer(1)}}); }

  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  /// Difference between the extreme exponents.
  int span() const { return max_exponent() - min_exponent(); }

  Integer coefficient(int e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Ordinary polynomial t^(-min) * f.
  IntPoly dense() const {
    IntPoly f;
    if (terms_.empty()) return f;
    f.assign(static_cast<std::size_t>(span()) + 1, Integer(0));
    for (const auto& [e, c] : terms_) f[static_cast<std::size_t>(e - min_exponent())] = c;
    return f;
  }

  /// Canonical representative of the class up to units +-t^k: exponents
  /// centred on zero (when the span is even) and a positive leading
  /// coefficient.
  LaurentPoly normalized() const {
    if (terms_.empty()) return *this;
    const int total = min_exponent() + max_exponent();
    const int shift = -(total >= 0 ? total / 2 : -((1 - total) / 2));
    std::map<int, Integer> t;
    const bool flip = terms_.rbegin()->second < 0;
    for (const auto& [e, c] : terms_) t[e + shift] = flip ? Integer(-c) : c;
    return LaurentPoly(std::move(t));
  }

  /// f(t) == f(1/t)
  bool is_symmetric() const {
    for (const auto& [e, c] : terms_)
      if (coefficient(-e) != c) return false;
    return true;
  }

  Integer evaluate(const Integer& x) const {
    // Only meaningful for x = +-1 when exponents are negative.
    Integer acc = 0;
    for (const auto& [e, c] : terms_) {
      Integer p;
      if (e >= 0) {
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
      } else {
        assert(x == 1 || x == -1);
        p = (e % 2 == 0) ? Integer(1) : x;
      }
      acc += c * p;
    }
    return acc;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, Integer> t;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) t[ea + eb] += ca * cb;
    return LaurentPoly(std::move(t));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// e.g. "2t^2 - 3t + 1 - t^-1"; "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool first = s.empty();
      Integer mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (e == 0) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str();
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  std::map<int, Integer> terms_;
};

}  // namespace knotcord
