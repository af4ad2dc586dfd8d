#pragma once

// Abelian invariants of Seifert forms: Alexander polynomial, determinant and
// Levine-Tristram signatures at rational points of the circle.
//
// Signatures are exact. For omega = exp(2 pi i p/q) the Hermitian matrix
//   M(omega) = (1 - omega) V + (1 - conj(omega)) V^T
// equals (1 - cos) * H(t) with H(t) = (V + V^T) - i t (V - V^T) and
// t = cot(pi p/q). The coefficients of det(lambda - H(t)) are integer
// polynomials in u = t^2, obtained by interpolation from Gaussian-integer
// characteristic polynomials. Since H is Hermitian its characteristic
// polynomial is real-rooted, so the number of positive eigenvalues is the
// number of sign changes in its coefficient sequence. Each coefficient sign
// at u0 = cot^2(pi p/q) is certified with outward-rounded interval
// arithmetic; exact zeros are detected by reduction modulo the cyclotomic
// polynomial, which also decides whether Delta(omega) = 0.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotcord/angle.hpp"
#include "knotcord/error.hpp"
#include "knotcord/interval.hpp"
#include "knotcord/polynomial.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

namespace detail {

struct Gaussian {
  Integer re, im;

  Gaussian() = default;
  Gaussian(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator==(const Gaussian& a, long b) { return a.im == 0 && a.re == b; }
};

/// Coefficients of det(lambda I - A), leading first: {1, c_1, ..., c_n}.
/// Berkowitz's division-free algorithm, valid over any commutative ring.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return {T(1)};
  std::vector<T> vect{T(1), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<T> toeplitz(r + 2);
    toeplitz[0] = T(1);
    toeplitz[1] = -a(r, r);
    std::vector<T> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      T s(0);
      for (std::size_t j = 0; j < r; ++j) s += a(r, j) * v[j];
      toeplitz[k] = -s;
      if (k == r + 1) break;
      std::vector<T> w(r);
      for (std::size_t i = 0; i < r; ++i) {
        T acc(0);
        for (std::size_t j = 0; j < r; ++j) acc += a(i, j) * v[j];
        w[i] = std::move(acc);
      }
      v = std::move(w);
    }
    std::vector<T> next(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * vect[j];
    vect = std::move(next);
  }
  return vect;
}

/// det(V - t V^T) as a dense polynomial in t, by interpolation at t = 0..n.
inline IntPoly alexander_determinant(const IntMatrix& v) {
  const std::size_t n = v.rows();
  const IntMatrix vt = v.transpose();
  std::vector<Integer> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    const Integer t(static_cast<unsigned long>(k));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i, j) - t * vt(i, j);
    xs.push_back(t);
    ys.push_back(determinant(std::move(m)));
  }
  auto f = poly::to_integer_poly(poly::interpolate(xs, ys));
  assert(f);
  return *f;
}

// Lazily computed data for one indecomposable diagonal block of a form.
class BlockData {
 public:
  explicit BlockData(IntMatrix v) : v_(std::move(v)) {}

  const IntMatrix& entries() const { return v_; }
  std::size_t dimension() const { return v_.rows(); }

  const IntPoly& alexander_raw() const {
    std::call_once(alex_once_, [&] { alexander_raw_ = alexander_determinant(v_); });
    return alexander_raw_;
  }

  /// det(lambda - (V + V^T)), constant term first.
  const IntPoly& symmetric_charpoly() const {
    std::call_once(sym_once_, [&] {
      auto c = berkowitz(v_ + v_.transpose());
      sym_charpoly_.assign(c.rbegin(), c.rend());
    });
    return sym_charpoly_;
  }

  /// Coefficient k of det(lambda - H(t)) as a polynomial in u = t^2.
  const std::vector<IntPoly>& coefficients_in_u() const {
    std::call_once(u_once_, [&] { compute_u_coefficients(); });
    return u_coeffs_;
  }

  bool is_jump(const RationalAngle& x) const {
    if (x.q() == 2) return symmetric_charpoly().front() == 0;
    return vanishes_at_primitive_root(alexander_raw(), static_cast<unsigned>(x.q()));
  }

  /// Signature at a non-jump angle.
  int signature(const RationalAngle& x) const {
    const std::size_t n = dimension();
    if (n == 0) return 0;
    std::vector<int> signs(n + 1, 0);
    if (x.q() == 2) {
      const IntPoly& c = symmetric_charpoly();
      for (std::size_t k = 0; k <= n; ++k) signs[k] = k < c.size() ? sgn(c[k]) : 0;
    } else {
      signs = certified_signs(x);
    }
    if (signs[0] == 0) throw Error(ErrorKind::AtJumpAngle, "form is singular at " + x.to_string());
    // Descartes: sign changes from the leading coefficient down.
    int changes = 0, last = 0;
    for (std::size_t k = n + 1; k-- > 0;) {
      if (signs[k] == 0) continue;
      if (last != 0 && signs[k] != last) ++changes;
      last = signs[k];
    }
    return 2 * changes - static_cast<int>(n);
  }

  static constexpr mpfr_prec_t kInitialPrecision = 128;
  static constexpr mpfr_prec_t kMaxPrecision = 1 << 16;

 private:
  void compute_u_coefficients() const {
    const std::size_t n = dimension();
    const std::size_t points = n / 2 + 1;
    const IntMatrix sym = v_ + v_.transpose();
    const IntMatrix skew = v_ - v_.transpose();
    std::vector<std::vector<Integer>> values(n + 1);
    std::vector<Integer> us;
    for (std::size_t j = 0; j < points; ++j) {
      const Integer t(static_cast<unsigned long>(j));
      Matrix<Gaussian> h(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h(r, c) = Gaussian(sym(r, c), -t * skew(r, c));
      const auto cp = berkowitz(h);  // leading first
      for (std::size_t k = 0; k <= n; ++k) {
        const Gaussian& coeff = cp[n - k];
        assert(coeff.im == 0);
        values[k].push_back(coeff.re);
      }
      us.push_back(t * t);
    }
    u_coeffs_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      auto f = poly::to_integer_poly(poly::interpolate(us, values[k]));
      assert(f);
      u_coeffs_[k] = std::move(*f);
    }
  }

  static int sgn(const Integer& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

  // a(u0) == 0 exactly, with u0 = cot^2(pi p/q) = -(w+1)^2/(w-1)^2, w = exp(2 pi i p/q).
  static bool vanishes_at_cot_squared(const IntPoly& a, unsigned q) {
    if (a.empty()) return true;
    const IntPoly phi = cyclotomic(q);
    const std::size_t d = a.size() - 1;
    const IntPoly plus_sq = poly::rem_monic(poly::mul({1, 1}, {1, 1}), phi);
    const IntPoly minus_sq = poly::rem_monic(poly::mul({-1, 1}, {-1, 1}), phi);
    std::vector<IntPoly> plus_pow{IntPoly{1}}, minus_pow{IntPoly{1}};
    for (std::size_t j = 1; j <= d; ++j) {
      plus_pow.push_back(poly::rem_monic(poly::mul(plus_pow.back(), plus_sq), phi));
      minus_pow.push_back(poly::rem_monic(poly::mul(minus_pow.back(), minus_sq), phi));
    }
    IntPoly acc;
    for (std::size_t j = 0; j <= d; ++j) {
      if (a[j] == 0) continue;
      IntPoly term = poly::mul(plus_pow[j], minus_pow[d - j]);
      term = poly::scale(std::move(term), j % 2 == 0 ? a[j] : Integer(-a[j]));
      acc = poly::add(acc, term);
    }
    return poly::rem_monic(acc, phi).empty();
  }

  std::vector<int> certified_signs(const RationalAngle& x) const {
    const auto& coeffs = coefficients_in_u();
    const std::size_t n = dimension();
    std::vector<int> signs(n + 1, 0);
    std::vector<bool> done(n + 1, false), zero_checked(n + 1, false);
    std::size_t remaining = n + 1;
    for (std::size_t k = 0; k <= n; ++k)
      if (coeffs[k].empty()) {
        done[k] = true;
        --remaining;
      }
    for (mpfr_prec_t prec = kInitialPrecision; remaining > 0; prec *= 2) {
      if (prec > kMaxPrecision)
        throw Error(ErrorKind::PrecisionExhausted, "could not certify signature signs at " + x.to_string());
      const Interval c = Interval::cos_two_pi(x.p(), x.q(), prec);
      const Interval one(Integer(1), prec);
      const Interval u = divide_positive(one + c, one - c);
      for (std::size_t k = 0; k <= n; ++k) {
        if (done[k]) continue;
        Interval acc(prec);
        for (auto it = coeffs[k].rbegin(); it != coeffs[k].rend(); ++it) acc = acc * u + Interval(*it, prec);
        const int s = acc.certified_sign();
        if (s != 0) {
          signs[k] = s;
        } else if (!zero_checked[k]) {
          zero_checked[k] = true;
          if (!vanishes_at_cot_squared(coeffs[k], static_cast<unsigned>(x.q()))) continue;
          signs[k] = 0;
        } else {
          continue;
        }
        done[k] = true;
        --remaining;
      }
    }
    return signs;
  }

  IntMatrix v_;
  mutable std::once_flag alex_once_, sym_once_, u_once_;
  mutable IntPoly alexander_raw_, sym_charpoly_;
  mutable std::vector<IntPoly> u_coeffs_;
};

}  // namespace detail

/// The signature function of one form, split into its indecomposable
/// diagonal blocks (signatures and Alexander polynomials are multiplicative
/// or additive over them). Repeated blocks are computed once. Work is done
/// lazily and is safe to share between threads.
class SignatureFunction {
 public:
  explicit SignatureFunction(const SeifertMatrix& v) : dimension_(v.dimension()) {
    std::map<std::string, std::size_t> seen;
    for (const auto& idx : diagonal_blocks(v.entries())) {
      IntMatrix block = principal_submatrix(v.entries(), idx);
      const std::string key = matrix_key(block);
      if (const auto it = seen.find(key); it != seen.end()) {
        ++parts_[it->second].multiplicity;
        continue;
      }
      seen.emplace(key, parts_.size());
      parts_.push_back({std::make_shared<detail::BlockData>(std::move(block)), 1});
    }
  }

  std::size_t dimension() const { return dimension_; }
  int genus() const { return static_cast<int>(dimension_ / 2); }

  bool is_jump(const RationalAngle& x) const {
    for (const auto& part : parts_)
      if (part.block->is_jump(x)) return true;
    return false;
  }

  /// sigma at x; throws AtJumpAngle when Delta(exp(2 pi i x)) = 0.
  int at(const RationalAngle& x) const {
    if (is_jump(x))
      throw Error(ErrorKind::AtJumpAngle, "Alexander polynomial vanishes at exp(2 pi i " + x.to_string() + ")");
    int total = 0;
    for (const auto& part : parts_) total += part.multiplicity * part.block->signature(x);
    return total;
  }

  std::optional<int> try_at(const RationalAngle& x) const {
    if (is_jump(x)) return std::nullopt;
    return at(x);
  }

  /// det(V - t V^T), unnormalized.
  IntPoly alexander_determinant() const {
    IntPoly f{1};
    for (const auto& part : parts_)
      for (int i = 0; i < part.multiplicity; ++i) f = poly::mul(f, part.block->alexander_raw());
    return f;
  }

  LaurentPoly alexander() const { return LaurentPoly::from_dense(alexander_determinant()).normalized(); }

  /// |det(V + V^T)|
  Integer determinant() const {
    Integer d = 1;
    for (const auto& part : parts_) {
      const Integer b = abs(part.block->symmetric_charpoly().front());
      for (int i = 0; i < part.multiplicity; ++i) d *= b;
    }
    return d;
  }

 private:
  struct Part {
    std::shared_ptr<const detail::BlockData> block;
    int multiplicity;
  };
  std::size_t dimension_;
  std::vector<Part> parts_;
};

/// Alexander polynomial det(V - t V^T), symmetric with positive leading
/// coefficient.
inline LaurentPoly alexander(const SeifertMatrix& v) { return SignatureFunction(v).alexander(); }

/// The knot determinant |Delta(-1)| = |det(V + V^T)|.
inline Integer determinant(const SeifertMatrix& v) { return SignatureFunction(v).determinant(); }

inline int lt_signature(const SeifertMatrix& v, const RationalAngle& x) { return SignatureFunction(v).at(x); }

struct SignatureProfile {
  std::map<RationalAngle, int> samples;
  std::set<RationalAngle> jump_angles;
};

inline SignatureProfile signature_profile(const SignatureFunction& f, const std::vector<RationalAngle>& angles) {
  SignatureProfile profile;
  for (const auto& x : angles) {
    if (f.is_jump(x))
      profile.jump_angles.insert(x);
    else
      profile.samples.emplace(x, f.at(x));
  }
  return profile;
}

inline SignatureProfile signature_profile(const SeifertMatrix& v, const std::vector<RationalAngle>& angles) {
  return signature_profile(SignatureFunction(v), angles);
}

}  // namespace knotcord
