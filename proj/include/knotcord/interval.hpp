#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <utility>

namespace knotcord {

/// Closed interval [lo, hi] of MPFR numbers at a fixed precision, with
/// outward rounding on every operation.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Interval(const mpz_class& z, mpfr_prec_t prec) : Interval(prec) {
    mpfr_set_z(lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, z.get_mpz_t(), MPFR_RNDU);
  }

  Interval(const Interval& o) : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
      mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }

  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  /// +1 or -1 when the whole interval lies on one side of zero, else 0.
  int certified_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_})
      for (mpfr_srcptr y : {b.lo_, b.hi_}) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }

  /// Division by an interval that lies strictly above zero.
  friend Interval divide_positive(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_})
      for (mpfr_srcptr y : {b.lo_, b.hi_}) {
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return r;
  }

  /// Enclosure of cos(2*pi*p/q) for 0 < p/q < 1.
  static Interval cos_two_pi(long p, long q, mpfr_prec_t prec) {
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, c;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, c, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_mul_si(th_lo, pi_lo, 2 * p, MPFR_RNDD);
    mpfr_div_si(th_lo, th_lo, q, MPFR_RNDD);
    mpfr_mul_si(th_hi, pi_hi, 2 * p, MPFR_RNDU);
    mpfr_div_si(th_hi, th_hi, q, MPFR_RNDU);

    // cos is monotone on each side of pi inside (0, 2 pi), so the range over
    // [th_lo, th_hi] is spanned by the endpoint values, plus -1 if pi lies in
    // between.
    Interval r(prec);
    mpfr_cos(r.lo_, th_lo, MPFR_RNDD);
    mpfr_cos(c, th_hi, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, c, MPFR_RNDD);
    mpfr_cos(r.hi_, th_lo, MPFR_RNDU);
    mpfr_cos(c, th_hi, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, c, MPFR_RNDU);
    if (mpfr_lessequal_p(th_lo, pi_hi) && mpfr_greaterequal_p(th_hi, pi_lo)) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, c, static_cast<mpfr_ptr>(nullptr));
    return r;
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace knotcord
