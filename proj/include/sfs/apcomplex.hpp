#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "sfs/arith.hpp"

namespace sfs {

/// @brief Arbitrary-precision real number (MPFR wrapper, round-to-nearest).
///        Binary operations produce results at the minimum precision of the operands.
class APFloat {
 public:
  explicit APFloat(long prec = 256) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  APFloat(const APFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  APFloat(APFloat&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
  }
  APFloat& operator=(const APFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  APFloat& operator=(APFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~APFloat() { mpfr_clear(v_); }

  static APFloat from_long(long x, long prec);
  static APFloat from_double(double x, long prec);
  static APFloat from_rational(const Rational& q, long prec);
  static APFloat from_string(const std::string& s, long prec);
  static APFloat pi(long prec);
  /// @brief 2^e at the given precision.
  static APFloat pow2(long e, long prec);

  long prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(size_t digits = 0) const;

  int cmp(const APFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const APFloat& o) const { return cmp(o) < 0; }
  bool operator>(const APFloat& o) const { return cmp(o) > 0; }
  bool operator<=(const APFloat& o) const { return cmp(o) <= 0; }
  bool operator>=(const APFloat& o) const { return cmp(o) >= 0; }
  bool operator==(const APFloat& o) const { return cmp(o) == 0; }

  friend APFloat operator+(const APFloat& a, const APFloat& b);
  friend APFloat operator-(const APFloat& a, const APFloat& b);
  friend APFloat operator*(const APFloat& a, const APFloat& b);
  friend APFloat operator/(const APFloat& a, const APFloat& b);
  friend APFloat operator-(const APFloat& a);

 private:
  mpfr_t v_;
};

APFloat abs(const APFloat& a);
APFloat sqrt(const APFloat& a);
APFloat exp(const APFloat& a);
APFloat log(const APFloat& a);
APFloat sin(const APFloat& a);
APFloat cos(const APFloat& a);
APFloat sinh(const APFloat& a);
APFloat cosh(const APFloat& a);
APFloat atan2(const APFloat& y, const APFloat& x);
APFloat floor(const APFloat& a);
APFloat pow(const APFloat& base, const APFloat& e);
APFloat gamma(const APFloat& a);

/// @brief Arbitrary-precision complex number; both parts share one precision.
class APComplex {
 public:
  explicit APComplex(long prec = 256) : re_(prec), im_(prec) {}
  APComplex(APFloat re, APFloat im) : re_(std::move(re)), im_(std::move(im)) {
    long p = re_.prec() < im_.prec() ? re_.prec() : im_.prec();
    if (re_.prec() != p) re_ = retrunc(re_, p);
    if (im_.prec() != p) im_ = retrunc(im_, p);
  }

  static APComplex zero(long prec) { return APComplex(prec); }
  static APComplex one(long prec);
  static APComplex i(long prec);
  static APComplex from_long(long x, long prec);
  static APComplex from_rational(const Rational& q, long prec);
  static APComplex from_real(const APFloat& x) { return APComplex(x, APFloat(x.prec())); }

  long prec() const { return re_.prec(); }
  const APFloat& re() const { return re_; }
  const APFloat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string(size_t digits = 0) const;

  friend APComplex operator+(const APComplex& a, const APComplex& b);
  friend APComplex operator-(const APComplex& a, const APComplex& b);
  friend APComplex operator*(const APComplex& a, const APComplex& b);
  friend APComplex operator/(const APComplex& a, const APComplex& b);
  friend APComplex operator-(const APComplex& a);
  APComplex& operator+=(const APComplex& o) { return *this = *this + o; }
  APComplex& operator-=(const APComplex& o) { return *this = *this - o; }
  APComplex& operator*=(const APComplex& o) { return *this = *this * o; }

 private:
  static APFloat retrunc(const APFloat& x, long prec);
  APFloat re_, im_;
};

APComplex conj(const APComplex& z);
APFloat abs(const APComplex& z);
APFloat arg(const APComplex& z);
/// @brief Principal square root (branch cut on the negative real axis).
APComplex sqrt(const APComplex& z);
APComplex exp(const APComplex& z);
/// @brief Principal logarithm.
APComplex log(const APComplex& z);
APComplex sinh(const APComplex& z);
APComplex cosh(const APComplex& z);
APComplex sin(const APComplex& z);
APComplex cos(const APComplex& z);
/// @brief Principal power exp(w log z).
APComplex pow(const APComplex& z, const APComplex& w);
/// @brief Principal rational power exp(e log z).
APComplex pow(const APComplex& z, const Rational& e);
/// @brief Integer power by binary exponentiation (exact branch-free continuation).
APComplex pow_int(const APComplex& z, long e);

/// @brief e^{2 pi i r} with the angle reduced exactly mod 1 before evaluation.
APComplex exp_2pi_i(const Rational& r, long prec);

/// @brief e^{i theta}.
APComplex unit_phase(const APFloat& theta);

}  // namespace sfs
