#include "sfs/apcomplex.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace sfs {

namespace {
long min_prec(const APFloat& a, const APFloat& b) { return std::min(a.prec(), b.prec()); }
}  // namespace

APFloat APFloat::from_long(long x, long prec) {
  APFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

APFloat APFloat::from_double(double x, long prec) {
  APFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

APFloat APFloat::from_rational(const Rational& q, long prec) {
  APFloat r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

APFloat APFloat::from_string(const std::string& s, long prec) {
  APFloat r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw precondition_error("APFloat::from_string: unparsable value '" + s + "'");
  }
  return r;
}

APFloat APFloat::pi(long prec) {
  APFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

APFloat APFloat::pow2(long e, long prec) {
  APFloat r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string APFloat::to_string(size_t digits) const {
  if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits), v_);
  return std::string(buf.data());
}

#define SFS_BINOP(op, fn)                                     \
  APFloat operator op(const APFloat& a, const APFloat& b) {   \
    APFloat r(min_prec(a, b));                                \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                          \
    return r;                                                 \
  }
SFS_BINOP(+, mpfr_add)
SFS_BINOP(-, mpfr_sub)
SFS_BINOP(*, mpfr_mul)
SFS_BINOP(/, mpfr_div)
#undef SFS_BINOP

APFloat operator-(const APFloat& a) {
  APFloat r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

#define SFS_UNFUN(name, fn)              \
  APFloat name(const APFloat& a) {       \
    APFloat r(a.prec());                 \
    fn(r.raw(), a.raw(), MPFR_RNDN);     \
    return r;                            \
  }
SFS_UNFUN(abs, mpfr_abs)
SFS_UNFUN(sqrt, mpfr_sqrt)
SFS_UNFUN(exp, mpfr_exp)
SFS_UNFUN(log, mpfr_log)
SFS_UNFUN(sin, mpfr_sin)
SFS_UNFUN(cos, mpfr_cos)
SFS_UNFUN(sinh, mpfr_sinh)
SFS_UNFUN(cosh, mpfr_cosh)
#undef SFS_UNFUN

APFloat floor(const APFloat& a) {
  APFloat r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

APFloat atan2(const APFloat& y, const APFloat& x) {
  APFloat r(min_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

APFloat pow(const APFloat& base, const APFloat& e) {
  APFloat r(min_prec(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

APFloat gamma(const APFloat& a) {
  APFloat r(a.prec());
  mpfr_gamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

APFloat APComplex::retrunc(const APFloat& x, long prec) {
  APFloat r(prec);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

APComplex APComplex::one(long prec) { return from_long(1, prec); }

APComplex APComplex::i(long prec) {
  return APComplex(APFloat(prec), APFloat::from_long(1, prec));
}

APComplex APComplex::from_long(long x, long prec) {
  return APComplex(APFloat::from_long(x, prec), APFloat(prec));
}

APComplex APComplex::from_rational(const Rational& q, long prec) {
  return APComplex(APFloat::from_rational(q, prec), APFloat(prec));
}

std::string APComplex::to_string(size_t digits) const {
  return "(" + re_.to_string(digits) + ", " + im_.to_string(digits) + ")";
}

APComplex operator+(const APComplex& a, const APComplex& b) {
  return APComplex(a.re_ + b.re_, a.im_ + b.im_);
}

APComplex operator-(const APComplex& a, const APComplex& b) {
  return APComplex(a.re_ - b.re_, a.im_ - b.im_);
}

APComplex operator*(const APComplex& a, const APComplex& b) {
  return APComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

APComplex operator/(const APComplex& a, const APComplex& b) {
  APFloat d = b.re_ * b.re_ + b.im_ * b.im_;
  return APComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

APComplex operator-(const APComplex& a) { return APComplex(-a.re_, -a.im_); }

APComplex conj(const APComplex& z) { return APComplex(z.re(), -z.im()); }

APFloat abs(const APComplex& z) {
  APFloat r(z.prec());
  mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return r;
}

APFloat arg(const APComplex& z) { return atan2(z.im(), z.re()); }

APComplex sqrt(const APComplex& z) {
  long p = z.prec();
  if (z.im().is_zero()) {
    if (z.re().sign() >= 0) return APComplex(sqrt(z.re()), APFloat(p));
    return APComplex(APFloat(p), sqrt(-z.re()));
  }
  APFloat r = abs(z);
  // t = sqrt((r+|a|)/2); stable pairing avoids cancellation.
  APFloat half = APFloat::from_rational(Rational(1, 2), p);
  APFloat t = sqrt((r + abs(z.re())) * half);
  APFloat u = z.im() / (t + t);
  if (z.re().sign() >= 0) return APComplex(t, u);
  if (z.im().sign() >= 0) return APComplex(abs(u), t);
  return APComplex(abs(u), -t);
}

APComplex exp(const APComplex& z) {
  long p = z.prec();
  APFloat m = exp(z.re());
  APFloat c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return APComplex(m * c, m * s);
}

APComplex log(const APComplex& z) {
  if (z.is_zero()) throw pole_error("log: argument is zero");
  return APComplex(log(abs(z)), arg(z));
}

APComplex sinh(const APComplex& z) {
  long p = z.prec();
  APFloat sh(p), ch(p), s(p), c(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return APComplex(sh * c, ch * s);
}

APComplex cosh(const APComplex& z) {
  long p = z.prec();
  APFloat sh(p), ch(p), s(p), c(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return APComplex(ch * c, sh * s);
}

APComplex sin(const APComplex& z) {
  long p = z.prec();
  APFloat sh(p), ch(p), s(p), c(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  return APComplex(s * ch, c * sh);
}

APComplex cos(const APComplex& z) {
  long p = z.prec();
  APFloat sh(p), ch(p), s(p), c(p);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  return APComplex(c * ch, -(s * sh));
}

APComplex pow(const APComplex& z, const APComplex& w) {
  if (z.is_zero()) {
    if (w.is_zero()) return APComplex::one(z.prec());
    return APComplex::zero(z.prec());
  }
  return exp(w * log(z));
}

APComplex pow(const APComplex& z, const Rational& e) {
  if (z.is_zero()) {
    if (e == 0) return APComplex::one(z.prec());
    if (e < 0) throw pole_error("pow: zero base with negative exponent");
    return APComplex::zero(z.prec());
  }
  if (e.get_den() == 1 && e.get_num().fits_slong_p()) {
    return pow_int(z, e.get_num().get_si());
  }
  return exp(APComplex::from_rational(e, z.prec()) * log(z));
}

APComplex pow_int(const APComplex& z, long e) {
  long p = z.prec();
  if (e == 0) return APComplex::one(p);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
  APComplex base = z;
  APComplex acc = APComplex::one(p);
  while (n > 0) {
    if (n & 1ul) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  if (inv) return APComplex::one(p) / acc;
  return acc;
}

APComplex exp_2pi_i(const Rational& r, long prec) {
  Rational f = frac_part(r);
  APFloat theta = APFloat::from_long(2, prec) * APFloat::pi(prec) * APFloat::from_rational(f, prec);
  return unit_phase(theta);
}

APComplex unit_phase(const APFloat& theta) {
  long p = theta.prec();
  APFloat c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return APComplex(c, s);
}

}  // namespace sfs
