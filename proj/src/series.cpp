#include "sfs/series.hpp"

#include <algorithm>

namespace sfs {

PowerSeriesQ PowerSeriesQ::one(size_t order) {
  if (order == 0) throw precondition_error("PowerSeriesQ::one: order must be positive");
  PowerSeriesQ r(order);
  r[0] = 1;
  return r;
}

PowerSeriesQ PowerSeriesQ::truncated(size_t order) const {
  PowerSeriesQ r(order);
  for (size_t i = 0; i < std::min(order, c_.size()); ++i) r[i] = c_[i];
  return r;
}

PowerSeriesQ operator+(const PowerSeriesQ& a, const PowerSeriesQ& b) {
  PowerSeriesQ r(std::min(a.order(), b.order()));
  for (size_t i = 0; i < r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

PowerSeriesQ operator-(const PowerSeriesQ& a, const PowerSeriesQ& b) {
  PowerSeriesQ r(std::min(a.order(), b.order()));
  for (size_t i = 0; i < r.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

PowerSeriesQ operator*(const PowerSeriesQ& a, const PowerSeriesQ& b) {
  PowerSeriesQ r(std::min(a.order(), b.order()));
  for (size_t i = 0; i < r.order(); ++i) {
    Rational s(0);
    for (size_t j = 0; j <= i; ++j) s += a[j] * b[i - j];
    r[i] = s;
  }
  return r;
}

PowerSeriesQ PowerSeriesQ::scaled(const Rational& s) const {
  PowerSeriesQ r(order());
  for (size_t i = 0; i < order(); ++i) r[i] = c_[i] * s;
  return r;
}

PowerSeriesQ PowerSeriesQ::inverse() const {
  if (order() == 0 || c_[0] == 0) {
    throw precondition_error("PowerSeriesQ::inverse: constant term must be nonzero");
  }
  PowerSeriesQ r(order());
  r[0] = 1 / c_[0];
  for (size_t i = 1; i < order(); ++i) {
    Rational s(0);
    for (size_t j = 1; j <= i; ++j) s += c_[j] * r[i - j];
    r[i] = -s / c_[0];
  }
  return r;
}

PowerSeriesQ PowerSeriesQ::pow_uint(unsigned long e) const {
  PowerSeriesQ acc = PowerSeriesQ::one(order());
  PowerSeriesQ base = *this;
  while (e > 0) {
    if (e & 1ul) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

PowerSeriesQ series_pow_neg(const PowerSeriesQ& s, long e) {
  if (e >= 0) throw precondition_error("series_pow_neg: exponent must be negative");
  return s.inverse().pow_uint(static_cast<unsigned long>(-e));
}

KPoly KPoly::constant(const APComplex& c) {
  KPoly r(c.prec());
  if (!c.is_zero()) {
    r.lo_ = 0;
    r.c_.push_back(c);
  }
  return r;
}

KPoly KPoly::monomial(const APComplex& c, int deg) {
  if (deg < -1) throw precondition_error("KPoly::monomial: degree below -1");
  KPoly r(c.prec());
  if (!c.is_zero()) {
    r.lo_ = deg;
    r.c_.push_back(c);
  }
  return r;
}

bool KPoly::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

APComplex KPoly::coeff(int deg) const {
  if (deg < lo_ || deg >= hi()) return APComplex(prec_);
  return c_[static_cast<size_t>(deg - lo_)];
}

namespace {
/// Trim exact-zero coefficients at both ends of a dense window.
void kpoly_normalize(int& lo, std::vector<APComplex>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  size_t skip = 0;
  while (skip < c.size() && c[skip].is_zero()) ++skip;
  if (skip > 0) {
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(skip));
    lo += static_cast<int>(skip);
  }
  if (c.empty()) lo = 0;
}
}  // namespace

KPoly operator+(const KPoly& a, const KPoly& b) {
  if (a.c_.empty()) return b;
  if (b.c_.empty()) return a;
  long prec = std::min(a.prec_, b.prec_);
  int lo = std::min(a.lo_, b.lo_);
  int hi = std::max(a.hi(), b.hi());
  KPoly r(prec);
  r.lo_ = lo;
  r.c_.assign(static_cast<size_t>(hi - lo), APComplex(prec));
  for (int d = lo; d < hi; ++d) {
    r.c_[static_cast<size_t>(d - lo)] = a.coeff(d) + b.coeff(d);
  }
  kpoly_normalize(r.lo_, r.c_);
  return r;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  long prec = std::min(a.prec_, b.prec_);
  KPoly r(prec);
  if (a.c_.empty() || b.c_.empty()) return r;
  int lo = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, APComplex(prec));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.lo_ = lo;
  kpoly_normalize(r.lo_, r.c_);
  if (!r.c_.empty() && r.lo_ < -1) {
    throw computation_error("KPoly: product carries degree below k^{-1}");
  }
  return r;
}

KPoly KPoly::scaled(const APComplex& s) const {
  KPoly r(std::min(prec_, s.prec()));
  if (s.is_zero()) return r;
  r.lo_ = lo_;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  kpoly_normalize(r.lo_, r.c_);
  return r;
}

APComplex KPoly::eval(long k) const {
  if (k <= 0 && lo_ < 0) throw precondition_error("KPoly::eval: k must be positive");
  APComplex kk = APComplex::from_long(k, prec_);
  APComplex acc(prec_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    acc += c_[i] * pow_int(kk, lo_ + static_cast<long>(i));
  }
  return acc;
}

KPoly& LaurentPolySeries::at(int e) {
  if (!has(e)) throw precondition_error("LaurentPolySeries::at: exponent outside window");
  return c_[static_cast<size_t>(e - lo_)];
}

const KPoly& LaurentPolySeries::coeff(int e) const {
  if (!has(e)) throw precondition_error("LaurentPolySeries::coeff: exponent outside window");
  return c_[static_cast<size_t>(e - lo_)];
}

LaurentPolySeries operator+(const LaurentPolySeries& a, const LaurentPolySeries& b) {
  long prec = std::min(a.prec(), b.prec());
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  LaurentPolySeries r(lo, hi, prec);
  for (int e = lo; e < hi; ++e) {
    KPoly s(prec);
    if (a.has(e)) s += a.coeff(e);
    if (b.has(e)) s += b.coeff(e);
    r.at(e) = s;
  }
  return r;
}

LaurentPolySeries operator*(const LaurentPolySeries& a, const LaurentPolySeries& b) {
  long prec = std::min(a.prec(), b.prec());
  int lo = a.lo() + b.lo();
  int hi = std::min(a.lo() + b.hi(), b.lo() + a.hi());
  LaurentPolySeries r(lo, hi, prec);
  for (int i = a.lo(); i < a.hi(); ++i) {
    const KPoly& ca = a.coeff(i);
    if (ca.is_zero()) continue;
    for (int j = b.lo(); j < b.hi(); ++j) {
      int e = i + j;
      if (e >= hi) break;
      const KPoly& cb = b.coeff(j);
      if (cb.is_zero()) continue;
      r.at(e) += ca * cb;
    }
  }
  return r;
}

LaurentPolySeries LaurentPolySeries::scaled(const APComplex& s) const {
  LaurentPolySeries r(lo(), hi(), std::min(prec_, s.prec()));
  for (int e = lo(); e < hi(); ++e) r.at(e) = coeff(e).scaled(s);
  return r;
}

KPoly laurent_residue(const LaurentPolySeries& s) {
  if (s.hi() <= -1) {
    throw precondition_error("laurent_residue: window truncated before exponent -1");
  }
  if (s.lo() > -1) return KPoly(s.prec());
  return s.coeff(-1);
}

APSeries APSeries::one(size_t order, long prec) {
  if (order == 0) throw precondition_error("APSeries::one: order must be positive");
  APSeries r(order, prec);
  r[0] = APComplex::one(prec);
  return r;
}

APSeries operator*(const APSeries& a, const APSeries& b) {
  long prec = std::min(a.prec(), b.prec());
  APSeries r(std::min(a.order(), b.order()), prec);
  for (size_t i = 0; i < r.order(); ++i) {
    APComplex s(prec);
    for (size_t j = 0; j <= i; ++j) s += a[j] * b[i - j];
    r[i] = s;
  }
  return r;
}

APSeries operator+(const APSeries& a, const APSeries& b) {
  APSeries r(std::min(a.order(), b.order()), std::min(a.prec(), b.prec()));
  for (size_t i = 0; i < r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

APSeries APSeries::scaled(const APComplex& s) const {
  APSeries r(order(), std::min(prec_, s.prec()));
  for (size_t i = 0; i < order(); ++i) r[i] = c_[i] * s;
  return r;
}

APSeries APSeries::inverse() const {
  if (order() == 0 || c_[0].is_zero()) {
    throw precondition_error("APSeries::inverse: constant term must be nonzero");
  }
  APSeries r(order(), prec_);
  APComplex inv0 = APComplex::one(prec_) / c_[0];
  r[0] = inv0;
  for (size_t i = 1; i < order(); ++i) {
    APComplex s(prec_);
    for (size_t j = 1; j <= i; ++j) s += c_[j] * r[i - j];
    r[i] = -s * inv0;
  }
  return r;
}

APSeries APSeries::pow_uint(unsigned long e) const {
  APSeries acc = APSeries::one(order(), prec_);
  APSeries base = *this;
  while (e > 0) {
    if (e & 1ul) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

APSeries APSeries::from_rational(const PowerSeriesQ& s, long prec) {
  APSeries r(s.order(), prec);
  for (size_t i = 0; i < s.order(); ++i) r[i] = APComplex::from_rational(s[i], prec);
  return r;
}

}  // namespace sfs
