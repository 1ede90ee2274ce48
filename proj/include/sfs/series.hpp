#pragma once

#include <vector>

#include "sfs/apcomplex.hpp"
#include "sfs/arith.hpp"

namespace sfs {

/// @brief Truncated power series with exact rational coefficients, indexed from 0.
///        The truncation order equals the coefficient count; products truncate to
///        the minimum order of the factors.
class PowerSeriesQ {
 public:
  explicit PowerSeriesQ(size_t order) : c_(order, Rational(0)) {}

  static PowerSeriesQ one(size_t order);

  size_t order() const { return c_.size(); }
  Rational& operator[](size_t i) { return c_[i]; }
  const Rational& operator[](size_t i) const { return c_[i]; }

  PowerSeriesQ truncated(size_t order) const;

  friend PowerSeriesQ operator+(const PowerSeriesQ& a, const PowerSeriesQ& b);
  friend PowerSeriesQ operator-(const PowerSeriesQ& a, const PowerSeriesQ& b);
  friend PowerSeriesQ operator*(const PowerSeriesQ& a, const PowerSeriesQ& b);
  PowerSeriesQ scaled(const Rational& s) const;

  /// @brief Multiplicative inverse; requires a nonzero constant term.
  PowerSeriesQ inverse() const;
  /// @brief Non-negative integer power by repeated truncated multiplication.
  PowerSeriesQ pow_uint(unsigned long e) const;

 private:
  std::vector<Rational> c_;
};

/// @brief s^e for negative integer e; requires s[0] != 0.
/// @throws precondition_error on zero constant term or e >= 0.
PowerSeriesQ series_pow_neg(const PowerSeriesQ& s, long e);

/// @brief Polynomial in the level variable k with APComplex coefficients.
///        The lowest degree may be -1 (one inverse-power slot used by the
///        Bernoulli expansion of 1/(1-e^{-kx})); everything else is a plain
///        polynomial. Dense storage by degree.
class KPoly {
 public:
  explicit KPoly(long prec = 256) : lo_(0), prec_(prec) {}

  static KPoly constant(const APComplex& c);
  static KPoly monomial(const APComplex& c, int deg);

  long prec() const { return prec_; }
  bool is_zero() const;
  /// @brief Lowest stored degree.
  int lo() const { return lo_; }
  /// @brief One past the highest stored degree.
  int hi() const { return lo_ + static_cast<int>(c_.size()); }
  /// @brief Coefficient of k^deg (zero outside the stored window).
  APComplex coeff(int deg) const;

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  KPoly scaled(const APComplex& s) const;
  KPoly& operator+=(const KPoly& o) { return *this = *this + o; }

  /// @brief Evaluate at integer k (k > 0 so the k^{-1} slot is meaningful).
  APComplex eval(long k) const;

 private:
  int lo_;
  long prec_;
  std::vector<APComplex> c_;  // c_[i] is the coefficient of k^{lo_+i}
};

/// @brief Truncated Laurent series in a local variable x whose coefficients are
///        KPoly values. Terms cover exponents [lo, hi); the product of two series
///        has lowest exponent lo1+lo2 and is truncated to the window both factors
///        determine.
class LaurentPolySeries {
 public:
  LaurentPolySeries(int lo, int hi, long prec)
      : lo_(lo), prec_(prec), c_(static_cast<size_t>(hi - lo), KPoly(prec)) {
    if (hi < lo) throw precondition_error("LaurentPolySeries: hi < lo");
  }

  long prec() const { return prec_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()); }

  KPoly& at(int e);
  const KPoly& coeff(int e) const;
  bool has(int e) const { return e >= lo() && e < hi(); }

  friend LaurentPolySeries operator+(const LaurentPolySeries& a, const LaurentPolySeries& b);
  friend LaurentPolySeries operator*(const LaurentPolySeries& a, const LaurentPolySeries& b);
  LaurentPolySeries scaled(const APComplex& s) const;

 private:
  int lo_;
  long prec_;
  std::vector<KPoly> c_;
};

/// @brief Coefficient of exponent -1 (the residue slot).
/// @throws precondition_error if the series window does not reach exponent -1
///         from above (truncated before the residue slot).
KPoly laurent_residue(const LaurentPolySeries& s);

/// @brief Dense truncated power series with APComplex coefficients (internal
///        carrier for transcendental Taylor factors of the residue engine).
class APSeries {
 public:
  APSeries(size_t order, long prec) : prec_(prec), c_(order, APComplex(prec)) {}

  static APSeries one(size_t order, long prec);

  long prec() const { return prec_; }
  size_t order() const { return c_.size(); }
  APComplex& operator[](size_t i) { return c_[i]; }
  const APComplex& operator[](size_t i) const { return c_[i]; }

  friend APSeries operator*(const APSeries& a, const APSeries& b);
  friend APSeries operator+(const APSeries& a, const APSeries& b);
  APSeries scaled(const APComplex& s) const;
  /// @brief Multiplicative inverse; requires a nonzero constant term.
  APSeries inverse() const;
  APSeries pow_uint(unsigned long e) const;

  static APSeries from_rational(const PowerSeriesQ& s, long prec);

 private:
  long prec_;
  std::vector<APComplex> c_;
};

}  // namespace sfs
