#pragma once

#include <map>

#include "sfs/plumbing.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// @brief Sparse series in fractional powers of q with exact rational
///        coefficients: an entry (nu, c) means c * q^{nu/denominator}.
struct SparseQSeries {
  Integer denominator{1};             ///< positive; exponents are nu/denominator
  std::map<Integer, Rational> terms;  ///< nonzero coefficients only
  Rational cutoff{0};                 ///< exponents <= cutoff are complete

  /// @brief Coefficient of q^exponent (zero if absent or non-representable).
  Rational coeff_at(const Rational& exponent) const;
};

/// @brief Exact termwise equality of all terms with exponent <= bound.
/// @throws precondition_error if either series is incomplete below bound.
bool series_equal_below(const SparseQSeries& x, const SparseQSeries& y, const Rational& bound);

/// @brief (-1)^n * binom(r+n-3, r), the weight of the degree-n power expansion.
Integer a_coeff(long r, long n);

/// @brief Integer coefficients chi_m of the expansion of the sphere's product
///        function on |z| < 1, for m0 <= m <= cutoff_m (zero entries omitted).
std::map<long, Integer> chi_coefficients(const SeifertData& sd, long cutoff_m);

/// @brief Theta-like series sum_m chi_m q^{m^2/4P}, complete for exponents
///        <= cutoff_exp.
SparseQSeries psi_series(const SeifertData& sd, const Rational& cutoff_exp);

/// @brief Principal-value constant term of (z - 1/z)^{2-deg} z^l: the average of
///        the |z| < 1 and |z| > 1 expansions.
Rational vp_constant_term(long l, long deg);

/// @brief Lattice/principal-value q-series of a negative-definite unimodular
///        star plumbing, shifted by Delta so its terms are directly comparable
///        to psi_series output.
/// @throws precondition_error unless |det M| = 1.
SparseQSeries gppv_series(const PlumbingGraph& graph, const AdjacencyData& ad,
                          const Rational& Delta, const Rational& cutoff_exp);

/// @brief Numeric value of the theta-like series at q inside the unit disk,
///        truncated with a certified tail bound below tol (principal powers).
/// @throws precondition_error if |q| >= 1 or tol <= 0.
APComplex psi_eval(const SeifertData& sd, const APComplex& q, const APFloat& tol);

}  // namespace sfs
