#pragma once

#include <vector>

#include "sfs/chern_simons.hpp"
#include "sfs/seifert.hpp"
#include "sfs/series.hpp"

namespace sfs {

/// @brief Principal part of F at y = 2 pi i m: f[j-1] multiplies (y - 2 pi i m)^{-j}
///        for j = 1, ..., n-2. Entries beyond the actual pole order are zero;
///        at a regular point all entries vanish.
struct PrincipalPart {
  long m;
  std::vector<APComplex> f;
};

/// @brief One exponential sector of the residue sum: the polynomial
///        zeta_theta(k), of degree at most n-3, multiplying e^{2 pi i k theta}.
struct PhasePolynomial {
  RationalModZ theta;
  KPoly poly;
};

/// @brief The residue sum z^R(k) together with its grouping by weight class.
struct ResidueDecomposition {
  APComplex total;
  std::vector<PhasePolynomial> phases;
};

/// @brief Normalized level-k invariant split into its two contour pieces.
struct WRTValue {
  long k;
  APComplex z_integral;  ///< steepest-descent (Gaussian) integral through 0
  APComplex z_residue;   ///< sum of residues swept past moving the contour
  APComplex z_total;     ///< z_integral + z_residue
};

/// @brief Comparison of the level generating series against its closed form.
struct GeneratingFunctionResult {
  APComplex partial_sum;  ///< sum_{j=0..order} z_total(j+2) z^j
  APComplex closed_form;  ///< kernel integral plus polylogarithm sector sums
  bool near_singularity;  ///< some |1 - z e^{2 pi i theta}| < 1e-3
};

/// @brief Laurent principal part of F at y = 2 pi i m, from the exact local
///        factorization of the product of hyperbolic sines.
PrincipalPart principal_part_F(const SeifertData& sd, long m, long prec);

/// @brief Expansion of 1/(1 - e^{-k x}) at x = 0 through x^{order-2}:
///        k^{-1} x^{-1} + 1/2 + sum_{even j >= 2} B_j k^{j-1} x^{j-1} / j!.
///        Valid at x = y - 2 pi i m for integer k, where e^{-ky} = e^{-kx}.
LaurentPolySeries bernoulli_kernel_series(int order, long prec);

/// @brief Residue of F(y) e^{k g(y)} / (1 - e^{-ky}) at y = 2 pi i m as a
///        polynomial in the (integer) level k, with the constant phase
///        e^{k g(2 pi i m)} factored off. Zero when F vanishes at the point;
///        carries a k^{-1} term from the kernel pole otherwise.
KPoly residue_at_pole(const SeifertData& sd, long m, long prec);

/// @brief Aggregate the residues of all m in 1..2P-1 by weight class
///        theta = [-m^2/4P]. Classes in the Chern-Simons value set keep a
///        polynomial of degree <= n-3 (sign flipped so that
///        z^R(k) = sum_theta e^{2 pi i k theta} zeta_theta(k)); every k^{-1}
///        slot and every class outside the value set is checked to cancel
///        below 2^{-prec/2} relative to the aggregate scale, then dropped.
/// @throws computation_error if a supposed cancellation fails.
std::vector<PhasePolynomial> phase_polynomials(const SeifertData& sd, long prec);

/// @brief z^R(k): the full residue sum, evaluated through the weight classes.
ResidueDecomposition residue_part(const SeifertData& sd, long k, long prec);

/// @brief z^I(k): Gaussian-weighted integral of F along the steepest-descent
///        direction, 2 sqrt(2P)/sqrt(pi i) * integral_0^inf F(2 kappa u) e^{-k u^2} du,
///        with a certified tail truncation.
APComplex integral_part(const SeifertData& sd, long k, long prec);

/// @brief integral_part for every level in [k_lo, k_hi], sharing the F
///        evaluations across levels.
std::vector<APComplex> integral_part_batch(const SeifertData& sd, long k_lo, long k_hi,
                                           long prec);

/// @brief Both contour pieces of the normalized level-k invariant.
WRTValue normalized_wrt(const SeifertData& sd, long k, long prec);

/// @brief The weight-theta piece of the resummation: minus the sum, over the
///        poles y = 2 pi i m in the class of theta, of the residues of
///        e^{k g(y)} / (1 - e^{-ky}) * (y / 4P) * B(y^2 / (8 pi i P)),
///        where B is the closed-form Borel transform; computed on small
///        y-plane circles. Equals e^{2 pi i k theta} zeta_theta(k); zero for
///        theta outside the Chern-Simons value set.
APComplex residue_operator(const SeifertData& sd, const RationalModZ& theta, long k,
                           long prec);

/// @brief Polylogarithm of non-positive integer order, as the rational function
///        Li_{-l}(z) = N_l(z) / (1-z)^{l+1} with integer numerator coefficients.
/// @throws pole_error at z = 1, precondition_error for l < 0.
APComplex polylog_neg(long l, const APComplex& z);

/// @brief Compare sum_{j=0..order} z_total(j+2) z^j against the closed form
///        (geometric-kernel integral plus polylogarithm sums over the weight
///        classes). Requires |z| < 1/2 so both sides converge comfortably.
GeneratingFunctionResult generating_function(const SeifertData& sd, const APComplex& z,
                                             size_t order, long prec);

}  // namespace sfs
