#pragma once

#include <functional>
#include <vector>

#include "sfs/apcomplex.hpp"
#include "sfs/arith.hpp"
#include "sfs/chern_simons.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// @brief Coefficients of the large-level asymptotic expansion of the integral
///        term: z^I(k) ~ sum_{j >= 0} coeff[j] k^{-j-1/2}. The j = 0 entry is
///        exactly zero because F vanishes to second order at the origin.
struct OhtsukiSeries {
  std::vector<APComplex> coeff;
};

/// @brief Exact asymptotic coefficients, computed from the Taylor expansion of
///        F: coeff[j] = sqrt(2P/(pi i)) * F_{2j} * (8 pi i P)^j * Gamma(j + 1/2),
///        for j = 0, ..., order.
OhtsukiSeries ohtsuki_coefficients(const SeifertData& sd, size_t order, long prec);

/// @brief Closed form of the Borel transform of the asymptotic series:
///          B(zeta) = sqrt(2P) / sqrt(pi i) * F(sqrt(8 pi i P zeta)) / sqrt(zeta),
///        with the principal square root of zeta itself (cut on the negative
///        reals, far from the poles on i R_+) and either root inside F, which
///        is even. The function is odd under sqrt(zeta) -> -sqrt(zeta), so
///        sqrt(zeta) * B(zeta) is a single-valued function of zeta; near the
///        pole ray the principal root agrees with y/(2 kappa) for y near
///        2 pi i m, which is the branch the residue calculus uses.
class BorelFunction {
 public:
  BorelFunction(const SeifertData& sd, long prec);

  /// @brief Value through F directly.
  /// @throws pole_error at the poles zeta = i pi m^2 / (2P).
  APComplex eval(const APComplex& zeta) const;

  /// @brief Same value through the product form G:
  ///          kappa / (16 pi i sqrt(zeta)) * G(exp(kappa sqrt(zeta) / P)).
  APComplex eval_g_form(const APComplex& zeta) const;

  const SeifertData& seifert() const { return sd_; }
  long prec() const { return prec_; }

 private:
  SeifertData sd_;
  long prec_;
  APComplex kappa_;  ///< sqrt(2 pi i P), principal branch
};

/// @brief One pole of the Borel transform along the ray i R_+.
struct BorelPole {
  long m;            ///< pole index: zeta_m = i pi m^2 / (2P)
  APComplex zeta;    ///< position in the Borel plane
  RationalModZ theta;  ///< exponential weight class [-m^2/4P]
};

/// @brief Poles with index m <= m_max: exactly the m divisible by at most
///        n - 3 of the multiplicities (more divisors flatten the pole away).
std::vector<BorelPole> pole_set(const SeifertData& sd, long m_max, long prec = 256);

/// @brief Whether the weight classes of pole_set(sd, m_max) coincide, as a set,
///        with the Chern-Simons value set of the flat moduli space. Use
///        m_max >= 2P so every residue class is represented.
bool check_poles_equal_cs(const SeifertData& sd, long m_max);

/// @brief One term c * lambda^{-alpha} * log(lambda)^beta of a small-lambda
///        asymptotic series (only beta = 0 is supported by formal_borel).
struct AsymptoticTerm {
  APComplex coeff;
  Rational alpha;
  unsigned beta = 0;
};

/// @brief One term c * zeta^{alpha_minus_one} of the Borel-transformed series.
struct BorelTerm {
  APComplex coeff;
  Rational alpha_minus_one;
};

/// @brief Term-by-term Borel transform c lambda^{-alpha} -> c zeta^{alpha-1} / Gamma(alpha).
/// @throws precondition_error unless the exponents alpha are strictly
///         increasing with alpha_0 > 0 and every beta is zero.
std::vector<BorelTerm> formal_borel(const std::vector<AsymptoticTerm>& terms, long prec);

/// @brief Laplace transform along the ray direction * R_+:
///          integral over the ray of e^{-lambda zeta} f(zeta) d zeta,
///        computed with the substitution zeta = direction * u^2 (so integrable
///        zeta^{-1/2} behavior at the origin is handled exactly) and a
///        certified truncation of the tail.
/// @param growth_c,growth_a caller-certified bound
///          |f(direction * t)| <= growth_c * e^{growth_a * t} for real t >= 1.
/// @throws precondition_error unless Re(lambda * direction) > growth_a.
APComplex laplace_ray(const std::function<APComplex(const APComplex&)>& f,
                      const APComplex& direction, const APComplex& lambda,
                      const APFloat& growth_c, const APFloat& growth_a,
                      const APFloat& tol, long prec);

/// @brief Growth certificate for the closed-form Borel transform along a unit
///        direction: |B(direction * t)| <= growth_c * e^{growth_a * t} for
///        real t >= 1, from the hyperbolic-sine bounds on F.
/// @throws precondition_error if Re sqrt(8 pi i P direction) <= 0 (the ray
///         i R_+ of the poles and beyond, where no such bound holds).
void borel_growth_bound(const SeifertData& sd, const APComplex& direction, long prec,
                        APFloat& growth_c, APFloat& growth_a);

}  // namespace sfs
