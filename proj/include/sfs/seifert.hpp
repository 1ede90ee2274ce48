#pragma once

#include <vector>

#include "sfs/apcomplex.hpp"
#include "sfs/arith.hpp"
#include "sfs/series.hpp"

namespace sfs {

/// @brief A Seifert fibered integral homology sphere given by pairwise-coprime
///        fiber multiplicities, with the two surgery-coefficient normalizations.
///        Fibers are stored with an even multiplicity (if any) first; user_index
///        maps internal positions back to the caller's order.
struct SeifertData {
  std::vector<Integer> p;        ///< multiplicities, internal order (even one first)
  std::vector<size_t> user_index;  ///< user_index[i] = caller position of fiber i
  Integer P;                     ///< product of the multiplicities
  std::vector<Integer> q_intro;  ///< sum q_j/p_j = 1/P, q_1 odd, q_j even for j >= 2
  std::vector<Integer> q_plumb;  ///< q_j in [p_j, 2p_j), q_j (P/p_j) = -1 mod p_j
  Integer p0;                    ///< central coefficient, a negative integer
  Rational euler;                ///< Seifert Euler number -1/P

  size_t n() const { return p.size(); }
};

/// @brief Transcendental and exact constants attached to one Seifert sphere.
struct ConstantsBundle {
  APComplex varsigma;      ///< -(sqrt(P)/4) e^{-3 pi i/4}
  Rational phi;            ///< 3 - 1/P + 12 sum_j S(P/p_j, p_j)
  APComplex kappa;         ///< sqrt(2 pi i P), principal branch
  APComplex lambda;        ///< (-1)^n (i/2) (2P)^{-1/2}
  APComplex mu;            ///< (2 lambda varsigma)^{-1}
  Rational delta_small;    ///< delta = Delta - phi/4
  Integer m0;              ///< P(n - 2 - sum 1/p_j)
  Rational casson_walker;  ///< from -24 lambda(X) = phi + P(n - 2 - sum p_j^{-2})
};

/// @brief Validate multiplicities and solve both coefficient normalizations.
/// @throws precondition_error for n < 3, p_j < 2, or a non-coprime pair
///         (the diagnostic names the offending pair).
SeifertData new_seifert(const std::vector<Integer>& p);

/// @brief Adjust a coefficient list with sum q_j/p_j = 1/P so that q_1 is odd
///        and q_2,...,q_n are even, preserving the sum exactly.
/// @throws precondition_error if more than one p_j is even or p_1 is not the even one.
std::vector<Integer> parity_normalize(const std::vector<Integer>& q,
                                      const std::vector<Integer>& p);

/// @brief All derived constants; Delta is supplied by the plumbing layer.
ConstantsBundle constants(const SeifertData& sd, const Rational& Delta, long prec);

/// @brief F(y) = (1/4) sinh(y/2)^{2-n} prod_j sinh(y/(2 p_j)).
/// @throws pole_error if the evaluation point is exactly a pole.
APComplex eval_F(const SeifertData& sd, const APComplex& y);

/// @brief g(y) = i y^2 / (8 pi P).
APComplex eval_g(const SeifertData& sd, const APComplex& y);

/// @brief G(z) = prod_j (z^{P/p_j} - z^{-P/p_j}) (z^P - z^{-P})^{2-n}.
/// @throws precondition_error at z = 0; pole_error where z^{2P} = 1.
APComplex eval_G(const SeifertData& sd, const APComplex& z);

/// @brief Exact Taylor coefficients of F at 0: r[m] is the y^m coefficient,
///        m < order. Only even m carry nonzero values; the expansion starts at y^2.
PowerSeriesQ F_taylor(const SeifertData& sd, size_t order);

}  // namespace sfs
