#pragma once

#include <map>
#include <vector>

#include "sfs/seifert.hpp"

namespace sfs {

/// @brief A label tuple for the flat moduli space: 0 <= l_1 <= p_1 and
///        0 <= l_j <= (p_j - 1)/2 for j >= 2, with at least three active indices
///        (index 1 is active iff l_1 differs from 0 and p_1; j >= 2 iff l_j != 0).
struct LTuple {
  std::vector<long> l;
  bool operator==(const LTuple& o) const { return l == o.l; }
};

/// @brief The Chern-Simons value set and its phase fibers.
struct CSValueSet {
  std::vector<RationalModZ> values;                  ///< sorted, zero excluded
  std::map<RationalModZ, std::vector<long>> fibers;  ///< theta -> all m in 1..2P-1 with
                                                     ///< -m^2/4P = theta mod 1
};

/// @brief 2x2 complex matrix (row major).
struct Mat2 {
  APComplex a, b, c, d;

  explicit Mat2(long prec = 256) : a(prec), b(prec), c(prec), d(prec) {}
  Mat2(APComplex a_, APComplex b_, APComplex c_, APComplex d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity(long prec);
  static Mat2 diagonal(const APComplex& top, const APComplex& bottom);

  APComplex trace() const { return a + d; }
  APComplex det() const { return a * d - b * c; }
  /// @brief Inverse for unit-determinant matrices.
  Mat2 sl2_inverse() const { return Mat2(d, -b, -c, a); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
};

/// @brief Largest |entry| (numeric infinity norm).
APFloat entry_norm(const Mat2& m);

/// @brief Matrix images of the generators h, x_1, ..., x_n.
struct RepMatrices {
  Mat2 h;
  std::vector<Mat2> x;
};

/// @brief All label tuples, lexicographically ordered.
std::vector<LTuple> enumerate_L(const std::vector<Integer>& p);

/// @brief -(P/4)(l_1/p_1 + sum_{j>=2} 2 l_j/p_j)^2 mod 1, exactly.
RationalModZ cs_value(const LTuple& l, const std::vector<Integer>& p);

/// @brief {[-m^2/4P] : m divisible by at most n-3 of the p_j}, with fibers.
CSValueSet enumerate_W(const std::vector<Integer>& p);

/// @brief Label tuple whose Chern-Simons value is [-y^2/4P], built by CRT over
///        Z/4p_1 + Z/p_2 + ... + Z/p_n with deterministic representative folding.
/// @throws precondition_error if y is divisible by more than n-3 of the p_j.
LTuple solve_congruence(const Integer& y, const std::vector<Integer>& p);

/// @brief SL(2,C) representation of the fundamental group with x_j conjugate to
///        the diagonal matrix of the prescribed eigenvalue pair for each active j.
/// @throws computation_error on numerically degenerate data (should not occur
///         for label tuples in L).
RepMatrices construct_representation(const LTuple& l, const SeifertData& sd, long prec);

}  // namespace sfs
