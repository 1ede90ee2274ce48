#pragma once

#include <utility>
#include <vector>

#include "sfs/seifert.hpp"

namespace sfs {

/// @brief Star-shaped plumbing tree: the center vertex first, then each arm's
///        vertices nearest-center-first, in fiber order.
struct PlumbingGraph {
  std::vector<Integer> weights;                   ///< framing per vertex
  std::vector<std::pair<size_t, size_t>> edges;   ///< tree edges (i < j)
  std::vector<size_t> arm_lengths;                ///< vertex count per arm
  std::vector<std::vector<Integer>> arm_k;        ///< k_{j,i} >= 2; weight is -k

  size_t s() const { return weights.size(); }
  const Integer& center_weight() const { return weights[0]; }
  /// @brief Vertex index of arm j's i-th vertex (i = 0 nearest the center).
  size_t arm_vertex(size_t j, size_t i) const;
};

/// @brief Exact linear-algebra data of the plumbing matrix.
struct AdjacencyData {
  std::vector<std::vector<Integer>> M;  ///< symmetric s x s plumbing matrix
  long sigma = 0;                       ///< signature
  Integer det;                          ///< exact determinant
  Integer weight_sum;                   ///< sum of framings
  std::vector<long> degree;             ///< vertex degrees
};

/// @brief Weight exponent and sign of the series prefactor q^{(3 sigma - sum m_v)/4}.
struct SeriesPrefactor {
  Rational exponent;  ///< (3 sigma - sum m_v)/4
  int sign;           ///< (-1)^{number of positive eigenvalues}
};

/// @brief Canonical ceiling-based expansion q/p = k_1 - 1/(k_2 - 1/(...)) with
///        all k_i >= 2 when q > p; verifies itself by exact back-substitution.
/// @throws precondition_error unless q >= p >= 1 and gcd(p,q) = 1.
std::vector<Integer> neg_cont_fraction(const Integer& q, const Integer& p);

/// @brief Star plumbing graph of the sphere: center weight p0 + (number of arms
///        whose coefficient was folded into [1, p_j)), arm j from the expansion
///        of p_j / (q_j mod p_j).
PlumbingGraph build_plumbing(const SeifertData& sd);

/// @brief Plumbing matrix, exact determinant, and signature.
/// @throws computation_error if the matrix is not negative definite (the
///         library's scope is negative definite star plumbings only).
AdjacencyData adjacency(const PlumbingGraph& g);

/// @brief |det| of the graph with arm j's outermost vertex deleted, per arm.
std::vector<Integer> arm_complement_dets(const PlumbingGraph& g);

/// @brief The balancing exponent
///        -(1/4)(sum_j h_j - 3s - c0 + sum_j(-P/p_j^2 + sum_i k_{j,i}))
///        with c0 the built center weight; exact, denominator dividing 4P.
Rational delta_exponent(const PlumbingGraph& g, const SeifertData& sd);

/// @brief Exponent and sign of the overall series prefactor.
SeriesPrefactor series_prefactor(const AdjacencyData& ad);

}  // namespace sfs
