#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "sfs/apcomplex.hpp"

namespace sfs {

/// @brief Nodes and weights of an N-point Gauss-Legendre rule on [-1, 1].
struct GLRule {
  std::vector<APFloat> nodes;    ///< ascending, strictly inside (-1, 1)
  std::vector<APFloat> weights;  ///< positive, summing to 2
};

/// @brief N-point Gauss-Legendre rule at the given precision. Nodes are found
///        by Newton iteration on the three-term Legendre recurrence from the
///        Chebyshev initial guesses; results are cached per (N, prec).
const GLRule& gauss_legendre(size_t n_points, long prec);

/// @brief Integral of f over [a, b] with rules of doubling size until two
///        refinements agree within tol.
/// @throws computation_error if the node budget is exhausted before agreement.
APComplex integrate_interval(const std::function<APComplex(const APFloat&)>& f,
                             const APFloat& a, const APFloat& b, const APFloat& tol,
                             long prec, size_t max_points = 1 << 13);

/// @brief Integral of f over [0, upper] split into consecutive panels of the
///        given width, each refined independently to tol divided by the panel
///        count. Choose panel_width at (or below) the distance from the real
///        axis to the nearest complex singularity of f, so that the per-panel
///        rules converge geometrically.
APComplex integrate_panels(const std::function<APComplex(const APFloat&)>& f,
                           const APFloat& upper, const APFloat& panel_width,
                           const APFloat& tol, long prec);

}  // namespace sfs
