#include "sfs/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "sfs/arith.hpp"

namespace sfs {

namespace {

// Legendre P_N and P_{N-1} at x via the three-term recurrence
// (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
void legendre_pair(size_t n, const APFloat& x, APFloat& pn, APFloat& pnm1) {
  long prec = x.prec();
  APFloat p0 = APFloat::from_long(1, prec);
  APFloat p1 = x;
  if (n == 0) {
    pn = p0;
    pnm1 = APFloat::from_long(0, prec);
    return;
  }
  for (size_t j = 1; j < n; ++j) {
    APFloat p2 = (APFloat::from_long(2 * static_cast<long>(j) + 1, prec) * x * p1 -
                  APFloat::from_long(static_cast<long>(j), prec) * p0) /
                 APFloat::from_long(static_cast<long>(j) + 1, prec);
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  pnm1 = p0;
}

GLRule build_rule(size_t n, long prec) {
  if (n < 2) throw precondition_error("gauss_legendre: need at least 2 points");
  GLRule rule;
  rule.nodes.assign(n, APFloat::from_long(0, prec));
  rule.weights.assign(n, APFloat::from_long(0, prec));
  const APFloat one = APFloat::from_long(1, prec);
  const APFloat stop = APFloat::pow2(-prec + 8, prec);
  const double pi_d = 3.14159265358979323846;
  // Roots come in symmetric pairs; compute the positive half and mirror.
  for (size_t i = 1; 2 * i <= n + 1; ++i) {
    double guess = std::cos(pi_d * (static_cast<double>(i) - 0.25) /
                            (static_cast<double>(n) + 0.5));
    APFloat x = APFloat::from_double(guess, prec);
    APFloat pn(prec), pnm1(prec);
    APFloat dp(prec);
    for (int iter = 0; iter < 128; ++iter) {
      legendre_pair(n, x, pn, pnm1);
      // P'_N(x) = N (x P_N - P_{N-1}) / (x^2 - 1)
      dp = APFloat::from_long(static_cast<long>(n), prec) * (x * pn - pnm1) /
           (x * x - one);
      APFloat dx = pn / dp;
      x = x - dx;
      if (abs(dx) < stop) {
        legendre_pair(n, x, pn, pnm1);
        dp = APFloat::from_long(static_cast<long>(n), prec) * (x * pn - pnm1) /
             (x * x - one);
        break;
      }
      if (iter == 127) throw computation_error("gauss_legendre: Newton failed to converge");
    }
    APFloat w = APFloat::from_long(2, prec) / ((one - x * x) * dp * dp);
    rule.nodes[i - 1] = -x;
    rule.weights[i - 1] = w;
    rule.nodes[n - i] = x;
    rule.weights[n - i] = w;
  }
  return rule;
}

std::mutex g_rule_mutex;
std::map<std::pair<size_t, long>, std::unique_ptr<GLRule>> g_rule_cache;

APComplex apply_rule(const GLRule& rule,
                     const std::function<APComplex(const APFloat&)>& f,
                     const APFloat& a, const APFloat& b, long prec) {
  APFloat half = APFloat::from_rational(Rational(1, 2), prec);
  APFloat mid = (a + b) * half;
  APFloat rad = (b - a) * half;
  APComplex acc = APComplex::zero(prec);
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    APFloat u = mid + rad * rule.nodes[i];
    acc += f(u) * APComplex::from_real(rule.weights[i]);
  }
  return acc * APComplex::from_real(rad);
}

}  // namespace

const GLRule& gauss_legendre(size_t n_points, long prec) {
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto key = std::make_pair(n_points, prec);
  auto it = g_rule_cache.find(key);
  if (it == g_rule_cache.end()) {
    auto rule = std::make_unique<GLRule>(build_rule(n_points, prec));
    it = g_rule_cache.emplace(key, std::move(rule)).first;
  }
  return *it->second;
}

APComplex integrate_interval(const std::function<APComplex(const APFloat&)>& f,
                             const APFloat& a, const APFloat& b, const APFloat& tol,
                             long prec, size_t max_points) {
  size_t n = 16;
  APComplex prev = apply_rule(gauss_legendre(n, prec), f, a, b, prec);
  while (2 * n <= max_points) {
    n *= 2;
    APComplex cur = apply_rule(gauss_legendre(n, prec), f, a, b, prec);
    if (abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw computation_error("integrate_interval: node budget exhausted before tolerance");
}

APComplex integrate_panels(const std::function<APComplex(const APFloat&)>& f,
                           const APFloat& upper, const APFloat& panel_width,
                           const APFloat& tol, long prec) {
  if (!(upper > APFloat::from_long(0, prec)))
    throw precondition_error("integrate_panels: upper must be positive");
  if (!(panel_width > APFloat::from_long(0, prec)))
    throw precondition_error("integrate_panels: panel_width must be positive");
  double ratio = (upper / panel_width).to_double();
  long npan = static_cast<long>(std::ceil(ratio - 1e-12));
  if (npan < 1) npan = 1;
  APFloat per_tol = tol / APFloat::from_long(npan, prec);
  APFloat step = upper / APFloat::from_long(npan, prec);
  APComplex acc = APComplex::zero(prec);
  for (long i = 0; i < npan; ++i) {
    APFloat a = step * APFloat::from_long(i, prec);
    APFloat b = (i + 1 == npan) ? upper : step * APFloat::from_long(i + 1, prec);
    acc += integrate_interval(f, a, b, per_tol, prec);
  }
  return acc;
}

}  // namespace sfs
