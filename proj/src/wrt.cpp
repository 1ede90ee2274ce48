#include "sfs/wrt.hpp"

#include <map>
#include <set>

#include "sfs/quadrature.hpp"
#include "sfs/resurgence.hpp"

namespace sfs {

namespace {

// ---- local expansion of F at y = 2 pi i m ------------------------------

/// sinh(a x)/(a x) as an exact power series in x: x^{2i} -> a^{2i}/(2i+1)!.
PowerSeriesQ sinh_over_arg(const Rational& a, size_t order) {
  PowerSeriesQ s(order);
  Rational a2 = a * a;
  Rational term(1);
  for (size_t i = 0; 2 * i < order; ++i) {
    if (i > 0) term = term * a2 / Rational(static_cast<long>(2 * i) *
                                           static_cast<long>(2 * i + 1));
    s[2 * i] = term;
  }
  return s;
}

struct LocalF {
  int lo;                    ///< lowest exponent, (#divisors of m) - (n-2)
  std::vector<APComplex> c;  ///< c[i] multiplies x^{lo+i}
};

/// Exact local factorization: each sinh through a pole index contributes an
/// x-zero and a rational even series, each of the others a transcendental
/// series in sin/cos of pi m / p_j; the half-angle factor supplies the pole.
LocalF local_expansion_F(const SeifertData& sd, long m, size_t len, long prec) {
  const long n = static_cast<long>(sd.n());
  long zeros = 0;
  long sign_exp = m * n;
  PowerSeriesQ rat = series_pow_neg(sinh_over_arg(Rational(1, 2), len), 2 - n);
  Rational scalar = rational_pow_int(Rational(2), n - 4);
  APSeries trans = APSeries::one(len, prec);
  for (size_t j = 0; j < sd.n(); ++j) {
    long pj = sd.p[j].get_si();
    if (m % pj == 0) {
      ++zeros;
      sign_exp += m / pj;
      scalar *= Rational(1) / Rational(2 * pj);
      rat = rat * sinh_over_arg(Rational(1) / Rational(2 * pj), len);
    } else {
      // sinh(pi i m/p_j + x/(2 p_j)) = i sin(pi m/p_j) cosh(x/(2 p_j))
      //                                + cos(pi m/p_j) sinh(x/(2 p_j))
      APComplex unit = exp_2pi_i(Rational(m) / Rational(2 * pj), prec);
      APSeries fac(len, prec);
      Rational pw(1);  // (1/(2 p_j))^l / l!
      for (size_t l = 0; l < len; ++l) {
        if (l > 0) pw = pw / Rational(2 * pj * static_cast<long>(l));
        APComplex dir = (l % 2 == 0)
                            ? APComplex(APFloat::from_long(0, prec), unit.im())
                            : APComplex::from_real(unit.re());
        fac[l] = dir * APComplex::from_real(APFloat::from_rational(pw, prec));
      }
      trans = trans * fac;
    }
  }
  if (sign_exp % 2 != 0) scalar = -scalar;
  APSeries total = APSeries::from_rational(rat, prec) * trans;
  LocalF out;
  out.lo = static_cast<int>(zeros) - static_cast<int>(n - 2);
  out.c.reserve(len);
  APComplex sc = APComplex::from_rational(scalar, prec);
  for (size_t i = 0; i < len; ++i) out.c.push_back(total[i] * sc);
  return out;
}

/// exp(k[(-m/2P) x + (i/(8 pi P)) x^2]), the level exponential with its
/// constant phase at the pole factored off: the x^j coefficient is
/// sum_{2b <= j} k^{j-b} (-m/2P)^{j-2b} (i/(8 pi P))^b / ((j-2b)! b!).
LaurentPolySeries level_exponential_series(const SeifertData& sd, long m, int order,
                                           long prec) {
  long P = sd.P.get_si();
  Rational lin = Rational(-m) / Rational(2 * P);
  std::vector<Rational> lin_fact(order, Rational(1));  // lin^t / t!
  for (int t = 1; t < order; ++t) lin_fact[t] = lin_fact[t - 1] * lin / Rational(t);
  APComplex quad = APComplex::i(prec) /
                   APComplex::from_real(APFloat::from_long(8 * P, prec) * APFloat::pi(prec));
  std::vector<APComplex> quad_fact(static_cast<size_t>(order) / 2 + 1,
                                   APComplex::one(prec));  // quad^b / b!
  for (size_t b = 1; b < quad_fact.size(); ++b)
    quad_fact[b] = quad_fact[b - 1] * quad / APComplex::from_long(static_cast<long>(b), prec);

  LaurentPolySeries ks(0, order, prec);
  for (int j = 0; j < order; ++j) {
    KPoly acc(prec);
    for (int b = 0; 2 * b <= j; ++b) {
      APComplex c = APComplex::from_rational(lin_fact[j - 2 * b], prec) * quad_fact[b];
      acc += KPoly::monomial(c, j - b);
    }
    ks.at(j) = acc;
  }
  return ks;
}

APFloat poly_scale(const KPoly& p) {
  APFloat s = APFloat::from_long(0, p.prec());
  for (int d = p.lo(); d < p.hi(); ++d) {
    APFloat a = abs(p.coeff(d));
    if (a > s) s = a;
  }
  return s;
}

// ---- shared geometry of the Gaussian-weighted integral ------------------

struct IntegralGeometry {
  APComplex direction;  ///< 2 kappa = 2 sqrt(2 pi i P): F's argument per unit u
  APComplex pref;       ///< 2 sqrt(2P) / sqrt(pi i)
  APFloat growth_c;     ///< |F(direction u)| <= growth_c e^{growth_a u}, u >= 1
  APFloat growth_a;
  APFloat width;        ///< panel width matched to the nearest pole distance
};

IntegralGeometry integral_geometry(const SeifertData& sd, long prec) {
  long P = sd.P.get_si();
  long n = static_cast<long>(sd.n());
  IntegralGeometry geo;
  geo.direction = APComplex::from_long(2, prec) *
                  sqrt(APComplex(APFloat::from_long(0, prec),
                                 APFloat::from_long(2 * P, prec) * APFloat::pi(prec)));
  geo.pref = APComplex::from_real(APFloat::from_long(2, prec) *
                                  sqrt(APFloat::from_long(2 * P, prec))) /
             sqrt(APComplex(APFloat::from_long(0, prec), APFloat::pi(prec)));
  APFloat re_dir = geo.direction.re();  // 2 sqrt(pi P)
  APFloat cf = APFloat::from_rational(Rational(1, 4), prec);
  APFloat base = APFloat::from_long(2, prec) / (APFloat::from_long(1, prec) - exp(-re_dir));
  for (long j = 0; j < n - 2; ++j) cf = cf * base;
  geo.growth_c = cf;
  Rational slope(0);
  for (const Integer& pj : sd.p) slope += Rational(1) / Rational(pj);
  slope -= n - 2;
  geo.growth_a = re_dir * APFloat::from_rational(slope / 2, prec);
  // Poles of F(direction u) sit at u = m sqrt(pi/2P) e^{i pi/4}: distance
  // m sqrt(pi/4P) from the real axis. Panels of twice that width keep the
  // per-panel rules geometric.
  APFloat d1 = sqrt(APFloat::pi(prec) / APFloat::from_long(4 * P, prec));
  APFloat half = APFloat::from_rational(Rational(1, 2), prec);
  geo.width = d1 + d1 < half ? d1 + d1 : half;
  return geo;
}

/// Smallest convenient U >= 1 with C e^{-kU^2 + aU} / (2kU - a) below tol.
APFloat tail_cutoff(const IntegralGeometry& geo, long k, const APFloat& tol, long prec) {
  APFloat u = APFloat::from_long(1, prec);
  APFloat half = APFloat::from_rational(Rational(1, 2), prec);
  APFloat kf = APFloat::from_long(k, prec);
  for (int step = 0; step < 256; ++step) {
    APFloat denom = (kf + kf) * u - geo.growth_a;
    if (denom > APFloat::from_long(0, prec)) {
      APFloat bound = geo.growth_c * exp(geo.growth_a * u - kf * u * u) / denom;
      if (bound < tol) return u;
    }
    u = u + half;
  }
  throw computation_error("integral_part: tail cutoff search failed");
}

}  // namespace

PrincipalPart principal_part_F(const SeifertData& sd, long m, long prec) {
  if (m < 1) throw precondition_error("principal_part_F: m must be positive");
  const size_t n = sd.n();
  LocalF lf = local_expansion_F(sd, m, n + 6, prec);
  PrincipalPart pp;
  pp.m = m;
  pp.f.assign(n - 2, APComplex::zero(prec));
  for (long j = 1; j <= static_cast<long>(n) - 2; ++j) {
    long idx = -j - lf.lo;
    if (idx >= 0 && idx < static_cast<long>(lf.c.size())) pp.f[j - 1] = lf.c[idx];
  }
  return pp;
}

LaurentPolySeries bernoulli_kernel_series(int order, long prec) {
  if (order < 2)
    throw precondition_error("bernoulli_kernel_series: order must be at least 2");
  LaurentPolySeries d(-1, order - 1, prec);
  d.at(-1) = KPoly::monomial(APComplex::one(prec), -1);
  d.at(0) = KPoly::constant(APComplex::from_rational(Rational(1, 2), prec));
  Rational fact(1);
  for (int j = 2; j < order; ++j) {
    fact *= Rational(j);
    if (j % 2 != 0) continue;  // odd Bernoulli numbers beyond B_1 vanish
    d.at(j - 1) = KPoly::monomial(
        APComplex::from_rational(bernoulli_number(static_cast<unsigned long>(j)) / fact,
                                 prec),
        j - 1);
  }
  return d;
}

KPoly residue_at_pole(const SeifertData& sd, long m, long prec) {
  if (m < 1) throw precondition_error("residue_at_pole: m must be positive");
  const int len = static_cast<int>(sd.n()) + 6;
  LocalF lf = local_expansion_F(sd, m, static_cast<size_t>(len), prec);
  LaurentPolySeries fs(lf.lo, lf.lo + len, prec);
  for (int i = 0; i < len; ++i) fs.at(lf.lo + i) = KPoly::constant(lf.c[i]);
  LaurentPolySeries prod =
      fs * level_exponential_series(sd, m, len, prec) * bernoulli_kernel_series(len, prec);
  return laurent_residue(prod);
}

std::vector<PhasePolynomial> phase_polynomials(const SeifertData& sd, long prec) {
  long P = sd.P.get_si();
  std::map<RationalModZ, KPoly> acc;
  for (long m = 1; m <= 2 * P - 1; ++m) {
    KPoly r = residue_at_pole(sd, m, prec);
    if (r.is_zero()) continue;
    RationalModZ theta(Rational(-Integer(m) * Integer(m)) / Rational(4 * P));
    auto it = acc.find(theta);
    if (it == acc.end())
      acc.emplace(theta, r);
    else
      it->second += r;
  }

  APFloat scale = APFloat::from_long(1, prec);
  for (const auto& [theta, poly] : acc) {
    APFloat s = poly_scale(poly);
    if (s > scale) scale = s;
  }
  APFloat tiny = APFloat::pow2(-prec / 2, prec) * scale;

  CSValueSet w = enumerate_W(sd.p);
  std::set<RationalModZ> wset(w.values.begin(), w.values.end());
  const int degmax = static_cast<int>(sd.n()) - 3;

  std::vector<PhasePolynomial> out;
  out.reserve(w.values.size());
  for (const RationalModZ& theta : w.values) {
    KPoly cleaned = KPoly::constant(APComplex::zero(prec));
    auto it = acc.find(theta);
    if (it != acc.end()) {
      const KPoly& raw = it->second;
      if (!(abs(raw.coeff(-1)) < tiny))
        throw computation_error(
            "phase_polynomials: k^{-1} slot failed to cancel within a weight class");
      for (int d = degmax + 1; d < raw.hi(); ++d)
        if (!(abs(raw.coeff(d)) < tiny))
          throw computation_error(
              "phase_polynomials: unexpected high-degree term in a weight class");
      for (int d = 0; d <= degmax; ++d)
        cleaned += KPoly::monomial(-raw.coeff(d), d);
    }
    out.push_back(PhasePolynomial{theta, cleaned});
  }
  for (const auto& [theta, poly] : acc) {
    if (wset.count(theta)) continue;
    if (!(poly_scale(poly) < tiny))
      throw computation_error(
          "phase_polynomials: class outside the value set failed to cancel");
  }
  return out;
}

ResidueDecomposition residue_part(const SeifertData& sd, long k, long prec) {
  if (k < 1) throw precondition_error("residue_part: k must be positive");
  ResidueDecomposition rd;
  rd.phases = phase_polynomials(sd, prec);
  APComplex tot = APComplex::zero(prec);
  for (const PhasePolynomial& ph : rd.phases)
    tot += exp_2pi_i(Rational(k) * ph.theta.rep(), prec) * ph.poly.eval(k);
  rd.total = tot;
  return rd;
}

APComplex integral_part(const SeifertData& sd, long k, long prec) {
  return integral_part_batch(sd, k, k, prec)[0];
}

std::vector<APComplex> integral_part_batch(const SeifertData& sd, long k_lo, long k_hi,
                                           long prec) {
  if (k_lo < 1 || k_hi < k_lo)
    throw precondition_error("integral_part_batch: need 1 <= k_lo <= k_hi");
  IntegralGeometry geo = integral_geometry(sd, prec);
  APFloat tol = APFloat::pow2(-prec + 16, prec) / abs(geo.pref);
  APFloat half_tol = tol * APFloat::from_rational(Rational(1, 2), prec);
  APFloat upper = tail_cutoff(geo, k_lo, half_tol, prec);

  double ratio = (upper / geo.width).to_double();
  long npan = static_cast<long>(ratio) + 1;
  APFloat per_tol = half_tol / APFloat::from_long(npan, prec);
  APFloat step = upper / APFloat::from_long(npan, prec);

  const size_t nk = static_cast<size_t>(k_hi - k_lo + 1);
  std::vector<APComplex> totals(nk, APComplex::zero(prec));
  APFloat hf = APFloat::from_rational(Rational(1, 2), prec);
  for (long i = 0; i < npan; ++i) {
    APFloat a = step * APFloat::from_long(i, prec);
    APFloat b = step * APFloat::from_long(i + 1, prec);
    APFloat mid = (a + b) * hf;
    APFloat rad = (b - a) * hf;
    std::vector<APComplex> prev;
    for (size_t npts = 16;; npts *= 2) {
      if (npts > (1u << 13))
        throw computation_error("integral_part: node budget exhausted before tolerance");
      const GLRule& rule = gauss_legendre(npts, prec);
      std::vector<APComplex> cur(nk, APComplex::zero(prec));
      for (size_t t = 0; t < npts; ++t) {
        APFloat u = mid + rad * rule.nodes[t];
        APComplex fv = eval_F(sd, geo.direction * APComplex::from_real(u)) *
                       APComplex::from_real(rule.weights[t]);
        APFloat e1 = exp(-(u * u));
        APFloat p = pow(e1, APFloat::from_long(k_lo, prec));
        for (size_t j = 0; j < nk; ++j) {
          cur[j] += fv * APComplex::from_real(p);
          if (j + 1 < nk) p = p * e1;
        }
      }
      for (size_t j = 0; j < nk; ++j) cur[j] = cur[j] * APComplex::from_real(rad);
      if (!prev.empty()) {
        APFloat worst = APFloat::from_long(0, prec);
        for (size_t j = 0; j < nk; ++j) {
          APFloat d = abs(cur[j] - prev[j]);
          if (d > worst) worst = d;
        }
        if (worst < per_tol) {
          for (size_t j = 0; j < nk; ++j) totals[j] += cur[j];
          break;
        }
      }
      prev = std::move(cur);
    }
  }
  for (size_t j = 0; j < nk; ++j) totals[j] = geo.pref * totals[j];
  return totals;
}

WRTValue normalized_wrt(const SeifertData& sd, long k, long prec) {
  WRTValue v;
  v.k = k;
  v.z_integral = integral_part(sd, k, prec);
  v.z_residue = residue_part(sd, k, prec).total;
  v.z_total = v.z_integral + v.z_residue;
  return v;
}

APComplex residue_operator(const SeifertData& sd, const RationalModZ& theta, long k,
                           long prec) {
  if (k < 1) throw precondition_error("residue_operator: k must be positive");
  CSValueSet w = enumerate_W(sd.p);
  auto fiber = w.fibers.find(theta);
  if (fiber == w.fibers.end()) return APComplex::zero(prec);

  long P = sd.P.get_si();
  BorelFunction borel(sd, prec);
  APComplex denom8(APFloat::from_long(0, prec),
                   APFloat::from_long(8 * P, prec) * APFloat::pi(prec));
  APComplex four_p = APComplex::from_long(4 * P, prec);
  APComplex kc = APComplex::from_long(k, prec);

  // circle radius: a quarter of the 2 pi/k spacing of the kernel's pole lattice
  APFloat radius = APFloat::pi(prec) / APFloat::from_long(2 * k, prec);
  APFloat half = APFloat::from_rational(Rational(1, 2), prec);
  if (!(radius < half)) radius = half;
  APFloat stop = APFloat::pow2(-prec + 24, prec);

  auto integrand = [&](const APComplex& y) -> APComplex {
    APComplex zeta = y * y / denom8;
    return exp(kc * eval_g(sd, y)) / (APComplex::one(prec) - exp(-(kc * y))) *
           (y / four_p) * borel.eval(zeta);
  };

  APComplex total = APComplex::zero(prec);
  for (long m : fiber->second) {
    APComplex center(APFloat::from_long(0, prec),
                     APFloat::from_long(2 * m, prec) * APFloat::pi(prec));
    APComplex prev(prec);
    bool have_prev = false;
    for (size_t npts = 32;; npts *= 2) {
      if (npts > (1u << 12))
        throw computation_error("residue_operator: trapezoid budget exhausted");
      APComplex acc = APComplex::zero(prec);
      for (size_t t = 0; t < npts; ++t) {
        APComplex x = APComplex::from_real(radius) *
                      exp_2pi_i(Rational(static_cast<long>(t)) /
                                    Rational(static_cast<long>(npts)),
                                prec);
        acc += integrand(center + x) * x;
      }
      acc = acc / APComplex::from_long(static_cast<long>(npts), prec);
      if (have_prev && abs(acc - prev) < stop) {
        total += acc;
        break;
      }
      prev = acc;
      have_prev = true;
    }
  }
  return -total;
}

APComplex polylog_neg(long l, const APComplex& z) {
  if (l < 0) throw precondition_error("polylog_neg: order parameter must be >= 0");
  long prec = z.re().prec();
  APComplex one = APComplex::one(prec);
  if (abs(one - z).is_zero()) throw pole_error("polylog_neg: pole at z = 1");

  // N_0 = z; N_{s+1} = z ((1-z) N_s' + (s+1) N_s); Li_{-l}(z) = N_l/(1-z)^{l+1}.
  std::vector<Integer> num{0, 1};
  for (long s = 0; s < l; ++s) {
    std::vector<Integer> deriv(num.size() > 1 ? num.size() - 1 : 1, Integer(0));
    for (size_t i = 1; i < num.size(); ++i) deriv[i - 1] = Integer(i) * num[i];
    std::vector<Integer> combined(num.size() + 1, Integer(0));
    for (size_t i = 0; i < deriv.size(); ++i) {
      combined[i] += deriv[i];       // N'
      combined[i + 1] -= deriv[i];   // -z N'
    }
    for (size_t i = 0; i < num.size(); ++i) combined[i] += Integer(s + 1) * num[i];
    std::vector<Integer> next(combined.size() + 1, Integer(0));
    for (size_t i = 0; i < combined.size(); ++i) next[i + 1] = combined[i];
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    num = std::move(next);
  }
  APComplex val = APComplex::zero(prec);
  for (size_t i = num.size(); i-- > 0;)
    val = val * z + APComplex::from_rational(Rational(num[i]), prec);
  return val / pow_int(one - z, l + 1);
}

GeneratingFunctionResult generating_function(const SeifertData& sd, const APComplex& z,
                                             size_t order, long prec) {
  if (!(abs(z) < APFloat::from_rational(Rational(1, 2), prec)))
    throw precondition_error("generating_function: need |z| < 1/2");
  std::vector<PhasePolynomial> phases = phase_polynomials(sd, prec);
  const int degmax = static_cast<int>(sd.n()) - 3;

  // Partial sum of the series, term by term.
  std::vector<APComplex> zi =
      integral_part_batch(sd, 2, static_cast<long>(order) + 2, prec);
  APComplex partial = APComplex::zero(prec);
  APComplex zpow = APComplex::one(prec);
  for (size_t j = 0; j <= order; ++j) {
    long k = static_cast<long>(j) + 2;
    APComplex zr = APComplex::zero(prec);
    for (const PhasePolynomial& ph : phases)
      zr += exp_2pi_i(Rational(k) * ph.theta.rep(), prec) * ph.poly.eval(k);
    partial += zpow * (zi[j] + zr);
    zpow = zpow * z;
  }

  // Closed form, integral piece: the geometric sum collapses the level
  // sequence into the kernel e^{-2u^2} / (1 - z e^{-u^2}).
  IntegralGeometry geo = integral_geometry(sd, prec);
  APFloat one_minus = APFloat::from_long(1, prec) - abs(z);
  APFloat tol = APFloat::pow2(-prec + 16, prec) / abs(geo.pref);
  APFloat half_tol = tol * APFloat::from_rational(Rational(1, 2), prec);
  IntegralGeometry tail_geo = geo;
  tail_geo.growth_c = geo.growth_c / one_minus;
  APFloat upper = tail_cutoff(tail_geo, 2, half_tol, prec);
  auto integrand = [&](const APFloat& u) -> APComplex {
    APFloat e1 = exp(-(u * u));
    APComplex weight = APComplex::from_real(e1 * e1) /
                       (APComplex::one(prec) - z * APComplex::from_real(e1));
    return eval_F(sd, geo.direction * APComplex::from_real(u)) * weight;
  };
  APComplex closed = geo.pref * integrate_panels(integrand, upper, geo.width, half_tol, prec);

  // Closed form, residue piece: sector sums of polylogarithms.
  bool near_singularity = false;
  APFloat sing_tol = APFloat::from_rational(Rational(1, 1000), prec);
  for (const PhasePolynomial& ph : phases) {
    APComplex w_theta = z * exp_2pi_i(ph.theta.rep(), prec);
    if (abs(APComplex::one(prec) - w_theta) < sing_tol) near_singularity = true;
    APComplex sector = APComplex::zero(prec);
    for (int j = 0; j <= degmax; ++j) {
      APComplex cj = ph.poly.coeff(j);
      // sum_{k>=0} (k+2)^j w^k = 2^j + sum_{l<=j} C(j,l) 2^{j-l} Li_{-l}(w)
      APComplex inner = APComplex::from_rational(rational_pow_int(Rational(2), j), prec);
      for (int l = 0; l <= j; ++l) {
        Rational weight = Rational(binomial(Integer(j), static_cast<unsigned long>(l))) *
                          rational_pow_int(Rational(2), j - l);
        inner += APComplex::from_rational(weight, prec) * polylog_neg(l, w_theta);
      }
      sector += cj * inner;
    }
    closed += exp_2pi_i(ph.theta.rep() * 2, prec) * sector;
  }

  GeneratingFunctionResult res;
  res.partial_sum = partial;
  res.closed_form = closed;
  res.near_singularity = near_singularity;
  return res;
}

}  // namespace sfs
