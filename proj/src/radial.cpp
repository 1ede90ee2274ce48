#include "sfs/radial.hpp"

#include <algorithm>
#include <utility>

#include "sfs/chern_simons.hpp"
#include "sfs/qseries.hpp"
#include "sfs/quadrature.hpp"
#include "sfs/resurgence.hpp"
#include "sfs/wrt.hpp"

namespace sfs {

namespace {

/// Weight class of the lattice point m: [-m^2 / 4P].
RationalModZ theta_of(long m, const Integer& big_p) {
  Integer num = -Integer(m) * Integer(m);
  Integer den = 4 * big_p;
  return RationalModZ(Rational(num) / Rational(den));
}

/// e^{k g(2 pi i m)} = e^{2 pi i (-k m^2 / 4P)}, exact for integer k.
APComplex lattice_phase(long m, long k, const Integer& big_p, long prec) {
  Integer num = -Integer(k) * Integer(m) * Integer(m);
  Integer den = 4 * big_p;
  return exp_2pi_i(Rational(num) / Rational(den), prec);
}

Rational factorial_rat(long r) {
  Rational f(1);
  for (long i = 2; i <= r; ++i) f *= i;
  return f;
}

Rational binom_half(long s) {
  Rational b(1);
  for (long i = 0; i < s; ++i)
    b = b * (Rational(1) / Rational(2) - Rational(i)) / Rational(i + 1);
  return b;
}

Rational integer_pow(long base, long e) {
  Rational b(base);
  return rational_pow_int(b, e);
}

/// (2P)^{2r+v} / (2r+v+1) * B_{2r+v+1}(m / 2P) * (-1)^r / r!
Rational bernoulli_weight(long two_p, long r, long v, long m) {
  long d = 2 * r + v;
  Rational x = Rational(m) / Rational(two_p);
  Rational w = rational_pow_int(Rational(two_p), d) / Rational(d + 1) *
               bernoulli_polynomial(static_cast<unsigned long>(d + 1), x);
  if (r % 2 != 0) w = -w;
  return w / factorial_rat(r);
}

}  // namespace

const APComplex& PeriodicFn::at(long m) const {
  if (period < 1 || values.size() != static_cast<size_t>(period))
    throw precondition_error("PeriodicFn: empty or inconsistent table");
  long i = (m - 1) % period;
  if (i < 0) i += period;
  return values[static_cast<size_t>(i)];
}

APComplex PeriodicFn::value_sum(long prec) const {
  APComplex s = APComplex::zero(prec);
  for (const APComplex& v : values) s = s + v;
  return s;
}

ExactPiValue ExactPiValue::of(const Rational& r, long e) {
  ExactPiValue v;
  if (r != 0) v.terms[e] = r;
  return v;
}

ExactPiValue& ExactPiValue::add(const Rational& r, long e) {
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (r != 0) terms[e] = r;
  } else {
    it->second += r;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

ExactPiValue& ExactPiValue::operator+=(const ExactPiValue& o) {
  for (const auto& [e, r] : o.terms) add(r, e);
  return *this;
}

ExactPiValue ExactPiValue::scaled(const Rational& r, long e) const {
  ExactPiValue v;
  if (r == 0) return v;
  for (const auto& [ee, rr] : terms) v.terms[ee + e] = rr * r;
  return v;
}

bool ExactPiValue::is_zero() const { return terms.empty(); }

bool ExactPiValue::operator==(const ExactPiValue& o) const { return terms == o.terms; }

APComplex ExactPiValue::value(long prec) const {
  APComplex pi_i(APFloat(prec), APFloat::pi(prec));
  APComplex acc = APComplex::zero(prec);
  for (const auto& [e, r] : terms) {
    APComplex p = e >= 0 ? pow_int(pi_i, e) : APComplex::one(prec) / pow_int(pi_i, -e);
    acc = acc + APComplex::from_rational(r, prec) * p;
  }
  return acc;
}

const ExactPiValue* TaylorPhasePoly::find(long u, long v) const {
  auto it = coeff.find({u, v});
  return it == coeff.end() ? nullptr : &it->second;
}

APComplex l_series_neg(const PeriodicFn& C, long r, long prec) {
  if (r < 0) throw precondition_error("l_series_neg: the order must be >= 0");
  if (C.period < 1 || C.values.size() != static_cast<size_t>(C.period))
    throw precondition_error("l_series_neg: empty or inconsistent periodic table");
  APComplex s = C.value_sum(prec);
  APFloat scale = APFloat::from_long(1, prec);
  for (const APComplex& v : C.values) {
    APFloat a = abs(v);
    if (a > scale) scale = a;
  }
  if (abs(s) > APFloat::pow2(-prec / 2, prec) * scale)
    throw precondition_error("l_series_neg: the values must sum to zero over a period");
  long big_m = C.period;
  APComplex acc = APComplex::zero(prec);
  for (long m = 1; m <= big_m; ++m) {
    Rational b = bernoulli_polynomial(static_cast<unsigned long>(r + 1),
                                      Rational(m) / Rational(big_m));
    acc = acc + C.values[static_cast<size_t>(m - 1)] * APComplex::from_rational(b, prec);
  }
  Rational pre = -rational_pow_int(Rational(big_m), r) / Rational(r + 1);
  return acc * APComplex::from_rational(pre, prec);
}

APComplex qexp_asymptotics(const PeriodicFn& C, const std::vector<APComplex>& q,
                           const APFloat& t, long orders, long prec) {
  if (orders < 0) throw precondition_error("qexp_asymptotics: orders must be >= 0");
  if (q.empty())
    throw precondition_error("qexp_asymptotics: the polynomial needs a coefficient");
  APComplex total = APComplex::zero(prec);
  for (size_t u = 0; u < q.size(); ++u) {
    APComplex term = APComplex::one(prec);  // (-t)^r / r!
    APComplex inner = APComplex::zero(prec);
    for (long r = 0; r <= orders; ++r) {
      if (r > 0) term = term * APComplex::from_real(-t) / APComplex::from_long(r, prec);
      inner = inner + l_series_neg(C, 2 * r + static_cast<long>(u), prec) * term;
    }
    total = total + q[u] * inner;
  }
  return total;
}

std::vector<TaylorPhasePoly> phase_taylor_polys(const SeifertData& sd, long l_max) {
  if (l_max < 0) throw precondition_error("phase_taylor_polys: l_max must be >= 0");
  Integer two_p = 2 * sd.P;
  Integer four_p = 4 * sd.P;
  Rational lin = Rational(-1) / Rational(two_p);   // multiplies m x
  Rational quad = Rational(-1) / Rational(four_p);  // carries (pi i)^{-1} x
  std::vector<TaylorPhasePoly> out(static_cast<size_t>(l_max) + 1);
  out[0].l = 0;
  out[0].coeff[{0, 0}] = ExactPiValue::of(Rational(1), 0);
  for (long l = 0; l < l_max; ++l) {
    TaylorPhasePoly next;
    next.l = l + 1;
    Rational inv = Rational(1) / Rational(l + 1);
    for (const auto& [uv, c] : out[static_cast<size_t>(l)].coeff) {
      ExactPiValue t = c.scaled(lin * inv, 0);
      if (!t.is_zero()) next.coeff[{uv.first + 1, uv.second + 1}] += t;
    }
    if (l >= 1) {
      for (const auto& [uv, c] : out[static_cast<size_t>(l - 1)].coeff) {
        ExactPiValue t = c.scaled(quad * inv, -1);
        if (!t.is_zero()) next.coeff[{uv.first + 1, uv.second}] += t;
      }
    }
    out[static_cast<size_t>(l + 1)] = std::move(next);
  }
  return out;
}

PeriodicFn weighted_principal_fn(const SeifertData& sd, long j, long k, long prec) {
  long n = static_cast<long>(sd.n());
  if (j < 1 || j > n - 2)
    throw precondition_error("weighted_principal_fn: j must lie in 1..n-2");
  long two_p = 2 * sd.P.get_si();
  PeriodicFn C;
  C.period = two_p;
  C.values.reserve(static_cast<size_t>(two_p));
  for (long m = 1; m <= two_p; ++m) {
    PrincipalPart pp = principal_part_F(sd, m, prec);
    C.values.push_back(lattice_phase(m, k, sd.P, prec) * pp.f[static_cast<size_t>(j - 1)]);
  }
  return C;
}

APComplex weighted_principal_mean(const SeifertData& sd, long j, long k, long prec) {
  return weighted_principal_fn(sd, j, k, prec).value_sum(prec);
}

RadialSeries weight_class_expansion(const SeifertData& sd, const RationalModZ& theta,
                                    long k, long t_orders, long prec,
                                    bool drop_constant) {
  if (sd.P % 2 != 0)
    throw precondition_error("weight_class_expansion: the fiber product must be even");
  if (k % 2 != 0)
    throw precondition_error("weight_class_expansion: the level must be even");
  if (t_orders < 0)
    throw precondition_error("weight_class_expansion: t_orders must be >= 0");
  if (!(theta == RationalModZ(Rational(0)))) {
    CSValueSet w = enumerate_W(sd.p);
    if (std::find(w.values.begin(), w.values.end(), theta) == w.values.end())
      throw precondition_error(
          "weight_class_expansion: theta is neither zero nor a weight of the manifold");
  }
  long n = static_cast<long>(sd.n());
  long two_p = 2 * sd.P.get_si();
  std::vector<TaylorPhasePoly> polys = phase_taylor_polys(sd, n - 3);
  RadialSeries out;
  out.theta = theta;
  out.k = k;
  out.with_constant = !drop_constant;
  out.t_coeff.assign(static_cast<size_t>(t_orders) + 1, APComplex::zero(prec));
  for (long m = 1; m <= two_p; ++m) {
    if (!(theta_of(m, sd.P) == theta)) continue;
    PrincipalPart pp = principal_part_F(sd, m, prec);
    for (long j = 1; j <= n - 2; ++j) {
      const APComplex& f = pp.f[static_cast<size_t>(j - 1)];
      if (f.re().is_zero() && f.im().is_zero()) continue;
      for (const auto& [uv, piv] : polys[static_cast<size_t>(j - 1)].coeff) {
        long u = uv.first;
        long v = uv.second;
        APComplex w = f * piv.value(prec) *
                      APComplex::from_rational(integer_pow(k, u), prec);
        for (long r = 0; r <= t_orders; ++r)
          out.t_coeff[static_cast<size_t>(r)] =
              out.t_coeff[static_cast<size_t>(r)] +
              w * APComplex::from_rational(bernoulli_weight(two_p, r, v, m), prec);
      }
    }
  }
  if (drop_constant) out.t_coeff[0] = APComplex::zero(prec);
  return out;
}

std::vector<APComplex> trunk_coefficients(const SeifertData& sd, long k, long r_max,
                                          long prec) {
  if (k < 1) throw precondition_error("trunk_coefficients: the level must be >= 1");
  if (r_max < 0) throw precondition_error("trunk_coefficients: r_max must be >= 0");
  long wp = prec + 32;
  APFloat pi = APFloat::pi(wp);
  APFloat half = APFloat::from_rational(Rational(1) / Rational(2), wp);
  APFloat rt_half = sqrt(half);  // cos(pi/4) = sin(pi/4)
  APComplex w(rt_half, rt_half);  // the ray direction e^{i pi/4}
  APFloat gc(wp), ga(wp);
  borel_growth_bound(sd, w, wp, gc, ga);
  APFloat mu = APFloat::from_long(k, wp) * rt_half - ga;
  if (!(mu > APFloat(wp)))
    throw precondition_error(
        "trunk_coefficients: the transform outgrows the exponential decay on the ray");
  // Cutoff S with mu S^2 > (wp + 40) ln 2 + ln(growth) + (2 r_max + 1) ln S.
  APFloat ln2 = log(APFloat::from_long(2, wp));
  APFloat budget = APFloat::from_long(wp + 40, wp) * ln2;
  APFloat lgc = log(gc);
  if (lgc > APFloat(wp)) budget = budget + lgc;
  APFloat s2 = budget / mu;
  for (int it = 0; it < 2; ++it)
    s2 = (budget +
          APFloat::from_long(2 * r_max + 1, wp) * log(APFloat::from_long(1, wp) + sqrt(s2))) /
         mu;
  APFloat upper = sqrt(s2) + APFloat::from_long(1, wp);
  // Panels no wider than the distance from the real s-axis to the nearest
  // pole of B0(w s^2): |sin(pi/8)| sqrt(pi / 2P).
  APFloat sin_eighth = sqrt((APFloat::from_long(1, wp) - rt_half) * half);
  APFloat width = sin_eighth * sqrt(pi / APFloat::from_rational(Rational(2 * sd.P), wp));
  BorelFunction b0(sd, wp);
  APComplex kc = APComplex::from_long(k, wp);
  APFloat tol = APFloat::pow2(-prec - 16, wp);
  std::vector<APComplex> out;
  out.reserve(static_cast<size_t>(r_max) + 1);
  for (long r = 0; r <= r_max; ++r) {
    auto integrand = [&](const APFloat& s) {
      APComplex zeta = w * APComplex::from_real(s * s);
      APComplex val = exp(-(kc * zeta)) * b0.eval(zeta) * w *
                      APComplex::from_real(s + s);
      return r == 0 ? val : val * pow_int(zeta, r);
    };
    APComplex raw = integrate_panels(integrand, upper, width, tol, wp);
    // (2 i P / pi)^r / r! = (-2P)^r / r! * (pi i)^{-r}
    ExactPiValue pre =
        ExactPiValue::of(integer_pow(-2 * sd.P.get_si(), r) / factorial_rat(r), -r);
    out.push_back(raw * pre.value(wp));
  }
  return out;
}

std::vector<APComplex> model_coefficients(const SeifertData& sd, long k, long r_max,
                                          long prec) {
  std::vector<APComplex> inner = trunk_coefficients(sd, k, r_max, prec);
  long n = static_cast<long>(sd.n());
  long two_p = 2 * sd.P.get_si();
  std::vector<TaylorPhasePoly> polys = phase_taylor_polys(sd, n - 3);
  // Weighted fiber series with the binomial spreading of tau^{-u} in
  // tau^{-1} = k - 2 i P t / pi.
  for (long m = 1; m < two_p; ++m) {
    PrincipalPart pp = principal_part_F(sd, m, prec);
    APComplex ph = lattice_phase(m, k, sd.P, prec);
    for (long j = 1; j <= n - 2; ++j) {
      const APComplex& f = pp.f[static_cast<size_t>(j - 1)];
      if (f.re().is_zero() && f.im().is_zero()) continue;
      for (const auto& [uv, piv] : polys[static_cast<size_t>(j - 1)].coeff) {
        long u = uv.first;
        long v = uv.second;
        APComplex base = f * ph * piv.value(prec);
        for (long s = 0; s <= u && s <= r_max; ++s) {
          Rational spread = Rational(binomial(Integer(u), static_cast<unsigned long>(s))) *
                            integer_pow(k, u - s) * integer_pow(two_p, s);
          ExactPiValue cb = ExactPiValue::of(spread, -s);
          APComplex wgt = base * cb.value(prec);
          for (long r = 0; r + s <= r_max; ++r)
            inner[static_cast<size_t>(r + s)] =
                inner[static_cast<size_t>(r + s)] +
                wgt * APComplex::from_rational(bernoulli_weight(two_p, r, v, m), prec);
        }
      }
    }
  }
  // Prefactor (1 - 2 i P t/(pi k))^{1/2}: coefficients binom(1/2, s) (2P/k)^s (pi i)^{-s}.
  std::vector<APComplex> pref;
  pref.reserve(static_cast<size_t>(r_max) + 1);
  for (long s = 0; s <= r_max; ++s) {
    Rational c = binom_half(s) * rational_pow_int(Rational(two_p) / Rational(k), s);
    pref.push_back(ExactPiValue::of(c, -s).value(prec));
  }
  std::vector<APComplex> total(static_cast<size_t>(r_max) + 1, APComplex::zero(prec));
  for (long r = 0; r <= r_max; ++r)
    for (long s = 0; s <= r; ++s)
      total[static_cast<size_t>(r)] =
          total[static_cast<size_t>(r)] +
          pref[static_cast<size_t>(s)] * inner[static_cast<size_t>(r - s)];
  return total;
}

APComplex radial_q(const SeifertData& sd, long k, const APFloat& t, long prec) {
  APFloat pi = APFloat::pi(prec);
  APFloat shift = APFloat::from_rational(Rational(2 * sd.P), prec) * t / pi;
  APComplex tau = APComplex::one(prec) / APComplex(APFloat::from_long(k, prec), -shift);
  return exp(APComplex(APFloat(prec), pi + pi) * tau);
}

APComplex radial_constant(const SeifertData& sd, long prec) {
  // 16 e^{i pi/4} / sqrt(2P) = (8 / sqrt(P)) (1 + i)
  APFloat c = APFloat::from_long(8, prec) / sqrt(APFloat::from_rational(Rational(sd.P), prec));
  return APComplex(c, c);
}

APComplex radial_value(const SeifertData& sd, long k, const APFloat& t, long prec) {
  if (k < 1) throw precondition_error("radial_value: the level must be >= 1");
  APComplex q = radial_q(sd, k, t, prec);
  APFloat tol = APFloat::pow2(-(3 * prec) / 4, prec);
  APComplex psi = psi_eval(sd, q, tol);
  return psi / (APComplex::from_real(sqrt(APFloat::from_long(k, prec))) *
                radial_constant(sd, prec));
}

APComplex neville_extrapolate(const std::vector<APFloat>& t,
                              const std::vector<APComplex>& v, long prec) {
  if (t.empty() || t.size() != v.size())
    throw precondition_error("neville_extrapolate: empty or mismatched samples");
  std::vector<APComplex> tab = v;
  size_t n = t.size();
  for (size_t i = 1; i < n; ++i) {
    for (size_t j = n - 1; j >= i; --j) {
      APFloat den = t[j - i] - t[j];
      if (den.is_zero()) throw precondition_error("neville_extrapolate: repeated nodes");
      tab[j] = tab[j] + (tab[j] - tab[j - 1]) * APComplex::from_real(t[j] / den);
    }
  }
  (void)prec;
  return tab[n - 1];
}

RadialCheckReport radial_limit_check(const SeifertData& sd, long k,
                                     const std::vector<APFloat>& t_list, long prec) {
  if (sd.P % 2 != 0)
    throw precondition_error("radial_limit_check: the fiber product must be even");
  if (k < 2 || k % 2 != 0)
    throw precondition_error("radial_limit_check: the level must be even and >= 2");
  if (t_list.size() < 2)
    throw precondition_error("radial_limit_check: need at least two grid points");
  long n = static_cast<long>(sd.n());
  RadialCheckReport rep;
  rep.k = k;
  rep.t = t_list;
  rep.wrt = normalized_wrt(sd, k, prec).z_total;
  std::vector<APComplex> model = model_coefficients(sd, k, 1, prec);
  rep.normalization = radial_constant(sd, prec);
  // lambda = (-1)^n (i/2) / sqrt(2P)
  APFloat lam_mag = APFloat::from_rational(Rational(1) / Rational(2), prec) /
                    sqrt(APFloat::from_rational(Rational(2 * sd.P), prec));
  if (n % 2 != 0) lam_mag = -lam_mag;
  APComplex lambda(APFloat(prec), lam_mag);
  rep.lambda_ratio = rep.normalization / lambda;
  rep.lambda_form_matches =
      abs(rep.lambda_ratio - APComplex::one(prec)) < APFloat::from_double(1e-6, prec);
  for (const APFloat& t : t_list) {
    APComplex lhs = radial_value(sd, k, t, prec);
    APComplex fit = rep.wrt + model[1] * APComplex::from_real(t);
    rep.lhs.push_back(lhs);
    rep.model.push_back(fit);
    rep.residual_raw.push_back(abs(lhs - rep.wrt));
    rep.residual_model.push_back(abs(lhs - fit));
  }
  for (size_t i = 0; i + 1 < t_list.size(); ++i) {
    APFloat num = log(rep.residual_model[i] / rep.residual_model[i + 1]);
    APFloat den = log(t_list[i] / t_list[i + 1]);
    rep.slope.push_back(num / den);
  }
  rep.extrapolated = neville_extrapolate(t_list, rep.lhs, prec);
  rep.extrapolation_error = abs(rep.extrapolated - rep.wrt);
  for (long j = 1; j <= n - 2; ++j)
    rep.mean_abs.push_back(abs(weighted_principal_mean(sd, j, k, prec)));
  // Published tolerances: raw residual at the grid point nearest t = 1e-4
  // below 1e-3, extrapolation to t = 0 below 1e-6.
  APFloat target = APFloat::from_double(1e-4, prec);
  size_t pick = 0;
  APFloat best = abs(log(t_list[0] / target));
  for (size_t i = 1; i < t_list.size(); ++i) {
    APFloat d = abs(log(t_list[i] / target));
    if (best > d) {
      best = d;
      pick = i;
    }
  }
  rep.pass = rep.residual_raw[pick] < APFloat::from_double(1e-3, prec) &&
             rep.extrapolation_error < APFloat::from_double(1e-6, prec);
  return rep;
}

}  // namespace sfs
