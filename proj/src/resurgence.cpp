#include "sfs/resurgence.hpp"

#include <set>

#include "sfs/quadrature.hpp"

namespace sfs {

namespace {

APComplex pi_i(long prec) { return APComplex(APFloat::from_long(0, prec), APFloat::pi(prec)); }

}  // namespace

OhtsukiSeries ohtsuki_coefficients(const SeifertData& sd, size_t order, long prec) {
  PowerSeriesQ taylor = F_taylor(sd, 2 * order + 1);
  long P = sd.P.get_si();
  // sqrt(2P / (pi i)), principal branch of the denominator.
  APComplex pref = APComplex::from_real(sqrt(APFloat::from_long(2 * P, prec))) /
                   sqrt(pi_i(prec));
  APFloat sqrt_pi = sqrt(APFloat::pi(prec));
  APComplex eight_pi_i_P(APFloat::from_long(0, prec),
                         APFloat::pi(prec) * APFloat::from_long(8 * P, prec));

  OhtsukiSeries out;
  out.coeff.reserve(order + 1);
  Rational gamma_rat(1);  // (2j)! / (4^j j!), so Gamma(j + 1/2) = gamma_rat * sqrt(pi)
  for (size_t j = 0; j <= order; ++j) {
    if (j > 0) {
      // (2j)!/(4^j j!) = previous * (2j)(2j-1)/(4j) = previous * (2j-1)/2
      gamma_rat *= Rational(2 * static_cast<long>(j) - 1) / Rational(2);
    }
    APComplex c = pref * APComplex::from_real(sqrt_pi * APFloat::from_rational(gamma_rat, prec));
    c = c * APComplex::from_rational(taylor[2 * j], prec);
    c = c * pow_int(eight_pi_i_P, static_cast<long>(j));
    out.coeff.push_back(c);
  }
  return out;
}

BorelFunction::BorelFunction(const SeifertData& sd, long prec)
    : sd_(sd), prec_(prec) {
  long P = sd.P.get_si();
  kappa_ = sqrt(APComplex(APFloat::from_long(0, prec),
                          APFloat::from_long(2 * P, prec) * APFloat::pi(prec)));
}

APComplex BorelFunction::eval(const APComplex& zeta) const {
  if (abs(zeta).is_zero())
    throw precondition_error("BorelFunction::eval: zeta must be nonzero");
  long P = sd_.P.get_si();
  // The two roots are split so the formula's only cut is the one sqrt(zeta)
  // carries along the negative reals, away from the poles on i R_+; the sign
  // of F's argument root does not matter because F is even.
  APComplex y = sqrt(APComplex(APFloat::from_long(0, prec_),
                               APFloat::from_long(8 * P, prec_) * APFloat::pi(prec_)) *
                     zeta);
  APComplex pref = APComplex::from_real(sqrt(APFloat::from_long(2 * P, prec_))) /
                   sqrt(pi_i(prec_));
  return pref / sqrt(zeta) * eval_F(sd_, y);
}

APComplex BorelFunction::eval_g_form(const APComplex& zeta) const {
  if (abs(zeta).is_zero())
    throw precondition_error("BorelFunction::eval_g_form: zeta must be nonzero");
  long P = sd_.P.get_si();
  APComplex root = sqrt(zeta);
  APComplex z = exp(kappa_ * root / APComplex::from_long(P, prec_));
  APComplex denom = pi_i(prec_) * APComplex::from_long(16, prec_) * root;
  return kappa_ / denom * eval_G(sd_, z);
}

std::vector<BorelPole> pole_set(const SeifertData& sd, long m_max, long prec) {
  if (m_max < 1) throw precondition_error("pole_set: m_max must be positive");
  long P = sd.P.get_si();
  std::vector<BorelPole> out;
  for (long m = 1; m <= m_max; ++m) {
    size_t divisors = 0;
    for (const Integer& pj : sd.p)
      if (Integer(m) % pj == 0) ++divisors;
    if (divisors > sd.n() - 3) continue;  // enough sinh zeros to flatten the pole
    BorelPole pole;
    pole.m = m;
    pole.zeta = APComplex(APFloat::from_long(0, prec),
                          APFloat::pi(prec) *
                              APFloat::from_rational(Rational(Integer(m) * Integer(m)) /
                                                         Rational(2 * P),
                                                     prec));
    pole.theta = RationalModZ(Rational(-Integer(m) * Integer(m)) / Rational(4 * P));
    out.push_back(pole);
  }
  return out;
}

bool check_poles_equal_cs(const SeifertData& sd, long m_max) {
  std::set<RationalModZ> from_poles;
  for (const BorelPole& pole : pole_set(sd, m_max, 64)) from_poles.insert(pole.theta);
  CSValueSet w = enumerate_W(sd.p);
  std::set<RationalModZ> from_cs(w.values.begin(), w.values.end());
  return from_poles == from_cs;
}

std::vector<BorelTerm> formal_borel(const std::vector<AsymptoticTerm>& terms, long prec) {
  std::vector<BorelTerm> out;
  out.reserve(terms.size());
  const Rational* prev = nullptr;
  for (const AsymptoticTerm& t : terms) {
    if (t.beta != 0)
      throw precondition_error("formal_borel: logarithmic terms are not supported");
    if (prev == nullptr) {
      if (!(t.alpha > 0))
        throw precondition_error("formal_borel: leading exponent must be positive");
    } else if (!(t.alpha > *prev)) {
      throw precondition_error("formal_borel: exponents must be strictly increasing");
    }
    prev = &t.alpha;
    BorelTerm b;
    b.coeff = t.coeff / APComplex::from_real(gamma(APFloat::from_rational(t.alpha, prec)));
    b.alpha_minus_one = t.alpha - 1;
    out.push_back(b);
  }
  return out;
}

APComplex laplace_ray(const std::function<APComplex(const APComplex&)>& f,
                      const APComplex& direction, const APComplex& lambda,
                      const APFloat& growth_c, const APFloat& growth_a,
                      const APFloat& tol, long prec) {
  APFloat dir_norm = abs(direction);
  if (dir_norm.is_zero())
    throw precondition_error("laplace_ray: direction must be nonzero");
  APComplex d = direction / APComplex::from_real(dir_norm);
  APFloat decay = (lambda * d).re();
  if (!(decay > growth_a))
    throw precondition_error("laplace_ray: Re(lambda * direction) must exceed the growth rate");
  APFloat margin = decay - growth_a;
  // |2u e^{-lambda d u^2} f(d u^2)| <= 2u C e^{-margin u^2} for u >= 1, so the
  // tail beyond U is at most C e^{-margin U^2} / margin.
  APFloat half_tol = tol * APFloat::from_rational(Rational(1, 2), prec);
  APFloat c_safe = growth_c < APFloat::from_long(1, prec) ? APFloat::from_long(1, prec)
                                                          : growth_c;
  APFloat u2 = log(c_safe / (margin * half_tol)) / margin;
  APFloat upper = u2 > APFloat::from_long(1, prec) ? sqrt(u2) : APFloat::from_long(1, prec);
  upper = upper + APFloat::from_rational(Rational(1, 2), prec);

  auto integrand = [&](const APFloat& u) -> APComplex {
    APComplex zeta = d * APComplex::from_real(u * u);
    return f(zeta) * exp(-(lambda * zeta)) * d *
           APComplex::from_real(u + u);
  };
  APFloat width = APFloat::from_rational(Rational(1, 4), prec);
  return integrate_panels(integrand, upper, width, half_tol, prec);
}

void borel_growth_bound(const SeifertData& sd, const APComplex& direction, long prec,
                        APFloat& growth_c, APFloat& growth_a) {
  long big_p = sd.P.get_si();
  long n = static_cast<long>(sd.n());
  // B(d t) = sqrt(2P / (pi i)) F(c sqrt(t)) / sqrt(d t) with c = sqrt(8 pi i P d).
  APComplex c_dir = sqrt(APComplex(APFloat::from_long(0, prec),
                                   APFloat::from_long(8 * big_p, prec) * APFloat::pi(prec)) *
                         direction);
  APFloat re_c = c_dir.re();
  if (!(re_c > APFloat::from_long(0, prec)))
    throw precondition_error(
        "borel_growth_bound: direction must keep sqrt(8 pi i P d) in the right half plane");
  // |F(c u)| <= (1/4) (2/(1-e^{-Re c}))^{n-2} e^{(Re c/2)(sum 1/p_j - (n-2)) u} for u >= 1.
  APFloat cf = APFloat::from_rational(Rational(1, 4), prec);
  APFloat base = APFloat::from_long(2, prec) /
                 (APFloat::from_long(1, prec) - exp(-re_c));
  for (long j = 0; j < n - 2; ++j) cf = cf * base;
  Rational slope_rat(0);
  for (const Integer& pj : sd.p) slope_rat += Rational(1) / Rational(pj);
  slope_rat -= n - 2;
  APFloat af = re_c * APFloat::from_rational(slope_rat / 2, prec);
  // |B(d t)| <= sqrt(2P/pi) C_F e^{a_F sqrt(t)} / sqrt(t); fold sqrt(t) <= t and
  // pad the rate so the t >= 1 clause of the laplace_ray contract stays strict.
  growth_c = sqrt(APFloat::from_long(2 * big_p, prec) / APFloat::pi(prec)) * cf *
             APFloat::from_long(2, prec);
  growth_a = af.sign() > 0 ? af + APFloat::from_rational(Rational(1, 10), prec)
                           : APFloat::from_rational(Rational(1, 10), prec);
}

}  // namespace sfs
