#include "sfs/seifert.hpp"

#include <algorithm>

namespace sfs {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Canonical residue of a mod m in [0, m).
Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

SeifertData new_seifert(const std::vector<Integer>& p_in) {
  if (p_in.size() < 3) {
    throw precondition_error("new_seifert: need at least three fiber multiplicities");
  }
  for (const auto& pj : p_in) {
    if (pj < 2) {
      throw precondition_error("new_seifert: multiplicities must be >= 2, got " + pj.get_str());
    }
  }
  for (size_t i = 0; i < p_in.size(); ++i) {
    for (size_t j = i + 1; j < p_in.size(); ++j) {
      if (gcd(p_in[i], p_in[j]) != 1) {
        throw precondition_error("new_seifert: multiplicities " + p_in[i].get_str() + " and " +
                                 p_in[j].get_str() + " are not coprime");
      }
    }
  }

  SeifertData sd;
  // Move an even multiplicity (at most one exists) to the front.
  std::vector<size_t> order(p_in.size());
  for (size_t i = 0; i < p_in.size(); ++i) order[i] = i;
  for (size_t i = 0; i < p_in.size(); ++i) {
    if (p_in[i] % 2 == 0) {
      std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i),
                  order.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      break;
    }
  }
  for (size_t i : order) sd.p.push_back(p_in[i]);
  sd.user_index = order;

  sd.P = 1;
  for (const auto& pj : sd.p) sd.P *= pj;
  sd.euler = Rational(-1) / Rational(sd.P);

  const size_t n = sd.p.size();

  // Plumbing normalization: q_j (P/p_j) = -1 mod p_j with q_j in [p_j, 2 p_j).
  Integer weighted_sum(0);  // sum q_j (P/p_j)
  for (size_t j = 0; j < n; ++j) {
    Integer Pj = sd.P / sd.p[j];
    Integer t = mod_inverse(Pj, sd.p[j]);
    Integer r = mod_pos(-t, sd.p[j]);
    Integer qj = r + sd.p[j];
    sd.q_plumb.push_back(qj);
    weighted_sum += qj * Pj;
  }
  Integer num = -1 - weighted_sum;
  if (num % sd.P != 0) {
    throw computation_error("new_seifert: central coefficient is not integral");
  }
  sd.p0 = num / sd.P;
  if (sd.p0 >= 0) {
    throw computation_error("new_seifert: central coefficient is not negative");
  }

  // Intro normalization: q_j (P/p_j) = 1 mod p_j, defect absorbed into q_1,
  // then parity-normalized.
  std::vector<Integer> qi;
  Integer s(0);
  for (size_t j = 0; j < n; ++j) {
    Integer Pj = sd.P / sd.p[j];
    Integer qj = mod_inverse(Pj, sd.p[j]);
    qi.push_back(qj);
    s += qj * Pj;
  }
  Integer defect = 1 - s;
  if (defect % sd.P != 0) {
    throw computation_error("new_seifert: intro coefficients have non-integral defect");
  }
  qi[0] += (defect / sd.P) * sd.p[0];
  sd.q_intro = parity_normalize(qi, sd.p);

  // Both defining sums, exactly.
  Rational check(0);
  for (size_t j = 0; j < n; ++j) check += Rational(sd.q_intro[j]) / Rational(sd.p[j]);
  if (check * Rational(sd.P) != 1) {
    throw computation_error("new_seifert: intro coefficient sum is not 1/P");
  }
  check = Rational(sd.p0);
  for (size_t j = 0; j < n; ++j) check += Rational(sd.q_plumb[j]) / Rational(sd.p[j]);
  if (check * Rational(sd.P) != -1) {
    throw computation_error("new_seifert: plumbing coefficient sum is not -1/P - p0");
  }
  return sd;
}

std::vector<Integer> parity_normalize(const std::vector<Integer>& q,
                                      const std::vector<Integer>& p) {
  if (q.size() != p.size() || p.empty()) {
    throw precondition_error("parity_normalize: mismatched lists");
  }
  for (size_t j = 1; j < p.size(); ++j) {
    if (p[j] % 2 == 0) {
      throw precondition_error(
          "parity_normalize: an even multiplicity must be in the first position");
    }
  }
  std::vector<Integer> r = q;
  for (size_t j = 1; j < r.size(); ++j) {
    if (mod_pos(r[j], 2) == 1) {
      r[j] += p[j];   // adds 1 to the coefficient sum
      r[0] -= p[0];   // subtracts it back
    }
  }
  if (mod_pos(r[0], 2) != 1) {
    throw computation_error("parity_normalize: leading coefficient did not come out odd");
  }
  return r;
}

ConstantsBundle constants(const SeifertData& sd, const Rational& Delta, long prec) {
  ConstantsBundle cb;
  const size_t n = sd.n();

  cb.phi = Rational(3) - Rational(1) / Rational(sd.P);
  for (size_t j = 0; j < n; ++j) {
    cb.phi += 12 * dedekind_sum(sd.P / sd.p[j], sd.p[j]);
  }
  cb.phi.canonicalize();

  cb.delta_small = Delta - cb.phi / 4;
  cb.delta_small.canonicalize();

  // m0 = P(n-2) - sum_j P/p_j, an integer by construction.
  cb.m0 = sd.P * Integer(static_cast<long>(n) - 2);
  for (size_t j = 0; j < n; ++j) cb.m0 -= sd.P / sd.p[j];

  // -24 lambda_cw = phi + P(n-2) - sum_j P/p_j^2.
  Rational t = cb.phi + Rational(sd.P) * Rational(static_cast<long>(n) - 2);
  for (size_t j = 0; j < n; ++j) {
    t -= Rational(sd.P / sd.p[j]) / Rational(sd.p[j]);
  }
  cb.casson_walker = -t / 24;
  cb.casson_walker.canonicalize();

  APFloat pi = APFloat::pi(prec);
  APFloat Pf = APFloat::from_rational(Rational(sd.P), prec);
  APFloat sqrtP = sqrt(Pf);
  APFloat quarter = APFloat::from_rational(Rational(1, 4), prec);

  // varsigma = -(sqrt(P)/4) e^{-3 pi i / 4}
  cb.varsigma = APComplex::from_real(-(sqrtP * quarter)) *
                exp_2pi_i(Rational(-3, 8), prec);

  // kappa = sqrt(2 pi i P) = e^{i pi/4} sqrt(2 pi P)
  cb.kappa = APComplex::from_real(sqrt(APFloat::from_long(2, prec) * pi * Pf)) *
             exp_2pi_i(Rational(1, 8), prec);

  // lambda = (-1)^n (i/2) (2P)^{-1/2}
  APFloat lam_mag = APFloat::from_rational(Rational(1, 2), prec) /
                    sqrt(APFloat::from_long(2, prec) * Pf);
  if (n % 2 == 1) lam_mag = -lam_mag;
  cb.lambda = APComplex(APFloat(prec), lam_mag);

  cb.mu = APComplex::one(prec) / (APComplex::from_long(2, prec) * cb.lambda * cb.varsigma);
  return cb;
}

APComplex eval_F(const SeifertData& sd, const APComplex& y) {
  const long prec = y.prec();
  const long n = static_cast<long>(sd.n());
  APComplex half = APComplex::from_rational(Rational(1, 2), prec);

  APComplex den = sinh(y * half);
  APComplex num = APComplex::from_rational(Rational(1, 4), prec);
  bool num_zero = false;
  for (size_t j = 0; j < sd.n(); ++j) {
    APComplex f = sinh(y * APComplex::from_rational(Rational(1) / (2 * Rational(sd.p[j])), prec));
    if (f.is_zero()) num_zero = true;
    num = num * f;
  }
  if (den.is_zero()) {
    if (num_zero && y.is_zero()) return APComplex(prec);  // order-2 zero at the origin
    throw pole_error("eval_F: evaluation point is a pole of F");
  }
  return num * pow_int(den, 2 - n);
}

APComplex eval_g(const SeifertData& sd, const APComplex& y) {
  const long prec = y.prec();
  APComplex c = APComplex::i(prec) /
                APComplex::from_real(APFloat::from_long(8, prec) * APFloat::pi(prec) *
                                     APFloat::from_rational(Rational(sd.P), prec));
  return c * y * y;
}

APComplex eval_G(const SeifertData& sd, const APComplex& z) {
  if (z.is_zero()) throw precondition_error("eval_G: z must be nonzero");
  const long n = static_cast<long>(sd.n());
  long Pl = sd.P.get_si();

  APComplex den = pow_int(z, Pl) - pow_int(z, -Pl);
  if (den.is_zero()) throw pole_error("eval_G: z is a 2P-th root of unity");
  APComplex r = pow_int(den, 2 - n);
  for (size_t j = 0; j < sd.n(); ++j) {
    Integer Pj = sd.P / sd.p[j];
    long e = Pj.get_si();
    r = r * (pow_int(z, e) - pow_int(z, -e));
  }
  return r;
}

PowerSeriesQ F_taylor(const SeifertData& sd, size_t order) {
  if (order < 3) throw precondition_error("F_taylor: order must cover the leading y^2 term");
  const long n = static_cast<long>(sd.n());

  // E(c*y) with E(x) = sinh(x)/x = sum x^{2k}/(2k+1)!.
  auto scaled_E = [order](const Rational& c) {
    PowerSeriesQ s(order);
    Rational c2 = c * c;
    Rational pw(1);
    Rational fact(1);
    for (size_t m = 0; 2 * m < order; ++m) {
      if (m > 0) {
        pw *= c2;
        fact *= Rational(static_cast<long>(2 * m)) * Rational(static_cast<long>(2 * m + 1));
      }
      s[2 * m] = pw / fact;
    }
    return s;
  };

  PowerSeriesQ body = series_pow_neg(scaled_E(Rational(1, 2)), 2 - n);
  Rational lead = Rational(1, 4) * rational_pow_int(Rational(1, 2), 2 - n);
  for (size_t j = 0; j < sd.n(); ++j) {
    body = body * scaled_E(Rational(1) / (2 * Rational(sd.p[j])));
    lead /= 2 * Rational(sd.p[j]);
  }

  // F = lead * y^2 * body.
  PowerSeriesQ r(order);
  for (size_t m = 2; m < order; ++m) r[m] = lead * body[m - 2];
  return r;
}

}  // namespace sfs
