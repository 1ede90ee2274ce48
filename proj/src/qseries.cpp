#include "sfs/qseries.hpp"

#include <algorithm>

namespace sfs {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Scales nu -> nu * (D / den) for comparison over a common denominator D.
std::map<Integer, Rational> rescaled_terms(const SparseQSeries& s, const Integer& D) {
  Integer f = D / s.denominator;
  std::map<Integer, Rational> out;
  for (const auto& [nu, c] : s.terms) out.emplace(nu * f, c);
  return out;
}

/// Exact inverse of a square integer matrix by rational Gauss-Jordan.
std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<Integer>>& M) {
  const size_t s = M.size();
  std::vector<std::vector<Rational>> a(s, std::vector<Rational>(2 * s, Rational(0)));
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = 0; j < s; ++j) a[i][j] = Rational(M[i][j]);
    a[i][s + i] = 1;
  }
  for (size_t col = 0; col < s; ++col) {
    size_t piv = col;
    while (piv < s && a[piv][col] == 0) ++piv;
    if (piv == s) throw computation_error("matrix inverse: singular matrix");
    std::swap(a[piv], a[col]);
    Rational d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (size_t i = 0; i < s; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (size_t j = 0; j < 2 * s; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(s, std::vector<Rational>(s));
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = 0; j < s; ++j) inv[i][j] = a[i][s + j];
  }
  return inv;
}

/// Numerator of the continued fraction k_1 - 1/(k_2 - 1/(...)).
Integer cont_fraction_numerator(const std::vector<Integer>& k) {
  Integer prev(1), cur = k.at(0);
  for (size_t i = 1; i < k.size(); ++i) {
    Integer next = k[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// sum_{j>=1} j^i g^j for 0 <= i <= 3 (closed forms).
APFloat power_geometric(int i, const APFloat& g) {
  long prec = g.prec();
  APFloat one = APFloat::from_long(1, prec);
  APFloat d = one - g;
  switch (i) {
    case 0:
      return g / d;
    case 1:
      return g / (d * d);
    case 2:
      return g * (one + g) / (d * d * d);
    case 3: {
      APFloat four = APFloat::from_long(4, prec);
      return g * (one + four * g + g * g) / (d * d * d * d);
    }
    default:
      throw precondition_error("power_geometric: exponent out of range");
  }
}

}  // namespace

Rational SparseQSeries::coeff_at(const Rational& exponent) const {
  Rational nu = exponent * Rational(denominator);
  if (nu.get_den() != 1) return Rational(0);
  auto it = terms.find(nu.get_num());
  return it == terms.end() ? Rational(0) : it->second;
}

bool series_equal_below(const SparseQSeries& x, const SparseQSeries& y, const Rational& bound) {
  if (bound > x.cutoff || bound > y.cutoff) {
    throw precondition_error("series_equal_below: series incomplete below bound");
  }
  Integer D = lcm(x.denominator, y.denominator);
  auto tx = rescaled_terms(x, D);
  auto ty = rescaled_terms(y, D);
  Rational nu_bound = bound * Rational(D);
  for (const auto& [nu, c] : tx) {
    if (Rational(nu) > nu_bound) continue;
    auto it = ty.find(nu);
    if (it == ty.end() || it->second != c) return false;
  }
  for (const auto& [nu, c] : ty) {
    if (Rational(nu) > nu_bound) continue;
    if (tx.find(nu) == tx.end()) return false;
  }
  return true;
}

Integer a_coeff(long r, long n) {
  if (n < 3) throw precondition_error("a_coeff: need n >= 3");
  if (r < 0) throw precondition_error("a_coeff: need r >= 0");
  Integer b = binomial(Integer(r + n - 3), static_cast<unsigned long>(r));
  return (n % 2 == 0) ? b : -b;
}

std::map<long, Integer> chi_coefficients(const SeifertData& sd, long cutoff_m) {
  const long n = static_cast<long>(sd.n());
  const long P = sd.P.get_si();
  std::vector<long> Pp(n);
  long m0 = P * (n - 2);
  for (long j = 0; j < n; ++j) {
    Integer q = sd.P / sd.p[j];
    Pp[j] = q.get_si();
    m0 -= Pp[j];
  }
  if (cutoff_m < m0) throw precondition_error("chi_coefficients: cutoff below first support point");

  std::map<long, Integer> chi;
  long rmax = (cutoff_m - m0) / (2 * P) + 1;
  for (long r = 0; r <= rmax; ++r) {
    Integer ar = a_coeff(r, n);
    for (long mask = 0; mask < (1L << n); ++mask) {
      long m = 2 * P * r + P * (n - 2);
      int sign = 1;
      for (long j = 0; j < n; ++j) {
        if (mask & (1L << j)) {
          m += Pp[j];
        } else {
          m -= Pp[j];
          sign = -sign;
        }
      }
      if (m <= cutoff_m) chi[m] += sign * ar;
    }
  }
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  return chi;
}

SparseQSeries psi_series(const SeifertData& sd, const Rational& cutoff_exp) {
  Integer fourP = 4 * sd.P;
  // Largest |m| with m^2/4P <= cutoff.
  Rational bound = cutoff_exp * Rational(fourP);
  if (bound < 0) throw precondition_error("psi_series: cutoff below all exponents");
  Integer mmax;
  Integer b_floor = rational_floor(bound);
  mpz_sqrt(mmax.get_mpz_t(), b_floor.get_mpz_t());

  SparseQSeries out;
  out.denominator = fourP;
  out.cutoff = cutoff_exp;
  auto chi = chi_coefficients(sd, mmax.get_si());
  for (const auto& [m, c] : chi) {
    Integer nu = Integer(m) * Integer(m);
    if (Rational(nu) > bound) continue;
    out.terms[nu] += Rational(c);
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational vp_constant_term(long l, long deg) {
  if (deg < 1) throw precondition_error("vp_constant_term: need deg >= 1");
  Rational vp(0);
  // |z| < 1 expansion: (-1)^deg z^{deg-2} sum_j binom(j+deg-3, j) z^{2j}.
  if ((2 - deg - l) % 2 == 0 && 2 - deg - l >= 0) {
    long j = (2 - deg - l) / 2;
    Integer c = binomial(Integer(j + deg - 3), static_cast<unsigned long>(j));
    if (deg % 2 != 0) c = -c;
    vp += Rational(c) / 2;
  }
  // |z| > 1 expansion: z^{2-deg} sum_j binom(j+deg-3, j) z^{-2j}.
  if ((l - deg + 2) % 2 == 0 && l - deg + 2 >= 0) {
    long j = (l - deg + 2) / 2;
    vp += Rational(binomial(Integer(j + deg - 3), static_cast<unsigned long>(j))) / 2;
  }
  return vp;
}

SparseQSeries gppv_series(const PlumbingGraph& graph, const AdjacencyData& ad,
                          const Rational& Delta, const Rational& cutoff_exp) {
  Integer adet = ad.det < 0 ? Integer(-ad.det) : ad.det;
  if (adet != 1) throw precondition_error("gppv_series: plumbing matrix must be unimodular");
  const long n = static_cast<long>(graph.arm_lengths.size());

  // Support vertices: the center plus each arm's outermost vertex.
  std::vector<size_t> support{0};
  for (long j = 0; j < n; ++j) {
    support.push_back(graph.arm_vertex(j, graph.arm_lengths[j] - 1));
  }

  auto Minv = invert_matrix(ad.M);
  std::vector<std::vector<Rational>> gram(support.size(), std::vector<Rational>(support.size()));
  for (size_t a = 0; a < support.size(); ++a) {
    for (size_t b = 0; b < support.size(); ++b) gram[a][b] = Minv[support[a]][support[b]];
  }

  Rational pref = series_prefactor(ad).exponent;
  Integer D = lcm(lcm(Delta.get_den(), pref.get_den()), Integer(4));

  // Termination certificate data: the fiber orders from the arm expansions.
  Rational P(1), sum_inv(0);
  for (long j = 0; j < n; ++j) {
    Integer pj = cont_fraction_numerator(graph.arm_k[j]);
    P *= Rational(pj);
    sum_inv += Rational(1, pj);
  }

  SparseQSeries out;
  out.denominator = D;
  out.cutoff = cutoff_exp;

  for (long r = 0;; ++r) {
    bool any_below = false;
    long c_mag = n - 2 + 2 * r;
    for (int cs = -1; cs <= 1; cs += 2) {
      long lc = cs * c_mag;
      Rational vp_center = vp_constant_term(lc, n);
      for (long mask = 0; mask < (1L << n); ++mask) {
        Rational coeff = vp_center;
        std::vector<long> eps(n);
        for (long j = 0; j < n; ++j) {
          eps[j] = (mask & (1L << j)) ? 1 : -1;
          coeff *= vp_constant_term(eps[j], 1);
        }
        // Quadratic form (l, M^{-1} l) on the support vertices.
        Rational quad = Rational(lc) * Rational(lc) * gram[0][0];
        for (long j = 0; j < n; ++j) {
          quad += Rational(2 * lc * eps[j]) * gram[0][j + 1];
          for (long i = 0; i < n; ++i) {
            quad += Rational(eps[i] * eps[j]) * gram[i + 1][j + 1];
          }
        }
        Rational e = Delta + pref - quad / 4;
        if (e <= cutoff_exp) {
          any_below = true;
          Rational nu = e * Rational(D);
          if (nu.get_den() != 1) {
            throw computation_error("gppv_series: exponent outside the expected lattice");
          }
          out.terms[nu.get_num()] += coeff;
        }
      }
    }
    if (r >= 1) {
      Rational base = Rational(2 * r + n - 2) - sum_inv;
      Rational certificate = (P / 4) * base * base;
      if (certificate > cutoff_exp) {
        if (any_below) {
          throw computation_error("gppv_series: term below cutoff past the certificate bound");
        }
        break;
      }
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

APComplex psi_eval(const SeifertData& sd, const APComplex& q, const APFloat& tol) {
  const long prec = std::min(q.prec(), tol.prec());
  if (tol.sign() <= 0) throw precondition_error("psi_eval: tolerance must be positive");
  APFloat aq = abs(q);
  if (!(aq < APFloat::from_long(1, prec))) throw precondition_error("psi_eval: need |q| < 1");

  const long n = static_cast<long>(sd.n());
  const long P = sd.P.get_si();
  long m0 = P * (n - 2);
  for (long j = 0; j < n; ++j) {
    Integer q = sd.P / sd.p[j];
    m0 -= q.get_si();
  }

  if (q.is_zero()) {
    Integer c0(0);
    if (m0 <= 0) {
      auto chi = chi_coefficients(sd, 0);
      auto it = chi.find(0);
      if (it != chi.end()) c0 = it->second;
    }
    return APComplex::from_rational(Rational(c0), prec);
  }

  APComplex w = log(q) / APComplex::from_long(4 * P, prec);
  APFloat c = -w.re();  // |q|^{m^2/4P} = exp(-c m^2) in modulus

  // Find a truncation point M with certified tail below tol:
  // |chi_m| <= 2^n ((m - m0)/2P + 1)^{n-3} and m^2 >= M^2 + 2M(m - M) for m > M.
  long M = std::max<long>(16, std::max<long>(std::abs(m0) + 1, 2 * P));
  APFloat two_n = APFloat::from_long(1L << n, prec);
  while (true) {
    APFloat g = exp(APFloat::from_long(-2 * M, prec) * c);
    APFloat base = two_n * exp(APFloat::from_long(-M, prec) * APFloat::from_long(M, prec) * c);
    APFloat A = APFloat::from_rational(Rational(M - m0 + 2 * P) / Rational(2 * P), prec);
    int t = static_cast<int>(n - 3);
    // sum_{j>=1} (A(1+j))^t g^j = A^t sum_i binom(t,i) sum_j j^i g^j
    APFloat series = APFloat::from_long(0, prec);
    for (int i = 0; i <= t; ++i) {
      APFloat bi = APFloat::from_rational(Rational(binomial(Integer(t), i)), prec);
      series = series + bi * power_geometric(i, g);
    }
    APFloat At = APFloat::from_long(1, prec);
    for (int i = 0; i < t; ++i) At = At * A;
    if (base * At * series < tol) break;
    M *= 2;
    if (M > (1L << 40)) throw computation_error("psi_eval: truncation point diverged");
  }

  auto chi = chi_coefficients(sd, M);
  APComplex sum = APComplex::zero(prec);
  for (const auto& [m, cm] : chi) {
    APComplex ex = w * APComplex::from_long(static_cast<long>(m) * m, prec);
    sum += exp(ex) * APComplex::from_rational(Rational(cm), prec);
  }
  return sum;
}

}  // namespace sfs
