#include "sfs/chern_simons.hpp"

#include <algorithm>

namespace sfs {

namespace {

Integer mod_pos_of(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer product(const std::vector<Integer>& p) {
  Integer P(1);
  for (const auto& x : p) P *= x;
  return P;
}

void check_multiplicities(const std::vector<Integer>& p) {
  if (p.size() < 3) throw precondition_error("need at least three fiber multiplicities");
  for (const auto& x : p) {
    if (x < 2) throw precondition_error("multiplicities must be >= 2");
  }
}

size_t active_count(const std::vector<long>& l, const std::vector<Integer>& p) {
  size_t active = 0;
  if (l[0] != 0 && Integer(l[0]) != p[0]) ++active;
  for (size_t j = 1; j < l.size(); ++j) {
    if (l[j] != 0) ++active;
  }
  return active;
}

}  // namespace

Mat2 Mat2::identity(long prec) {
  return Mat2(APComplex::one(prec), APComplex(prec), APComplex(prec), APComplex::one(prec));
}

Mat2 Mat2::diagonal(const APComplex& top, const APComplex& bottom) {
  long prec = std::min(top.prec(), bottom.prec());
  return Mat2(top, APComplex(prec), APComplex(prec), bottom);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d);
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return Mat2(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

APFloat entry_norm(const Mat2& m) {
  APFloat r = abs(m.a);
  for (const APComplex* e : {&m.b, &m.c, &m.d}) {
    APFloat v = abs(*e);
    if (v > r) r = v;
  }
  return r;
}

std::vector<LTuple> enumerate_L(const std::vector<Integer>& p) {
  check_multiplicities(p);
  const size_t n = p.size();
  std::vector<long> bound(n);
  bound[0] = p[0].get_si();
  for (size_t j = 1; j < n; ++j) bound[j] = (p[j].get_si() - 1) / 2;

  std::vector<LTuple> out;
  std::vector<long> l(n, 0);
  while (true) {
    if (active_count(l, p) >= 3) out.push_back(LTuple{l});
    size_t j = n;
    while (j-- > 0) {
      if (l[j] < bound[j]) {
        ++l[j];
        std::fill(l.begin() + static_cast<std::ptrdiff_t>(j) + 1, l.end(), 0);
        break;
      }
      if (j == 0) return out;
    }
  }
}

RationalModZ cs_value(const LTuple& l, const std::vector<Integer>& p) {
  check_multiplicities(p);
  if (l.l.size() != p.size()) throw precondition_error("cs_value: tuple length mismatch");
  Integer P = product(p);
  Integer xi = (P / p[0]) * l.l[0];
  for (size_t j = 1; j < p.size(); ++j) xi += 2 * (P / p[j]) * l.l[j];
  return RationalModZ(Rational(-(xi * xi)) / Rational(4 * P));
}

CSValueSet enumerate_W(const std::vector<Integer>& p) {
  check_multiplicities(p);
  const long n = static_cast<long>(p.size());
  Integer P = product(p);
  long twoP = 2 * P.get_si();

  CSValueSet out;
  for (long m = 0; m < twoP; ++m) {
    long div = 0;
    for (const auto& pj : p) {
      if (m % pj.get_si() == 0) ++div;
    }
    if (div <= n - 3) {
      out.values.push_back(RationalModZ(Rational(-m * m) / Rational(4 * P)));
    }
  }
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());

  for (long m = 1; m < twoP; ++m) {
    RationalModZ theta(Rational(-m * m) / Rational(4 * P));
    if (std::binary_search(out.values.begin(), out.values.end(), theta)) {
      out.fibers[theta].push_back(m);
    }
  }
  return out;
}

LTuple solve_congruence(const Integer& y, const std::vector<Integer>& p) {
  check_multiplicities(p);
  const size_t n = p.size();
  Integer P = product(p);

  long divisors = 0;
  for (const auto& pj : p) {
    if (y % pj == 0) ++divisors;
  }
  if (divisors > static_cast<long>(n) - 3) {
    throw precondition_error("solve_congruence: y is divisible by too many multiplicities");
  }

  std::vector<long> l(n, 0);

  // Index 1 lives in Z/4p_1: fold candidates into [0, p_1] preserving squares.
  {
    Integer m4 = 4 * p[0];
    Integer c = mod_pos_of(y * mod_inverse(P / p[0], m4), m4);
    Integer best = -1;
    for (const Integer& cand :
         {c, mod_pos_of(-c, m4), mod_pos_of(c + 2 * p[0], m4), mod_pos_of(-c + 2 * p[0], m4)}) {
      Integer v = cand;
      if (v > 2 * p[0]) v = m4 - v;
      if (v > p[0]) v = 2 * p[0] - v;
      if (best < 0 || v < best) best = v;
    }
    l[0] = best.get_si();
  }

  // Indices j >= 2 live in Z/p_j, folded into [0, (p_j-1)/2].
  for (size_t j = 1; j < n; ++j) {
    if (y % p[j] == 0) {
      l[j] = 0;
      continue;
    }
    Integer c = mod_pos_of(y * mod_inverse(2 * (P / p[j]), p[j]), p[j]);
    if (2 * c > p[j] - 1) c = p[j] - c;
    l[j] = c.get_si();
  }

  LTuple out{l};
  if (active_count(l, p) < 3) {
    throw computation_error("solve_congruence: produced tuple is not in L");
  }
  if (cs_value(out, p) != RationalModZ(Rational(-(y * y)) / Rational(4 * P))) {
    throw computation_error("solve_congruence: round-trip value mismatch");
  }
  return out;
}

RepMatrices construct_representation(const LTuple& lt, const SeifertData& sd, long prec) {
  const size_t n = sd.n();
  if (lt.l.size() != n) throw precondition_error("construct_representation: tuple length");
  const std::vector<long>& l = lt.l;

  // Angle fractions: x_j is conjugate to diag(e^{i pi psi_j}, e^{-i pi psi_j}).
  std::vector<Rational> psi(n);
  psi[0] = Rational(l[0]) / Rational(sd.p[0]);
  for (size_t j = 1; j < n; ++j) psi[j] = Rational(2 * l[j]) / Rational(sd.p[j]);

  std::vector<size_t> active;
  if (l[0] != 0 && Integer(l[0]) != sd.p[0]) active.push_back(0);
  for (size_t j = 1; j < n; ++j) {
    if (l[j] != 0) active.push_back(j);
  }
  if (active.size() < 3) {
    throw precondition_error("construct_representation: tuple not in L");
  }

  auto cos_pi = [prec](const Rational& r) { return exp_2pi_i(r / 2, prec).re(); };
  auto phase_pi = [prec](const Rational& r) { return exp_2pi_i(r / 2, prec); };

  // Pick the bent indices (j2, j3): both angle sums that enter the system's
  // determinant -2 sin(pi(a+c)) sin(pi b) must be exactly non-integral.
  size_t j2 = n, j3 = n;
  Rational a_plus_c, b, d;
  for (size_t ui = 0; ui < active.size() && j2 == n; ++ui) {
    for (size_t vi = ui + 1; vi < active.size(); ++vi) {
      size_t u = active[ui], v = active[vi];
      Rational sum(0);
      for (size_t j = 0; j < n; ++j) {
        if (j != u && j != v) sum += psi[j];
      }
      if (frac_part(sum) == 0 || frac_part(psi[u]) == 0) continue;
      j2 = u;
      j3 = v;
      a_plus_c = sum;
      b = psi[u];
      d = psi[v];
      break;
    }
  }
  if (j2 == n) {
    throw computation_error("construct_representation: no nondegenerate index pair");
  }

  // Solve [cos pi(a+b+c), cos pi(a+c-b); 1, 1] (uz, -vw)^T = (cos pi d, 1)^T.
  APFloat m11 = cos_pi(a_plus_c + b);
  APFloat m12 = cos_pi(a_plus_c - b);
  APFloat rhs = cos_pi(d);
  APFloat det = m11 - m12;
  if (abs(det) < APFloat::pow2(-prec / 2, prec)) {
    throw computation_error("construct_representation: degenerate linear system");
  }
  APFloat uz = (rhs - m12) / det;
  APFloat neg_vw = (m11 - rhs) / det;

  // Gauge u = v = 1; then z = uz, w = vw, and det V = uz - vw = 1 by the system.
  APComplex u_(APComplex::one(prec)), v_(APComplex::one(prec));
  APComplex z_ = APComplex::from_real(uz);
  APComplex w_ = APComplex::from_real(-neg_vw);
  Mat2 V(u_, v_, w_, z_);

  RepMatrices rep;
  rep.h = Mat2::identity(prec);
  if (l[0] % 2 != 0) {
    rep.h = Mat2::diagonal(-APComplex::one(prec), -APComplex::one(prec));
  }

  // c covers the strictly-between indices; a covers everything outside [j2, j3].
  Rational c_sum(0);
  for (size_t j = j2 + 1; j < j3; ++j) c_sum += psi[j];
  Rational a_sum = a_plus_c - c_sum;

  Mat2 A = V * Mat2::diagonal(phase_pi(b), phase_pi(-b)) * V.sl2_inverse();
  Mat2 Dc_inv = Mat2::diagonal(phase_pi(-c_sum), phase_pi(c_sum));
  Mat2 Da_inv = Mat2::diagonal(phase_pi(-a_sum), phase_pi(a_sum));
  Mat2 B = Dc_inv * A.sl2_inverse() * Da_inv;

  for (size_t j = 0; j < n; ++j) {
    if (j == j2) {
      rep.x.push_back(A);
    } else if (j == j3) {
      rep.x.push_back(B);
    } else {
      rep.x.push_back(Mat2::diagonal(phase_pi(psi[j]), phase_pi(-psi[j])));
    }
  }

  // Verify: trace class of the bent product, the long relation, the torsion
  // relations, and unit determinants.
  APFloat tol = APFloat::pow2(-prec / 2, prec);
  APFloat tr_res = abs(B.trace() - APComplex::from_real(cos_pi(d) + cos_pi(d)));
  if (tr_res > tol) {
    throw computation_error("construct_representation: residual product is off its trace class");
  }
  Mat2 prod = rep.x[0];
  for (size_t j = 1; j < n; ++j) prod = prod * rep.x[j];
  if (entry_norm(prod - Mat2::identity(prec)) > tol) {
    throw computation_error("construct_representation: long relation failed");
  }
  for (size_t j = 0; j < n; ++j) {
    Mat2 pw = Mat2::identity(prec);
    for (Integer i = 0; i < sd.p[j]; ++i) pw = pw * rep.x[j];
    // x_j^{p_j} = h^{q_j} = (-1)^{l_1 q_j} I.
    Mat2 target = Mat2::identity(prec);
    Integer par = l[0] * sd.q_intro[j];
    if (par % 2 != 0) target = Mat2::diagonal(-APComplex::one(prec), -APComplex::one(prec));
    if (entry_norm(pw - target) > tol) {
      throw computation_error("construct_representation: torsion relation failed");
    }
    if (abs(rep.x[j].det() - APComplex::one(prec)) > tol) {
      throw computation_error("construct_representation: determinant drifted from 1");
    }
  }
  return rep;
}

}  // namespace sfs
