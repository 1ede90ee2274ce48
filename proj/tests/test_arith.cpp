#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sfs/arith.hpp"
#include "sfs/series.hpp"

using namespace sfs;

namespace {

Rational rational_pow(const Rational& x, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= x;
  return r;
}

bool kpoly_eq(const KPoly& a, const KPoly& b) {
  KPoly d = a + b.scaled(APComplex::from_long(-1, a.prec()));
  return d.is_zero();
}

}  // namespace

TEST_CASE("binomial coefficients, including negative upper index") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(-2, 5) == -6);
  // Pascal rule across a window that spans negative n.
  for (long n = -6; n <= 6; ++n) {
    for (unsigned long k = 1; k <= 8; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
    }
  }
}

TEST_CASE("rational floor and fractional part") {
  CHECK(rational_floor(Rational(7, 2)) == 3);
  CHECK(rational_floor(Rational(-7, 2)) == -4);
  CHECK(rational_floor(Rational(6, 3)) == 2);
  CHECK(frac_part(Rational(-7, 2)) == Rational(1, 2));
  CHECK(frac_part(Rational(5, 1)) == 0);
  CHECK(frac_part(Rational(-1, 3)) == Rational(2, 3));
}

TEST_CASE("rational residues mod 1") {
  CHECK(RationalModZ(Rational(5, 4)) == RationalModZ(Rational(1, 4)));
  CHECK(RationalModZ(Rational(-1, 4)) == RationalModZ(Rational(3, 4)));
  CHECK(RationalModZ(Rational(2)) == RationalModZ(Rational(0)));
  CHECK(RationalModZ(Rational(1, 3)) != RationalModZ(Rational(2, 3)));
  CHECK(RationalModZ(Rational(-49, 120)).rep() == Rational(71, 120));
}

TEST_CASE("Dedekind sums: closed values and preconditions") {
  CHECK(dedekind_sum(1, 1) == 0);
  CHECK(dedekind_sum(0, 1) == 0);
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(1, 2) == 0);
  // s(a,b) depends only on a mod b; s(-a,b) = -s(a,b).
  CHECK(dedekind_sum(7, 5) == dedekind_sum(2, 5));
  CHECK(dedekind_sum(-2, 5) == -dedekind_sum(2, 5));
  CHECK_THROWS_AS(dedekind_sum(1, 0), precondition_error);
  CHECK_THROWS_AS(dedekind_sum(2, 4), precondition_error);
}

TEST_CASE("Dedekind reciprocity over 100 random coprime pairs") {
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<long> dist(1, 400);
  int checked = 0;
  while (checked < 100) {
    long a = dist(rng), b = dist(rng);
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
    if (g != 1) continue;
    Rational lhs = dedekind_sum(a, b) + dedekind_sum(b, a);
    Rational rhs = Rational(-1, 4) +
                   (Rational(a, b) + Rational(b, a) + Rational(1, a) / b) / 12;
    rhs.canonicalize();
    CHECK(lhs == rhs);
    ++checked;
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("Bernoulli polynomials: values, difference identity, reflection") {
  CHECK(bernoulli_polynomial(0, Rational(9, 7)) == 1);
  CHECK(bernoulli_polynomial(1, Rational(0)) == Rational(-1, 2));
  CHECK(bernoulli_polynomial(2, Rational(1, 2)) == Rational(-1, 12));
  for (unsigned long m = 1; m <= 12; ++m) {
    for (int t = 0; t < 20; ++t) {
      Rational x = Rational(t, 7) - Rational(3, 2);
      Rational diff = bernoulli_polynomial(m, x + 1) - bernoulli_polynomial(m, x);
      Rational expect = Rational(static_cast<long>(m)) * rational_pow(x, m - 1);
      expect.canonicalize();
      CHECK(diff == expect);
      Rational refl = bernoulli_polynomial(m, 1 - x);
      Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
      CHECK(refl == sign * bernoulli_polynomial(m, x));
    }
  }
}

TEST_CASE("Chinese remainder solving") {
  CHECK(crt_solve({Integer(0)}, {Integer(5)}) == 0);
  CHECK(crt_solve({Integer(1), Integer(2)}, {Integer(2), Integer(3)}) == 5);
  CHECK(crt_solve({Integer(1), Integer(1), Integer(1)}, {Integer(2), Integer(3), Integer(5)}) == 1);
  CHECK(crt_solve({Integer(2), Integer(3)}, {Integer(3), Integer(5)}) == 8);
  CHECK(crt_solve({Integer(3), Integer(4), Integer(5)}, {Integer(4), Integer(9), Integer(25)}) ==
        355);
  CHECK_THROWS_AS(crt_solve({Integer(0), Integer(1)}, {Integer(4), Integer(6)}),
                  precondition_error);
  CHECK_THROWS_AS(crt_solve({Integer(0)}, {Integer(0)}), precondition_error);
}

TEST_CASE("Chinese remainder round trips on random residues") {
  std::mt19937 rng(77u);
  std::vector<Integer> mods = {Integer(7), Integer(11), Integer(13), Integer(27)};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> res;
    for (const auto& m : mods) {
      std::uniform_int_distribution<long> d(0, static_cast<long>(m.get_si()) - 1);
      res.push_back(Integer(d(rng)));
    }
    Integer x = crt_solve(res, mods);
    CHECK(x >= 0);
    CHECK(x < 7 * 11 * 13 * 27);
    for (size_t i = 0; i < mods.size(); ++i) {
      CHECK(x % mods[i] == res[i]);
    }
  }
}

TEST_CASE("modular inverses") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(10, 17) == 12);
  CHECK(mod_inverse(-1, 5) == 4);
  CHECK_THROWS_AS(mod_inverse(2, 4), precondition_error);
}

TEST_CASE("rational power series: inverse and negative powers") {
  PowerSeriesQ s(6);
  s[0] = 1;
  s[1] = 1;
  PowerSeriesQ inv = s.inverse();
  for (size_t i = 0; i < 6; ++i) {
    CHECK(inv[i] == ((i % 2 == 0) ? Rational(1) : Rational(-1)));
  }

  PowerSeriesQ sq = series_pow_neg(s, -2);
  CHECK(sq[0] == 1);
  CHECK(sq[1] == -2);
  CHECK(sq[2] == 3);
  CHECK(sq[5] == -6);

  CHECK_THROWS_AS(series_pow_neg(s, 2), precondition_error);
  PowerSeriesQ z(4);
  CHECK_THROWS_AS(z.inverse(), precondition_error);

  PowerSeriesQ one5 = series_pow_neg(PowerSeriesQ::one(5), -5);
  for (size_t i = 0; i < 5; ++i) CHECK(one5[i] == (i == 0 ? 1 : 0));
}

TEST_CASE("rational power series: s^e * s^{-e} is the identity") {
  PowerSeriesQ s(8);
  s[0] = 2;
  s[1] = 3;
  s[2] = Rational(1, 5);
  s[3] = -7;
  s[5] = Rational(4, 9);
  for (long e = 1; e <= 6; ++e) {
    PowerSeriesQ prod = s.pow_uint(static_cast<unsigned long>(e)) * series_pow_neg(s, -e);
    for (size_t i = 0; i < prod.order(); ++i) {
      CHECK(prod[i] == (i == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("level polynomials: arithmetic and evaluation with the k^{-1} slot") {
  const long prec = 128;
  APComplex two = APComplex::from_long(2, prec);
  APComplex three = APComplex::from_long(3, prec);
  APComplex ii = APComplex::i(prec);

  KPoly p = KPoly::monomial(three, 2) + KPoly::monomial(APComplex::one(prec), -1);
  CHECK(p.lo() == -1);
  CHECK(p.hi() == 3);
  // 3 k^2 + 1/k at k = 2: 12.5.
  APComplex v = p.eval(2);
  CHECK(std::abs(v.re().to_double() - 12.5) < 1e-30);
  CHECK(v.im().is_zero());

  KPoly q = KPoly::constant(two) * KPoly::monomial(ii, -1);
  CHECK(q.lo() == -1);
  APComplex w = q.eval(4);
  CHECK(w.re().is_zero());
  CHECK(std::abs(w.im().to_double() - 0.5) < 1e-30);

  // Products may not drop below the single inverse-power slot.
  KPoly m = KPoly::monomial(two, -1);
  CHECK_THROWS_AS(m * m, computation_error);

  // Exact cancellation trims to the empty polynomial.
  KPoly z = p + p.scaled(APComplex::from_long(-1, prec));
  CHECK(z.is_zero());

  CHECK_THROWS_AS(KPoly::monomial(two, -1).eval(0), precondition_error);
}

TEST_CASE("Laurent series residues: hand cases") {
  const long prec = 128;

  LaurentPolySeries s(-2, 3, prec);
  s.at(-1) = KPoly::constant(APComplex::from_long(5, prec));
  KPoly r = laurent_residue(s);
  CHECK(kpoly_eq(r, KPoly::constant(APComplex::from_long(5, prec))));

  // k x^{-2} + 3: residue slot is zero.
  LaurentPolySeries t(-2, 2, prec);
  t.at(-2) = KPoly::monomial(APComplex::one(prec), 1);
  t.at(0) = KPoly::constant(APComplex::from_long(3, prec));
  CHECK(laurent_residue(t).is_zero());

  // Window entirely above the residue slot: residue is zero.
  LaurentPolySeries u(0, 3, prec);
  u.at(1) = KPoly::constant(APComplex::from_long(9, prec));
  CHECK(laurent_residue(u).is_zero());

  // Window truncated before reaching exponent -1.
  LaurentPolySeries v(-3, -1, prec);
  CHECK_THROWS_AS(laurent_residue(v), precondition_error);

  // (1/x)(a + b x) has residue a.
  LaurentPolySeries inv(-1, 1, prec);
  inv.at(-1) = KPoly::constant(APComplex::one(prec));
  LaurentPolySeries lin(0, 2, prec);
  lin.at(0) = KPoly::constant(APComplex::from_long(3, prec));
  lin.at(1) = KPoly::constant(APComplex::from_long(7, prec));
  LaurentPolySeries prod = inv * lin;
  CHECK(prod.lo() == -1);
  CHECK(prod.hi() == 1);
  CHECK(kpoly_eq(laurent_residue(prod), KPoly::constant(APComplex::from_long(3, prec))));
}

TEST_CASE("Laurent series products: window truncation rule") {
  const long prec = 128;
  // a covers [-1, 2), b covers [0, 3): product covers [-1, min(-1+3, 0+2)) = [-1, 2).
  LaurentPolySeries a(-1, 2, prec);
  LaurentPolySeries b(0, 3, prec);
  a.at(-1) = KPoly::constant(APComplex::one(prec));
  b.at(0) = KPoly::constant(APComplex::one(prec));
  LaurentPolySeries p = a * b;
  CHECK(p.lo() == -1);
  CHECK(p.hi() == 2);
}

TEST_CASE("Laurent series algebra: commutativity and associativity") {
  const long prec = 128;
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);

  auto random_series = [&](int lo, int hi) {
    LaurentPolySeries s(lo, hi, prec);
    for (int e = lo; e < hi; ++e) {
      KPoly kp(prec);
      int nterms = deg(rng) + 1;
      for (int t = 0; t < nterms; ++t) {
        kp += KPoly::monomial(APComplex::from_long(coeff(rng), prec), deg(rng));
      }
      s.at(e) = kp;
    }
    return s;
  };

  auto series_eq = [&](const LaurentPolySeries& x, const LaurentPolySeries& y) {
    if (x.lo() != y.lo() || x.hi() != y.hi()) return false;
    for (int e = x.lo(); e < x.hi(); ++e) {
      if (!kpoly_eq(x.coeff(e), y.coeff(e))) return false;
    }
    return true;
  };

  for (int trial = 0; trial < 10; ++trial) {
    LaurentPolySeries A = random_series(-1, 3);
    LaurentPolySeries B = random_series(-1, 3);
    LaurentPolySeries C = random_series(-1, 3);
    CHECK(series_eq(A * B, B * A));
    CHECK(series_eq((A * B) * C, A * (B * C)));
    CHECK(series_eq(A * (B + C), A * B + A * C));
  }
}

TEST_CASE("complex power series: inverse and conversion") {
  const long prec = 192;
  PowerSeriesQ s(6);
  s[0] = 2;
  s[1] = -1;
  s[3] = Rational(5, 3);
  APSeries as = APSeries::from_rational(s, prec);
  APSeries prod = as * as.inverse();
  for (size_t i = 0; i < prod.order(); ++i) {
    APComplex want = (i == 0) ? APComplex::one(prec) : APComplex(prec);
    APComplex diff = prod[i] - want;
    CHECK(abs(diff).to_double() < 1e-50);
  }
  CHECK_THROWS_AS(APSeries(4, prec).inverse(), precondition_error);
}
