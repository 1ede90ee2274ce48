#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sfs/seifert.hpp"

using namespace sfs;

namespace {

std::vector<Integer> iv(std::initializer_list<long> xs) {
  std::vector<Integer> r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

const std::vector<std::vector<Integer>> kManifolds = {
    iv({2, 3, 5}), iv({2, 3, 7}), iv({2, 3, 11}), iv({3, 5, 7}), iv({2, 3, 5, 7})};

double rel_err(const APComplex& got, const APComplex& want) {
  double d = abs(got - want).to_double();
  double w = abs(want).to_double();
  return w == 0.0 ? d : d / w;
}

APComplex rand_complex(std::mt19937& rng, long prec, double scale = 2.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return APComplex(APFloat::from_double(d(rng), prec), APFloat::from_double(d(rng), prec));
}

}  // namespace

TEST_CASE("construction: validation and diagnostics") {
  CHECK_THROWS_AS(new_seifert(iv({2, 3})), precondition_error);
  CHECK_THROWS_AS(new_seifert(iv({2, 3, 1})), precondition_error);
  CHECK_THROWS_WITH(new_seifert(iv({2, 4, 5})),
                    Catch::Matchers::ContainsSubstring("2") &&
                        Catch::Matchers::ContainsSubstring("4") &&
                        Catch::Matchers::ContainsSubstring("not coprime"));
}

TEST_CASE("construction: (2,3,5) and (2,3,7) coefficient solutions") {
  SeifertData sd = new_seifert(iv({2, 3, 5}));
  CHECK(sd.P == 30);
  CHECK(sd.euler == Rational(-1, 30));
  REQUIRE(sd.q_plumb.size() == 3);
  CHECK(sd.q_plumb[0] == 3);
  CHECK(sd.q_plumb[1] == 5);
  CHECK(sd.q_plumb[2] == 9);
  CHECK(sd.p0 == -5);
  REQUIRE(sd.q_intro.size() == 3);
  CHECK(sd.q_intro[0] == -5);
  CHECK(sd.q_intro[1] == 4);
  CHECK(sd.q_intro[2] == 6);

  SeifertData s7 = new_seifert(iv({2, 3, 7}));
  CHECK(s7.q_plumb[0] == 3);
  CHECK(s7.q_plumb[1] == 4);
  CHECK(s7.q_plumb[2] == 8);
  CHECK(s7.p0 == -4);
  CHECK(s7.q_intro[0] == -3);
  CHECK(s7.q_intro[1] == 2);
  CHECK(s7.q_intro[2] == 6);
}

TEST_CASE("construction: an even multiplicity is moved to the front") {
  SeifertData sd = new_seifert(iv({5, 3, 2}));
  CHECK(sd.p[0] == 2);
  CHECK(sd.user_index[0] == 2);
  CHECK(sd.P == 30);
  SeifertData odd = new_seifert(iv({3, 5, 7}));
  CHECK(odd.p[0] == 3);
  CHECK(odd.user_index[0] == 0);
}

TEST_CASE("construction: both defining sums hold exactly on all test manifolds") {
  for (const auto& p : kManifolds) {
    SeifertData sd = new_seifert(p);
    Rational si(0), sp(sd.p0);
    for (size_t j = 0; j < sd.n(); ++j) {
      si += Rational(sd.q_intro[j]) / Rational(sd.p[j]);
      sp += Rational(sd.q_plumb[j]) / Rational(sd.p[j]);
      CHECK(sd.q_plumb[j] >= sd.p[j]);
      CHECK(sd.q_plumb[j] < 2 * sd.p[j]);
    }
    CHECK(si * Rational(sd.P) == 1);
    CHECK(sp * Rational(sd.P) == -1);
    CHECK(mpz_odd_p(sd.q_intro[0].get_mpz_t()));
    for (size_t j = 1; j < sd.n(); ++j) {
      CHECK(mpz_even_p(sd.q_intro[j].get_mpz_t()));
    }
  }
}

TEST_CASE("parity normalization") {
  // Already normalized: unchanged.
  auto q = iv({-5, 4, 6});
  auto p = iv({2, 3, 5});
  CHECK(parity_normalize(q, p) == q);
  // The move preserves the coefficient sum exactly.
  auto q2 = iv({1, 1, 1});
  auto r = parity_normalize(q2, p);
  Rational before(0), after(0);
  for (size_t j = 0; j < 3; ++j) {
    before += Rational(q2[j]) / Rational(p[j]);
    after += Rational(r[j]) / Rational(p[j]);
  }
  CHECK(before == after);
  CHECK(mpz_odd_p(r[0].get_mpz_t()));
  CHECK(mpz_even_p(r[1].get_mpz_t()));
  CHECK(mpz_even_p(r[2].get_mpz_t()));
  // Two even multiplicities can never be normalized.
  CHECK_THROWS_AS(parity_normalize(iv({1, 1, 1}), iv({3, 2, 5})), precondition_error);
}

TEST_CASE("constants: exact rational parts on all test manifolds") {
  const std::vector<Rational> phis = {Rational(181, 30), Rational(-83, 42), Rational(421, 66),
                                      Rational(946, 105), Rational(949, 210)};
  const std::vector<long> m0s = {-1, 1, 5, 34, 173};
  for (size_t i = 0; i < kManifolds.size(); ++i) {
    SeifertData sd = new_seifert(kManifolds[i]);
    ConstantsBundle cb = constants(sd, Rational(0), 128);
    CHECK(cb.phi == phis[i]);
    CHECK(cb.m0 == m0s[i]);
    CHECK(cb.delta_small == -phis[i] / 4);
  }
  // Casson-Walker normalization on the two smallest spheres.
  CHECK(constants(new_seifert(iv({2, 3, 5})), Rational(0), 128).casson_walker == -1);
  CHECK(constants(new_seifert(iv({2, 3, 7})), Rational(0), 128).casson_walker == -1);
}

TEST_CASE("constants: transcendental relations at precision") {
  const long prec = 256;
  for (const auto& p : kManifolds) {
    SeifertData sd = new_seifert(p);
    ConstantsBundle cb = constants(sd, Rational(0), prec);
    // |varsigma|^2 = P/16
    APFloat m2 = abs(cb.varsigma) * abs(cb.varsigma);
    double want = Rational(sd.P, 16).get_d();
    CHECK(std::abs(m2.to_double() - want) < 1e-60);
    // kappa^2 = 2 pi i P
    APComplex k2 = cb.kappa * cb.kappa;
    APComplex tgt(APFloat(prec), APFloat::from_long(2, prec) * APFloat::pi(prec) *
                                     APFloat::from_rational(Rational(sd.P), prec));
    CHECK(rel_err(k2, tgt) < 1e-70);
    // mu * 2 lambda varsigma = 1
    APComplex one = cb.mu * APComplex::from_long(2, prec) * cb.lambda * cb.varsigma;
    CHECK(rel_err(one, APComplex::one(prec)) < 1e-70);
    // lambda is purely imaginary with sign (-1)^n
    CHECK(cb.lambda.re().is_zero());
    CHECK(cb.lambda.im().sign() == (sd.n() % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("F is even: 50 random points") {
  const long prec = 256;
  SeifertData sd = new_seifert(iv({2, 3, 5}));
  std::mt19937 rng(1234u);
  for (int t = 0; t < 50; ++t) {
    APComplex y = rand_complex(rng, prec);
    if (y.is_zero()) continue;
    APComplex a = eval_F(sd, y);
    APComplex b = eval_F(sd, -y);
    CHECK(rel_err(a, b) < 1e-70);
  }
}

TEST_CASE("F shifts by 2 pi i P with a computable sign") {
  const long prec = 256;
  std::mt19937 rng(99u);
  // sign = (-1)^{sum P/p_j + P(n-2)}: odd for (2,3,5) and (2,3,7), even for (3,5,7).
  const std::vector<std::pair<std::vector<Integer>, int>> cases = {
      {iv({2, 3, 5}), -1}, {iv({2, 3, 7}), -1}, {iv({3, 5, 7}), +1}};
  for (const auto& [p, sign] : cases) {
    SeifertData sd = new_seifert(p);
    APFloat shift = APFloat::from_long(2, prec) * APFloat::pi(prec) *
                    APFloat::from_rational(Rational(sd.P), prec);
    for (int t = 0; t < 5; ++t) {
      APComplex y = rand_complex(rng, prec, 1.0);
      if (y.is_zero()) continue;
      APComplex a = eval_F(sd, y + APComplex(APFloat(prec), shift));
      APComplex b = eval_F(sd, y) * APComplex::from_long(sign, prec);
      CHECK(rel_err(a, b) < 1e-60);
    }
  }
}

TEST_CASE("g at the even lattice points") {
  const long prec = 256;
  SeifertData sd = new_seifert(iv({2, 3, 5}));
  for (long m = 1; m <= 5; ++m) {
    APFloat pi = APFloat::pi(prec);
    APComplex y(APFloat(prec), APFloat::from_long(2 * m, prec) * pi);
    APComplex got = eval_g(sd, y);
    // g(2 pi i m) = -i pi m^2 / (2P)
    APComplex want(APFloat(prec),
                   -(pi * APFloat::from_rational(Rational(m * m, 60), prec)));
    CHECK(rel_err(got, want) < 1e-70);
  }
}

TEST_CASE("G: inversion symmetry, pole detection, and the bridge to F") {
  const long prec = 256;
  SeifertData sd = new_seifert(iv({2, 3, 5}));
  std::mt19937 rng(555u);
  for (int t = 0; t < 20; ++t) {
    APComplex z = rand_complex(rng, prec, 1.2);
    if (abs(z).to_double() < 0.1) continue;
    APComplex a = eval_G(sd, z);
    APComplex b = eval_G(sd, APComplex::one(prec) / z);
    CHECK(rel_err(a, b) < 1e-60);
  }
  CHECK_THROWS_AS(eval_G(sd, APComplex(prec)), precondition_error);
  CHECK_THROWS_AS(eval_G(sd, APComplex::one(prec)), pole_error);
  CHECK_THROWS_AS(eval_G(sd, -APComplex::one(prec)), pole_error);

  // G(e^s) = 16 F(2 P s) at random s.
  for (int t = 0; t < 10; ++t) {
    APComplex s = rand_complex(rng, prec, 0.02);
    if (s.is_zero()) continue;
    APComplex lhs = eval_G(sd, exp(s));
    APComplex rhs = eval_F(sd, s * APComplex::from_long(2 * 30, prec)) *
                    APComplex::from_long(16, prec);
    CHECK(rel_err(lhs, rhs) < 1e-60);
  }
}

TEST_CASE("F at the origin and F Taylor data") {
  const long prec = 256;
  SeifertData sd = new_seifert(iv({2, 3, 5}));
  CHECK(eval_F(sd, APComplex(prec)).is_zero());

  PowerSeriesQ ft = F_taylor(sd, 31);
  CHECK(ft[0] == 0);
  CHECK(ft[1] == 0);
  CHECK(ft[2] == Rational(1, 480));
  for (size_t m = 1; m < 31; m += 2) CHECK(ft[m] == 0);

  // Taylor evaluation matches eval_F well inside the convergence disk.
  std::mt19937 rng(31337u);
  for (int t = 0; t < 8; ++t) {
    APComplex y = rand_complex(rng, prec, 0.25);
    if (abs(y).to_double() < 0.05) continue;
    APComplex acc(prec);
    APComplex yp = APComplex::one(prec);
    for (size_t m = 0; m < 31; ++m) {
      acc += APComplex::from_rational(ft[m], prec) * yp;
      yp = yp * y;
    }
    // |y| <= 0.25 sqrt(2) and the tail starts at y^31: far below 2^{-prec/2}.
    CHECK(rel_err(acc, eval_F(sd, y)) < 1e-30);
  }
}

TEST_CASE("F Taylor order guard") {
  SeifertData sd = new_seifert(iv({2, 3, 5}));
  CHECK_THROWS_AS(F_taylor(sd, 2), precondition_error);
}
