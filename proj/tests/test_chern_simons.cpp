#include <catch2/catch_amalgamated.hpp>

#include "sfs/chern_simons.hpp"

using namespace sfs;

namespace {

std::vector<Integer> ivec(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

const std::vector<std::vector<Integer>> kManifolds = {
    ivec({2, 3, 5}), ivec({2, 3, 7}), ivec({2, 3, 11}), ivec({3, 5, 7}), ivec({2, 3, 5, 7})};

long divisor_count(long m, const std::vector<Integer>& p) {
  long c = 0;
  for (const auto& pj : p) {
    if (m % pj.get_si() == 0) ++c;
  }
  return c;
}

Mat2 mat_pow(const Mat2& m, long e, long prec) {
  Mat2 out = Mat2::identity(prec);
  for (long i = 0; i < e; ++i) out = out * m;
  return out;
}

APFloat representation_residual(const RepMatrices& rep, const LTuple& lt, const SeifertData& sd,
                                long prec) {
  Mat2 prod = rep.x[0];
  for (size_t j = 1; j < sd.n(); ++j) prod = prod * rep.x[j];
  APFloat worst = entry_norm(prod - Mat2::identity(prec));
  for (size_t j = 0; j < sd.n(); ++j) {
    Mat2 pw = mat_pow(rep.x[j], sd.p[j].get_si(), prec);
    Mat2 target = Mat2::identity(prec);
    if ((Integer(lt.l[0]) * sd.q_intro[j]) % 2 != 0) {
      target = Mat2::diagonal(-APComplex::one(prec), -APComplex::one(prec));
    }
    APFloat r = entry_norm(pw - target);
    if (r > worst) worst = r;
    APFloat dr = abs(rep.x[j].det() - APComplex::one(prec));
    if (dr > worst) worst = dr;
  }
  return worst;
}

}  // namespace

TEST_CASE("label tuple enumeration") {
  auto L = enumerate_L(ivec({2, 3, 5}));
  REQUIRE(L.size() == 2);
  CHECK(L[0] == LTuple{{1, 1, 1}});
  CHECK(L[1] == LTuple{{1, 1, 2}});

  // For three fibers the count is (p1-1)(p2-1)(p3-1)/4.
  CHECK(enumerate_L(ivec({2, 3, 7})).size() == 3);
  CHECK(enumerate_L(ivec({2, 3, 11})).size() == 5);
  CHECK(enumerate_L(ivec({3, 5, 7})).size() == 12);
  CHECK(enumerate_L(ivec({2, 3, 5, 7})).size() == 29);

  // Lexicographic order and bounds.
  auto L4 = enumerate_L(ivec({2, 3, 5, 7}));
  for (size_t i = 1; i < L4.size(); ++i) CHECK(L4[i - 1].l < L4[i].l);
  for (const auto& t : L4) {
    CHECK(t.l[0] >= 0);
    CHECK(t.l[0] <= 2);
    CHECK(t.l[1] <= 1);
    CHECK(t.l[2] <= 2);
    CHECK(t.l[3] <= 3);
  }

  CHECK_THROWS_AS(enumerate_L(ivec({2, 3})), precondition_error);
}

TEST_CASE("invariant values of label tuples") {
  auto p = ivec({2, 3, 5});
  CHECK(cs_value(LTuple{{1, 1, 1}}, p) == RationalModZ(Rational(-49, 120)));
  CHECK(cs_value(LTuple{{1, 1, 1}}, p).rep() == Rational(71, 120));
  CHECK(cs_value(LTuple{{1, 1, 2}}, p) == RationalModZ(Rational(-1, 120)));
  CHECK(cs_value(LTuple{{1, 1, 2}}, p).rep() == Rational(119, 120));

  CHECK_THROWS_AS(cs_value(LTuple{{1, 1}}, p), precondition_error);
}

TEST_CASE("value set with phase fibers") {
  auto W = enumerate_W(ivec({2, 3, 5}));
  REQUIRE(W.values.size() == 2);
  CHECK(W.values[0].rep() == Rational(71, 120));
  CHECK(W.values[1].rep() == Rational(119, 120));

  const auto& t119 = W.fibers.at(RationalModZ(Rational(119, 120)));
  CHECK(t119 == std::vector<long>{1, 11, 19, 29, 31, 41, 49, 59});
  const auto& t71 = W.fibers.at(RationalModZ(Rational(71, 120)));
  CHECK(t71 == std::vector<long>{7, 13, 17, 23, 37, 43, 47, 53});

  auto W7 = enumerate_W(ivec({2, 3, 7}));
  REQUIRE(W7.values.size() == 3);
  CHECK(W7.values[0].rep() == Rational(47, 168));
  CHECK(W7.values[1].rep() == Rational(143, 168));
  CHECK(W7.values[2].rep() == Rational(167, 168));
}

TEST_CASE("fiber structure across all manifolds") {
  for (const auto& p : kManifolds) {
    auto W = enumerate_W(p);
    long n = static_cast<long>(p.size());
    Integer P(1);
    for (const auto& x : p) P *= x;
    long twoP = 2 * P.get_si();

    // Values are sorted, distinct, and one fiber per value.
    for (size_t i = 1; i < W.values.size(); ++i) CHECK(W.values[i - 1] < W.values[i]);
    CHECK(W.fibers.size() == W.values.size());

    size_t total = 0;
    for (const auto& [theta, fiber] : W.fibers) {
      CHECK(!fiber.empty());
      total += fiber.size();
      for (long m : fiber) {
        // Fiber members never acquire extra divisors.
        CHECK(divisor_count(m, p) <= n - 3);
        CHECK(RationalModZ(Rational(-m * m) / Rational(4 * P)) == theta);
      }
    }
    size_t expect = 0;
    for (long m = 1; m < twoP; ++m) {
      if (divisor_count(m, p) <= n - 3) ++expect;
    }
    CHECK(total == expect);
  }
}

TEST_CASE("label values exhaust the value set injectively") {
  for (const auto& p : kManifolds) {
    auto L = enumerate_L(p);
    auto W = enumerate_W(p);
    std::vector<RationalModZ> got;
    for (const auto& t : L) got.push_back(cs_value(t, p));
    std::sort(got.begin(), got.end());
    // Injectivity: no duplicates after sorting.
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    CHECK(got == W.values);
  }
}

TEST_CASE("congruence solving round trips") {
  for (const auto& p : kManifolds) {
    long n = static_cast<long>(p.size());
    Integer P(1);
    for (const auto& x : p) P *= x;
    long twoP = 2 * P.get_si();
    for (long y = 1; y < twoP; ++y) {
      if (divisor_count(y, p) > n - 3) {
        CHECK_THROWS_AS(solve_congruence(y, p), precondition_error);
        continue;
      }
      LTuple t = solve_congruence(y, p);
      CHECK(cs_value(t, p) == RationalModZ(Rational(-y * y) / Rational(4 * P)));
    }
  }

  // Deterministic representative: y = 1 on (2,3,5) lands on (1,1,2).
  CHECK(solve_congruence(1, ivec({2, 3, 5})) == LTuple{{1, 1, 2}});
  CHECK_THROWS_AS(solve_congruence(30, ivec({2, 3, 5})), precondition_error);
}

TEST_CASE("representation matrices satisfy the group relations") {
  const long prec = 256;
  SeifertData sd = new_seifert(ivec({2, 3, 5}));

  for (const auto& lt : enumerate_L(sd.p)) {
    RepMatrices rep = construct_representation(lt, sd, prec);
    REQUIRE(rep.x.size() == 3);

    // h maps to (-1)^{l_1} I.
    Mat2 h_expect = Mat2::diagonal(-APComplex::one(prec), -APComplex::one(prec));
    CHECK(entry_norm(rep.h - h_expect) == APFloat::from_long(0, prec));

    // Traces pin the conjugacy class of each generator image.
    APFloat tol = APFloat::pow2(-prec + 30, prec);
    APComplex tr1 = rep.x[0].trace();  // 2 cos(pi/2) = 0
    CHECK(abs(tr1) < tol);
    APComplex tr2 = rep.x[1].trace();  // 2 cos(2 pi/3) = -1
    CHECK(abs(tr2 + APComplex::one(prec)) < tol);
    APComplex tr3 = rep.x[2].trace();  // 2 cos(2 pi l_3 / 5)
    APComplex expect3 = exp_2pi_i(Rational(lt.l[2], 5), prec) + exp_2pi_i(Rational(-lt.l[2], 5), prec);
    CHECK(abs(tr3 - expect3) < tol);

    CHECK(representation_residual(rep, lt, sd, prec) < tol);
  }
}

TEST_CASE("representation residuals shrink with precision") {
  SeifertData sd = new_seifert(ivec({2, 3, 7}));
  LTuple lt = enumerate_L(sd.p)[0];
  APFloat r128 = representation_residual(construct_representation(lt, sd, 128), lt, sd, 128);
  APFloat r256 = representation_residual(construct_representation(lt, sd, 256), lt, sd, 256);
  CHECK(r128 < APFloat::pow2(-98, 128));
  CHECK(r256 < APFloat::pow2(-226, 256));
}

TEST_CASE("representations exist for every label tuple of every manifold") {
  const long prec = 192;
  APFloat tol = APFloat::pow2(-prec + 30, prec);
  for (const auto& p : kManifolds) {
    SeifertData sd = new_seifert(p);
    for (const auto& lt : enumerate_L(p)) {
      RepMatrices rep = construct_representation(lt, sd, prec);
      CHECK(representation_residual(rep, lt, sd, prec) < tol);

      // Off-diagonal images are genuinely non-commuting (irreducibility witness):
      // at least one generator image is non-diagonal.
      bool some_nondiagonal = false;
      for (const auto& m : rep.x) {
        if (!(abs(m.b) < tol) || !(abs(m.c) < tol)) some_nondiagonal = true;
      }
      CHECK(some_nondiagonal);
    }
  }
}
