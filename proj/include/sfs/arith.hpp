#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sfs {

using Integer = mpz_class;
using Rational = mpq_class;

/// @brief Violated precondition (bad input); maps to CLI usage errors.
class precondition_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// @brief Runtime computation failure (budget exhausted, degenerate data).
class computation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// @brief Evaluation requested at (or numerically on top of) a pole.
class pole_error : public computation_error {
  using computation_error::computation_error;
};

/// @brief Floor of an exact rational as an integer.
Integer rational_floor(const Rational& x);

/// @brief Fractional part x - floor(x), always in [0,1).
Rational frac_part(const Rational& x);

/// @brief A rational number modulo 1, stored as its canonical representative in [0,1).
class RationalModZ {
 public:
  RationalModZ() : rep_(0) {}
  explicit RationalModZ(const Rational& x) : rep_(frac_part(x)) {}

  const Rational& rep() const { return rep_; }

  bool operator==(const RationalModZ& o) const { return rep_ == o.rep_; }
  bool operator!=(const RationalModZ& o) const { return rep_ != o.rep_; }
  bool operator<(const RationalModZ& o) const { return rep_ < o.rep_; }

  std::string str() const { return rep_.get_str(); }

 private:
  Rational rep_;  // canonical representative in [0,1)
};

/// @brief Binomial coefficient C(n,k) for integer n (generalized to negative n), k >= 0.
Integer binomial(const Integer& n, unsigned long k);

/// @brief x^e for any integer e (x nonzero when e < 0).
Rational rational_pow_int(const Rational& x, long e);

/// @brief Dedekind sum S(a,b) = sum_{k=1}^{b-1} ((k/b))((ka/b)) with the sawtooth
///        ((x)) = x - floor(x) - 1/2 for non-integral x and 0 otherwise.
/// @throws precondition_error unless b >= 1 and gcd(a,b) = 1.
Rational dedekind_sum(const Integer& a, const Integer& b);

/// @brief Bernoulli number B_m (B_1 = -1/2 convention), cached.
Rational bernoulli_number(unsigned long m);

/// @brief Bernoulli polynomial B_m(x) via B_m(x) = sum_k C(m,k) B_k x^{m-k}.
Rational bernoulli_polynomial(unsigned long m, const Rational& x);

/// @brief Chinese remainder solve: unique x in [0, prod moduli) with x = r_i mod m_i.
/// @throws precondition_error if the moduli are not pairwise coprime.
Integer crt_solve(const std::vector<Integer>& residues, const std::vector<Integer>& moduli);

/// @brief Modular inverse of a mod m (m >= 1, gcd(a,m)=1).
Integer mod_inverse(const Integer& a, const Integer& m);

}  // namespace sfs
