#include "sfs/arith.hpp"

#include <mutex>

namespace sfs {

Integer rational_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rational frac_part(const Rational& x) {
  Rational f = x - Rational(rational_floor(x));
  f.canonicalize();
  return f;
}

Integer binomial(const Integer& n, unsigned long k) {
  if (n >= 0) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
  }
  // C(n,k) = (-1)^k C(k-n-1, k) for negative n.
  Integer m = Integer(k) - n - 1;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k);
  return (k % 2 == 0) ? r : -r;
}

Rational rational_pow_int(const Rational& x, long e) {
  if (e < 0 && x == 0) throw precondition_error("rational_pow_int: zero base, negative exponent");
  Rational base = (e < 0) ? Rational(1) / x : x;
  unsigned long k = (e < 0) ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational r(1);
  while (k > 0) {
    if (k & 1ul) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

namespace {
// Sawtooth ((x)) = x - floor(x) - 1/2 for non-integers, 0 at integers.
Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) return Rational(0);
  return frac_part(x) - Rational(1, 2);
}
}  // namespace

Rational dedekind_sum(const Integer& a, const Integer& b) {
  if (b < 1) throw precondition_error("dedekind_sum: b must be >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) throw precondition_error("dedekind_sum: gcd(a,b) must be 1");
  Rational s(0);
  for (Integer k = 1; k < b; ++k) {
    s += sawtooth(Rational(k, b)) * sawtooth(Rational(k * a, b));
  }
  s.canonicalize();
  return s;
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache{Rational(1)};
  return cache;
}
}  // namespace

Rational bernoulli_number(unsigned long m) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  auto& cache = bernoulli_cache();
  while (cache.size() <= m) {
    // B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k
    unsigned long n = cache.size();
    Rational s(0);
    for (unsigned long k = 0; k < n; ++k) {
      s += Rational(binomial(Integer(n + 1), k)) * cache[k];
    }
    Rational b = -s / Rational(Integer(n) + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[m];
}

Rational bernoulli_polynomial(unsigned long m, const Rational& x) {
  Rational s(0);
  Rational xp(1);  // x^{m-k} built from the top down: iterate k = m..0 with ascending powers
  for (unsigned long k = m + 1; k-- > 0;) {
    s += Rational(binomial(Integer(m), k)) * bernoulli_number(k) * xp;
    xp *= x;
  }
  s.canonicalize();
  return s;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw precondition_error("mod_inverse: not invertible");
  }
  return r;
}

Integer crt_solve(const std::vector<Integer>& residues, const std::vector<Integer>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw precondition_error("crt_solve: lists must be non-empty and of equal length");
  }
  for (size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 1) throw precondition_error("crt_solve: moduli must be positive");
    for (size_t j = i + 1; j < moduli.size(); ++j) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), moduli[i].get_mpz_t(), moduli[j].get_mpz_t());
      if (g != 1) throw precondition_error("crt_solve: moduli not pairwise coprime");
    }
  }
  Integer x = residues[0] % moduli[0];
  if (x < 0) x += moduli[0];
  Integer m = moduli[0];
  for (size_t i = 1; i < moduli.size(); ++i) {
    // x + m*t = r_i mod m_i  =>  t = (r_i - x) * m^{-1} mod m_i
    Integer t = ((residues[i] - x) % moduli[i]) * mod_inverse(m % moduli[i], moduli[i]);
    t %= moduli[i];
    if (t < 0) t += moduli[i];
    x += m * t;
    m *= moduli[i];
  }
  // Verification on every call: cheap relative to downstream uses.
  for (size_t i = 0; i < moduli.size(); ++i) {
    Integer check = (x - residues[i]) % moduli[i];
    if (check != 0) throw computation_error("crt_solve: verification failed");
  }
  return x;
}

}  // namespace sfs
