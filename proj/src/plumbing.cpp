#include "sfs/plumbing.hpp"

namespace sfs {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer ceil_div(const Integer& q, const Integer& p) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return r;
}

/// Fraction-free elimination; diag[i] receives the (i+1)x(i+1) leading
/// principal minor. Returns false if a zero pivot blocks the swap-free sweep
/// (which cannot happen for a definite matrix).
bool bareiss_minors(std::vector<std::vector<Integer>> a, std::vector<Integer>& diag) {
  const size_t n = a.size();
  diag.assign(n, Integer(0));
  Integer prev(1);
  for (size_t k = 0; k < n; ++k) {
    if (k > 0) {
      for (size_t i = k; i < n; ++i) {
        for (size_t j = k; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k - 1][k - 1] - a[i][k - 1] * a[k - 1][j]) / prev;
        }
      }
      prev = a[k - 1][k - 1];
    }
    diag[k] = a[k][k];
    if (k + 1 < n && a[k][k] == 0) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> delete_vertex(const std::vector<std::vector<Integer>>& m,
                                                size_t v) {
  const size_t n = m.size();
  std::vector<std::vector<Integer>> r;
  for (size_t i = 0; i < n; ++i) {
    if (i == v) continue;
    std::vector<Integer> row;
    for (size_t j = 0; j < n; ++j) {
      if (j == v) continue;
      row.push_back(m[i][j]);
    }
    r.push_back(std::move(row));
  }
  return r;
}

std::vector<std::vector<Integer>> matrix_of(const PlumbingGraph& g) {
  const size_t s = g.s();
  std::vector<std::vector<Integer>> m(s, std::vector<Integer>(s, Integer(0)));
  for (size_t i = 0; i < s; ++i) m[i][i] = g.weights[i];
  for (const auto& [a, b] : g.edges) {
    m[a][b] = 1;
    m[b][a] = 1;
  }
  return m;
}

}  // namespace

size_t PlumbingGraph::arm_vertex(size_t j, size_t i) const {
  size_t idx = 1;
  for (size_t a = 0; a < j; ++a) idx += arm_lengths[a];
  return idx + i;
}

std::vector<Integer> neg_cont_fraction(const Integer& q, const Integer& p) {
  if (p < 1 || q < p) throw precondition_error("neg_cont_fraction: need q >= p >= 1");
  if (gcd(q, p) != 1) throw precondition_error("neg_cont_fraction: q and p must be coprime");
  std::vector<Integer> ks;
  Integer a = q, b = p;
  while (b > 0) {
    Integer k = ceil_div(a, b);
    ks.push_back(k);
    Integer next = k * b - a;  // in [0, b)
    a = b;
    b = next;
  }
  // Back-substitution check: the expansion reproduces q/p exactly.
  Rational v(0);
  for (size_t i = ks.size(); i-- > 0;) {
    v = Rational(ks[i]) - v;
    if (i > 0) v = Rational(1) / v;
  }
  if (v != Rational(q) / Rational(p)) {
    throw computation_error("neg_cont_fraction: reconstruction mismatch");
  }
  return ks;
}

PlumbingGraph build_plumbing(const SeifertData& sd) {
  PlumbingGraph g;
  Integer center = sd.p0;
  std::vector<std::vector<Integer>> arms;
  for (size_t j = 0; j < sd.n(); ++j) {
    Integer qj = sd.q_plumb[j];
    Integer folded;
    mpz_fdiv_r(folded.get_mpz_t(), qj.get_mpz_t(), sd.p[j].get_mpz_t());
    center += (qj - folded) / sd.p[j];
    arms.push_back(neg_cont_fraction(sd.p[j], folded));
  }

  g.weights.push_back(center);
  for (size_t j = 0; j < arms.size(); ++j) {
    g.arm_lengths.push_back(arms[j].size());
    g.arm_k.push_back(arms[j]);
    size_t prev = 0;  // center
    for (size_t i = 0; i < arms[j].size(); ++i) {
      g.weights.push_back(-arms[j][i]);
      size_t cur = g.weights.size() - 1;
      g.edges.emplace_back(std::min(prev, cur), std::max(prev, cur));
      prev = cur;
    }
  }
  return g;
}

AdjacencyData adjacency(const PlumbingGraph& g) {
  AdjacencyData ad;
  ad.M = matrix_of(g);
  const size_t s = g.s();

  ad.weight_sum = 0;
  for (size_t i = 0; i < s; ++i) ad.weight_sum += g.weights[i];

  ad.degree.assign(s, 0);
  for (const auto& [a, b] : g.edges) {
    ++ad.degree[a];
    ++ad.degree[b];
  }

  std::vector<Integer> minors;
  bool ok = bareiss_minors(ad.M, minors);
  for (size_t k = 0; ok && k < s; ++k) {
    int want = (k % 2 == 0) ? -1 : 1;
    if (mpz_sgn(minors[k].get_mpz_t()) != want) ok = false;
  }
  if (!ok) {
    throw computation_error("adjacency: plumbing matrix is not negative definite");
  }
  ad.sigma = -static_cast<long>(s);
  ad.det = minors.back();
  return ad;
}

std::vector<Integer> arm_complement_dets(const PlumbingGraph& g) {
  auto m = matrix_of(g);
  std::vector<Integer> hs;
  for (size_t j = 0; j < g.arm_lengths.size(); ++j) {
    size_t terminal = g.arm_vertex(j, g.arm_lengths[j] - 1);
    std::vector<Integer> minors;
    if (!bareiss_minors(delete_vertex(m, terminal), minors)) {
      throw computation_error("arm_complement_dets: degenerate submatrix");
    }
    Integer d = minors.empty() ? Integer(1) : minors.back();
    hs.push_back(abs(d));
  }
  return hs;
}

Rational delta_exponent(const PlumbingGraph& g, const SeifertData& sd) {
  Rational acc(0);
  std::vector<Integer> hs = arm_complement_dets(g);
  for (const auto& h : hs) acc += Rational(h);
  acc -= 3 * Rational(static_cast<long>(g.s()));
  acc -= Rational(g.center_weight());
  for (size_t j = 0; j < sd.n(); ++j) {
    acc -= Rational(sd.P / sd.p[j]) / Rational(sd.p[j]);
    for (const auto& k : g.arm_k[j]) acc += Rational(k);
  }
  Rational d = -acc / 4;
  d.canonicalize();
  return d;
}

SeriesPrefactor series_prefactor(const AdjacencyData& ad) {
  SeriesPrefactor r;
  r.exponent = (3 * Rational(ad.sigma) - Rational(ad.weight_sum)) / 4;
  r.exponent.canonicalize();
  r.sign = 1;  // adjacency() admits only negative definite matrices
  return r;
}

}  // namespace sfs
