#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive (dense rational arithmetic, letter-by-letter expansion) and share no
// algorithmic code with the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "alexmod/laurent_poly.hpp"
#include "alexmod/poly_matrix.hpp"
#include "alexmod/word.hpp"

namespace oracle {

using alexmod::Exponents;

// ---- dense univariate polynomials over Q, coefficient i = degree i ----

using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

// Univariate Laurent polynomial to dense form after shifting to exponent 0.
inline QPoly to_qpoly(const alexmod::LaurentPoly& f) {
  if (f.is_zero()) return {};
  int lo = f.terms().rbegin()->first[0];
  for (const auto& [e, c] : f.terms()) lo = std::min(lo, e[0]);
  QPoly out;
  for (const auto& [e, c] : f.terms()) {
    const auto i = static_cast<std::size_t>(e[0] - lo);
    if (out.size() <= i) out.resize(i + 1);
    out[i] = c;
  }
  trim(out);
  return out;
}

inline QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Long division: returns {quotient, remainder}.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = a.back() / b.back();
    if (q.size() <= shift) q.resize(shift + 1);
    q[shift] = c;
    QPoly m(shift, 0);
    for (const auto& x : b) m.push_back(x * c);
    a = sub(a, m);
  }
  trim(q);
  return {q, a};
}

inline QPoly monic(QPoly f) {
  trim(f);
  if (f.empty()) return f;
  const mpq_class lc = f.back();
  for (auto& x : f) x /= lc;
  return f;
}

// Euclid over Q[t], monic result.
inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// ---- dense rational linear algebra ----

using QMatrix = std::vector<std::vector<mpq_class>>;

inline std::size_t rank(QMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline mpq_class determinant(QMatrix m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

// Sylvester resultant of two dense polynomials of positive total degree.
inline mpq_class resultant(QPoly f, QPoly g) {
  trim(f);
  trim(g);
  const int m = degree(f), n = degree(g);
  const auto size = static_cast<std::size_t>(m + n);
  QMatrix s(size, std::vector<mpq_class>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f[static_cast<std::size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g[static_cast<std::size_t>(n - k)];
  return determinant(s);
}

inline mpq_class pow_q(const mpq_class& x, int e) {
  mpq_class r = 1;
  const mpq_class base = e < 0 ? mpq_class(1) / x : x;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

inline mpq_class evaluate(const alexmod::LaurentPoly& f, const std::vector<mpq_class>& point) {
  mpq_class s = 0;
  for (const auto& [e, c] : f.terms()) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= pow_q(point[i], e[i]);
    s += term;
  }
  return s;
}

inline QMatrix evaluate(const alexmod::PolyMatrix& m, const std::vector<mpq_class>& point) {
  QMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), point);
  return out;
}

// ---- integer determinantal divisors ----

using ZMatrix = std::vector<std::vector<mpz_class>>;

inline mpz_class int_det(const ZMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) q[i].emplace_back(x);
  const mpq_class d = determinant(q);
  return d.get_num();
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
inline std::vector<mpz_class> invariant_factors(const ZMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(rows, k, rs);
    combinations(cols, k, cs);
    mpz_class d = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        ZMatrix sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        const mpz_class det = int_det(sub);
        mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), det.get_mpz_t());
      }
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

// ---- Fox derivative by letter-by-letter expansion ----

using TermMap = std::map<Exponents, mpz_class>;

inline void add_to(TermMap& m, const Exponents& e, const mpz_class& c) {
  mpz_class& x = m[e];
  x += c;
  if (x == 0) m.erase(e);
}

// d w / d x_gen with phi(x_k) = t^images[k]; every syllable x^k is expanded
// into |k| single letters and the two base rules are applied in sequence.
inline TermMap fox(const alexmod::Word& w, int gen, const std::vector<Exponents>& images, int nvars) {
  TermMap out;
  Exponents prefix(static_cast<std::size_t>(nvars), 0);
  for (const auto& l : w.letters()) {
    const Exponents& img = images[static_cast<std::size_t>(l.generator)];
    const int step = l.exponent > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < std::abs(l.exponent); ++i) {
      if (step > 0) {
        if (l.generator == gen) add_to(out, prefix, 1);
        for (int v = 0; v < nvars; ++v) prefix[v] += img[v];
      } else {
        for (int v = 0; v < nvars; ++v) prefix[v] -= img[v];
        if (l.generator == gen) add_to(out, prefix, -1);
      }
    }
  }
  return out;
}

inline TermMap terms_of(const alexmod::LaurentPoly& f) { return TermMap(f.terms().begin(), f.terms().end()); }

// ---- random inputs ----

inline alexmod::Word random_word(std::mt19937_64& rng, int gens, int max_len, int max_exp = 3) {
  std::uniform_int_distribution<int> len(0, max_len), g(0, gens - 1), e(-max_exp, max_exp);
  std::vector<alexmod::Letter> letters;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int x = 0;
    while (x == 0) x = e(rng);
    letters.push_back({g(rng), x});
  }
  return alexmod::Word(letters);
}

inline alexmod::LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int terms, int lo, int hi, int coeff = 5) {
  std::uniform_int_distribution<int> ex(lo, hi), c(-coeff, coeff);
  alexmod::LaurentPoly f(nvars);
  for (int i = 0; i < terms; ++i) {
    Exponents e(static_cast<std::size_t>(nvars));
    for (int& x : e) x = ex(rng);
    f.add_term(e, c(rng));
  }
  return f;
}

}  // namespace oracle
