// Exact division and gcds in Z[t1^±, ..., tn^±].
//
// Both reduce to the polynomial ring: a Laurent polynomial is a unit
// monomial times a polynomial with every minimal exponent zero, and such a
// polynomial has no monomial factors.

#include <stdexcept>

#include "alexmod/laurent_poly.hpp"

namespace alexmod {

namespace {

Exponents negated(Exponents e) {
  for (int& x : e) x = -x;
  return e;
}

// Division in Z[t] (nonnegative exponents) by lex leading terms.
std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& f, const LaurentPoly& g) {
  const int n = f.nvars();
  LaurentPoly q(n), r = f;
  const Exponents& eg = g.leading_exponents();
  const mpz_class& cg = g.leading_coefficient();
  Exponents m(static_cast<std::size_t>(n));
  while (!r.is_zero()) {
    const Exponents& er = r.leading_exponents();
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = er[i] - eg[i];
      if (m[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cg.get_mpz_t())) return std::nullopt;
    const mpz_class c = r.leading_coefficient() / cg;
    q.add_term(m, c);
    Exponents e(m.size());
    for (const auto& [eg_i, cg_i] : g.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = eg_i[i] + m[i];
      r.add_term(e, -c * cg_i);
    }
  }
  return q;
}

// ---- recursive gcd over Z[x0..x(k-1)] ------------------------------------

using UPoly = std::vector<LaurentPoly>;  // coefficients by degree in the main variable

int degree_in(const LaurentPoly& f, int v) {
  int d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

UPoly to_univariate(const LaurentPoly& f, int v) {
  UPoly out(static_cast<std::size_t>(degree_in(f, v)) + 1, LaurentPoly(f.nvars()));
  for (const auto& [e, c] : f.terms()) {
    Exponents rest = e;
    const int d = rest[static_cast<std::size_t>(v)];
    rest[static_cast<std::size_t>(v)] = 0;
    out[static_cast<std::size_t>(d)].add_term(rest, c);
  }
  return out;
}

LaurentPoly from_univariate(const UPoly& u, int v, int nvars) {
  LaurentPoly out(nvars);
  for (std::size_t d = 0; d < u.size(); ++d)
    for (const auto& [e, c] : u[d].terms()) {
      Exponents full = e;
      full[static_cast<std::size_t>(v)] = static_cast<int>(d);
      out.add_term(full, c);
    }
  return out;
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int deg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

LaurentPoly with_positive_lead(LaurentPoly f) {
  if (!f.is_zero() && f.leading_coefficient() < 0) f = -f;
  return f;
}

LaurentPoly gcd_rec(const LaurentPoly& f, const LaurentPoly& g, int k);

LaurentPoly content_rec(const UPoly& u, int k) {
  LaurentPoly c(u.empty() ? 0 : u.front().nvars());
  for (const auto& coef : u) {
    if (coef.is_zero()) continue;
    c = c.is_zero() ? with_positive_lead(coef) : gcd_rec(c, coef, k);
    if (c.is_constant() && c.leading_coefficient() == 1) break;
  }
  return c;
}

UPoly divide_coefficients(const UPoly& u, const LaurentPoly& d) {
  UPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(c.is_zero() ? c : divide_or_throw(c, d));
  return out;
}

LaurentPoly power(const LaurentPoly& base, int e) {
  LaurentPoly r = LaurentPoly::constant(base.nvars(), 1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
UPoly pseudo_remainder(UPoly r, const UPoly& b) {
  const LaurentPoly& lb = b.back();
  const int db = deg(b);
  int e = deg(r) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    const LaurentPoly s = r.back();
    const int shift = deg(r) - db;
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= s * b[static_cast<std::size_t>(i)];
    trim(r);
    --e;
  }
  if (e > 0) {
    const LaurentPoly f = power(lb, e);
    for (auto& c : r) c *= f;
  }
  return r;
}

// gcd of primitive polynomials via the subresultant remainder sequence.
UPoly subresultant_gcd(UPoly a, UPoly b, int k) {
  const int nvars = a.front().nvars();
  if (deg(a) < deg(b)) std::swap(a, b);
  if (deg(b) == 0) return {LaurentPoly::constant(nvars, 1)};
  LaurentPoly g = LaurentPoly::constant(nvars, 1);
  LaurentPoly h = g;
  for (;;) {
    const int delta = deg(a) - deg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return {LaurentPoly::constant(nvars, 1)};
    a = std::move(b);
    b = divide_coefficients(r, g * power(h, delta));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(power(g, delta), power(h, delta - 1));
    }
  }
  return divide_coefficients(b, content_rec(b, k));
}

LaurentPoly gcd_rec(const LaurentPoly& f, const LaurentPoly& g, int k) {
  if (f.is_zero()) return with_positive_lead(g);
  if (g.is_zero()) return with_positive_lead(f);
  if (k == 0) {
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), f.leading_coefficient().get_mpz_t(), g.leading_coefficient().get_mpz_t());
    return LaurentPoly::constant(f.nvars(), c);
  }
  const int v = k - 1;
  if (degree_in(f, v) == 0 && degree_in(g, v) == 0) return gcd_rec(f, g, k - 1);

  UPoly uf = to_univariate(f, v), ug = to_univariate(g, v);
  const LaurentPoly cf = content_rec(uf, k - 1);
  const LaurentPoly cg = content_rec(ug, k - 1);
  const LaurentPoly c = gcd_rec(cf, cg, k - 1);
  const UPoly h = subresultant_gcd(divide_coefficients(uf, cf), divide_coefficients(ug, cg), k - 1);
  return with_positive_lead(from_univariate(h, v, f.nvars()) * c);
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable-count mismatch");
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return f;
  const Exponents lf = f.min_exponents(), lg = g.min_exponents();
  auto q = divide_polynomial(f.shifted(negated(lf)), g.shifted(negated(lg)));
  if (!q) return std::nullopt;
  Exponents shift = lf;
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= lg[i];
  return q->shifted(shift);
}

LaurentPoly divide_or_throw(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = divide_exact(f, g);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *std::move(q);
}

LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable-count mismatch");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  const LaurentPoly f0 = f.shifted(negated(f.min_exponents()));
  const LaurentPoly g0 = g.shifted(negated(g.min_exponents()));
  return gcd_rec(f0, g0, f.nvars()).normalized();
}

}  // namespace alexmod
