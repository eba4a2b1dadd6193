#include "doctest.h"

#include <random>

#include "alexmod/errors.hpp"
#include "alexmod/integer_matrix.hpp"
#include "alexmod/laurent_poly.hpp"
#include "alexmod/poly_fraction.hpp"
#include "alexmod/poly_matrix.hpp"
#include "support/oracles.hpp"

using namespace alexmod;

namespace {

const std::vector<std::string> T = {"t"};
const std::vector<std::string> UT = {"u", "t"};
const std::vector<std::string> PQ = {"p", "q"};

LaurentPoly t1(const std::string& s) { return parse_laurent(s, T); }
LaurentPoly ut(const std::string& s) { return parse_laurent(s, UT); }

PolyMatrix matrix(int nvars, const std::vector<std::vector<std::string>>& rows,
                  const std::vector<std::string>& names) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_laurent(rows[i][j], names);
  return m;
}

oracle::ZMatrix to_z(const IntMatrix& m) {
  oracle::ZMatrix z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = m(i, j);
  return z;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("laurent polynomial display and parsing") {
  const LaurentPoly f = t1("t^2 - t + 1");
  CHECK(f.to_string() == "t^2 - t + 1");
  CHECK(t1("1 - t + t^2") == f);
  CHECK(parse_laurent("2*t1^-1*t2 - 3", default_variable_names(2)).to_string() == "-3 + 2*t1^-1*t2");
  CHECK(t1("t^-1 + t").to_string() == "t + t^-1");
  CHECK(LaurentPoly(1).to_string() == "0");
  CHECK_THROWS_AS(t1("t^"), InputError);
  CHECK_THROWS_AS(t1("s + 1"), InputError);
}

TEST_CASE("laurent arithmetic") {
  CHECK(t1("t - 1") * t1("t + 1") == t1("t^2 - 1"));
  CHECK(t1("t^-1") * t1("t") == LaurentPoly::constant(1, 1));
  CHECK((t1("t^3 + 2") - t1("t^3")).is_constant());
  CHECK(t1("-2*t^-3 + 4*t^-1").normalized() == t1("4*t^2 - 2"));
  CHECK(t1("-t^-2").is_unit());
  CHECK(!t1("2*t").is_unit());
  CHECK(t1("6*t^2 + 4").content() == 2);
  const Exponents swap[] = {{0, 1}, {1, 0}};
  CHECK(ut("u^2*t - 1").substitute(swap, 2) == ut("t^2*u - 1"));
  const mpq_class at2[] = {2};
  CHECK(t1("t^2 - t + 1 + t^-1").evaluate(at2) == mpq_class(7, 2));
}

TEST_CASE("span degree") {
  CHECK(span_degree(t1("t^2 - t + 1"), 0) == 2);
  CHECK(span_degree(t1("t^-1 + t"), 0) == 2);
  CHECK(span_degree(t1("5"), 0) == 0);
  CHECK(span_degree(ut("u^3*t + t^2"), 0) == 3);
  CHECK(span_degree(ut("u^3*t + t^2"), 1) == 1);
  CHECK_THROWS_AS(span_degree(LaurentPoly(1), 0), std::domain_error);
}

TEST_CASE("polynomial gcd examples") {
  const LaurentPoly a = t1("t^2 - t + 1"), b = t1("t + 1");
  CHECK(poly_gcd(a, b) == t1("1"));
  CHECK(oracle::resultant(oracle::to_qpoly(a), oracle::to_qpoly(b)) == 3);
  CHECK(!divide_exact(a, b));
  CHECK(!divide_exact(b, a));

  CHECK(poly_gcd(t1("t^2 - 1"), t1("t^3 - 1")) == t1("t - 1"));
  CHECK(poly_gcd(t1("-2*t^-1 + 2*t"), LaurentPoly(1)) == t1("2*t^2 - 2"));
  CHECK(poly_gcd(LaurentPoly(1), LaurentPoly(1)).is_zero());
  CHECK(poly_gcd(t1("4*t + 4"), t1("6*t^2 - 6")) == t1("2*t + 2"));

  CHECK(poly_gcd(ut("t - 1"), ut("1 - u*t")) == ut("1"));
  CHECK(poly_gcd(ut("u^2*t^2 - 1"), ut("u*t^2 - t")) == ut("u*t - 1"));
}

TEST_CASE("exact division") {
  CHECK(divide_exact(t1("t^3 - 1"), t1("t - 1")) == t1("t^2 + t + 1"));
  CHECK(divide_exact(t1("t^-2 - t^-3"), t1("t - 1")) == t1("t^-3"));
  CHECK(!divide_exact(t1("t^2 + 1"), t1("t - 1")));
  CHECK(!divide_exact(t1("t"), LaurentPoly(1)));
  CHECK(divide_exact(ut("u^2 - t^2"), ut("u + t")) == ut("u - t"));
}

TEST_CASE("property: univariate gcd agrees with Euclid over Q and the resultant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly h = oracle::random_poly(rng, 1, 3, -1, 2, 3);
    const LaurentPoly f = oracle::random_poly(rng, 1, 3, -2, 3) * (i % 2 ? h : LaurentPoly::constant(1, 1));
    const LaurentPoly g = oracle::random_poly(rng, 1, 3, -1, 3) * (i % 3 ? h : LaurentPoly::constant(1, 1));
    if (f.is_zero() || g.is_zero()) continue;
    const LaurentPoly d = poly_gcd(f, g);
    REQUIRE(!d.is_zero());
    CHECK(divide_exact(f, d));
    CHECK(divide_exact(g, d));
    CHECK(oracle::monic(oracle::to_qpoly(d)) == oracle::gcd(oracle::to_qpoly(f), oracle::to_qpoly(g)));
    const auto qf = oracle::to_qpoly(f), qg = oracle::to_qpoly(g);
    if (oracle::degree(qf) > 0 && oracle::degree(qg) > 0)
      CHECK((oracle::resultant(qf, qg) == 0) == (oracle::degree(oracle::to_qpoly(d)) > 0));
  }
}

TEST_CASE("property: multivariate gcd divides, is symmetric and multiplicative") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 250; ++i) {
    const int nv = 2 + static_cast<int>(i % 2);
    const LaurentPoly f = oracle::random_poly(rng, nv, 3, -1, 2);
    const LaurentPoly g = oracle::random_poly(rng, nv, 3, -1, 2);
    const LaurentPoly h = oracle::random_poly(rng, nv, 2, 0, 2, 3);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    ++checked;
    const LaurentPoly d = poly_gcd(f, g);
    CHECK(divide_exact(f, d));
    CHECK(divide_exact(g, d));
    CHECK(associates(d, poly_gcd(g, f)));
    CHECK(associates(poly_gcd(f * h, g * h), d * h));
  }
  CHECK(checked >= 200);
}

TEST_CASE("poly fractions stay reduced and agree with rational evaluation") {
  const PolyFraction x(t1("t^2 - 1"), t1("2*t - 2"));
  CHECK(x.numerator() == t1("t + 1"));
  CHECK(x.denominator() == t1("2"));
  const PolyFraction y(t1("1"), t1("-t^-1 + t"));
  CHECK(y.denominator() == t1("t^2 - 1"));
  CHECK(y.numerator() == t1("t"));
  CHECK((x * y).to_string() == "(t)/(2*t - 2)");
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(PolyFraction(t1("1"), LaurentPoly(1)), std::domain_error);

  std::mt19937_64 rng(13);
  const std::vector<mpq_class> point = {mpq_class(3, 7), mpq_class(-5, 2)};
  int checked = 0;
  for (int i = 0; i < 400 && checked < 200; ++i) {
    const auto rnd = [&] { return oracle::random_poly(rng, 2, 2, -1, 1, 3); };
    const LaurentPoly a = rnd(), b = rnd(), c = rnd(), d = rnd();
    if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) continue;
    const mpq_class vb = oracle::evaluate(b, point), vd = oracle::evaluate(d, point), vc = oracle::evaluate(c, point);
    if (vb == 0 || vd == 0 || vc == 0) continue;
    ++checked;
    const PolyFraction p(a, b), q(c, d);
    const mpq_class vp = oracle::evaluate(a, point) / vb, vq = vc / vd;
    const auto val = [&](const PolyFraction& f) -> mpq_class {
      return oracle::evaluate(f.numerator(), point) / oracle::evaluate(f.denominator(), point);
    };
    CHECK(val(p + q) == vp + vq);
    CHECK(val(p * q) == vp * vq);
    CHECK(val(p / q) == vp / vq);
    CHECK(p + q == q + p);
    CHECK((p + q) - q == p);
    const PolyFraction pq = p * q;
    for (const auto& [e, coef] : pq.denominator().terms())
      for (int k : e) CHECK(k >= 0);
    CHECK(poly_gcd((p / q).numerator(), (p / q).denominator()).is_unit());
  }
  CHECK(checked == 200);
}

TEST_CASE("fraction-free rank examples") {
  CHECK(rank_fraction_free(matrix(2, {{"t - 1", "1 - u*t"}}, UT)) == 1);
  CHECK(rank_fraction_free(matrix(2, {{"p", "0"}, {"0", "q"}}, PQ)) == 2);
  CHECK(rank_fraction_free(matrix(1, {{"t^2 - t + 1", "-t^2 + t - 1"}, {"t + 3", "-t - 3"}}, T)) == 1);
  CHECK(rank_fraction_free(PolyMatrix(0, 3, 1)) == 0);
  CHECK(rank_fraction_free(matrix(1, {{"0", "0"}}, T)) == 0);
}

TEST_CASE("determinant and minors gcd examples") {
  CHECK(determinant(matrix(1, {{"t", "1"}, {"1", "t"}}, T)) == t1("t^2 - 1"));
  CHECK(determinant(PolyMatrix(0, 0, 1)) == t1("1"));
  const PolyMatrix trefoil = matrix(1, {{"1 - t + t^2", "-1 + t - t^2"}}, T);
  CHECK(minors_gcd(trefoil, 1) == t1("t^2 - t + 1"));
  CHECK(minors_gcd(matrix(1, {{"1", "0"}, {"0", "1"}}, T), 2) == t1("1"));
  CHECK(minors_gcd(matrix(2, {{"t - 1", "1 - u*t"}}, UT), 1) == ut("1"));
  CHECK(oracle::resultant({-1, 1}, {1, -mpq_class(5)}) != 0);  // t - 1 vs 1 - u t at u = 5
  CHECK(minors_gcd(trefoil, 0) == t1("1"));
  CHECK(minors_gcd(trefoil, 2).is_zero());
  CHECK_THROWS_AS(minors_gcd(PolyMatrix(9, 2, 1), 1), ResourceError);
  ComputeLimits wide;
  wide.minor_cap = 9;
  CHECK(minors_gcd(PolyMatrix(9, 2, 1), 1, wide).is_zero());
}

TEST_CASE("property: rank agrees with rational rank at random points; minors gcd at the rank") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> pt(2, 60), dim(1, 4);
  for (int i = 0; i < 220; ++i) {
    const int nv = 1 + i % 2;
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    PolyMatrix m(r, c, nv);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) m(a, b) = oracle::random_poly(rng, nv, 2, -1, 2, 3);
    if (r >= 2 && i % 3 == 0) {
      // force a dependent row
      const LaurentPoly k = oracle::random_poly(rng, nv, 2, 0, 1, 2);
      for (std::size_t b = 0; b < c; ++b) m(r - 1, b) = m(0, b) * k;
    }
    const std::size_t rank = rank_fraction_free(m);
    for (int k = 0; k < 3; ++k) {
      std::vector<mpq_class> point;
      for (int v = 0; v < nv; ++v) point.emplace_back(pt(rng));
      CHECK(oracle::rank(oracle::evaluate(m, point)) == rank);
    }
    CHECK(!minors_gcd(m, rank).is_zero());
    CHECK(minors_gcd(m, rank + 1).is_zero());
    if (r == c) CHECK(determinant(m).is_zero() == (rank < r));
  }
}

TEST_CASE("smith normal form examples") {
  const auto s = integer_snf(IntMatrix{{2, 0}, {0, 3}});
  CHECK(s.invariant_factors == std::vector<mpz_class>{1, 6});
  CHECK(s.torsion() == std::vector<mpz_class>{6});
  const auto z = integer_snf(IntMatrix(2, 3));
  CHECK(z.invariant_factors.empty());
  CHECK(z.rank == 0);
  CHECK(integer_snf(IntMatrix{{1, -1}}).invariant_factors == std::vector<mpz_class>{1});
  CHECK(integer_snf(IntMatrix{{4, 6}, {6, 9}, {2, 3}}).invariant_factors == std::vector<mpz_class>{1});
  CHECK(to_string(std::vector<mpz_class>{2, 4}) == "(2, 4)");
}

TEST_CASE("property: smith form matches determinantal divisors and survives unimodular changes") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> dim(1, 4), mult(-3, 3);
  for (int i = 0; i < 250; ++i) {
    const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    IntMatrix m = random_int_matrix(rng, r, c, i % 2 ? 9 : 3);
    const SmithDecomposition s = integer_snf(m);
    CHECK(s.invariant_factors == oracle::invariant_factors(to_z(m)));
    CHECK(s.rank == s.invariant_factors.size());
    for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
      CHECK(s.invariant_factors[k] % s.invariant_factors[k - 1] == 0);

    IntMatrix n = m;
    for (int k = 0; k < 6; ++k) {
      if (r > 1) {
        const std::size_t a = rng() % r, b = (a + 1 + rng() % (r - 1)) % r;
        n.add_row_multiple(a, b, mult(rng));
        if (k % 2) n.swap_rows(a, b);
      }
      if (c > 1) {
        const std::size_t a = rng() % c, b = (a + 1 + rng() % (c - 1)) % c;
        n.add_col_multiple(a, b, mult(rng));
      }
      if (k == 3) n.negate_row(rng() % r);
    }
    CHECK(integer_snf(n).invariant_factors == s.invariant_factors);

    const SmithTransforms st = integer_snf_with_transforms(m);
    CHECK(st.left * m * st.right == st.diagonal);
    CHECK(abs(oracle::int_det(to_z(st.left))) == 1);
    CHECK(abs(oracle::int_det(to_z(st.right))) == 1);
  }
}

TEST_CASE("row hermite form") {
  CHECK(hermite_rows(IntMatrix{{2, 3}, {4, 5}}) == IntMatrix{{2, 0}, {0, 1}});
  CHECK(hermite_rows(IntMatrix{{0, 0}, {0, -3}}) == IntMatrix{{0, 3}});
}
