#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alexmod {

using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial over Z.
///
/// Terms are kept in descending lexicographic order of exponent vectors
/// (variable 0 most significant); zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, mpz_class, std::greater<>>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const mpz_class& c);
  static LaurentPoly monomial(int nvars, Exponents e, const mpz_class& c = 1);
  static LaurentPoly variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Units of Z[t^±]: ±monomials.
  bool is_unit() const;

  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const mpz_class& leading_coefficient() const { return terms_.begin()->second; }
  mpz_class coefficient(const Exponents& e) const;

  Exponents min_exponents() const;
  Exponents max_exponents() const;
  /// Sum over variables of the exponent span; a pivoting heuristic.
  long total_span() const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;

  /// Multiplication by the monomial t^shift.
  LaurentPoly shifted(const Exponents& shift) const;
  /// Representative with every minimal exponent 0 and positive leading
  /// coefficient; the integer content is kept.
  LaurentPoly normalized() const;

  /// Ring map sending variable i to the monomial with exponent vector
  /// images[i] in `target_nvars` variables.
  LaurentPoly substitute(std::span<const Exponents> images, int target_nvars) const;

  /// Value at a point; every coordinate must be nonzero.
  mpq_class evaluate(std::span<const mpq_class> point) const;

  void add_term(const Exponents& e, const mpz_class& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& k);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class& k) { return a *= k; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(std::span<const std::string> names) const;
  /// Uses default_variable_names(nvars()).
  std::string to_string() const;

 private:
  void check_nvars(const LaurentPoly& o) const;

  int nvars_;
  TermMap terms_;
};

/// `t` for one variable, `t1..tn` otherwise.
std::vector<std::string> default_variable_names(int nvars);

/// Parses the display format (`t^2 - t + 1`, `2*t1^-1*t2 - 3`).
LaurentPoly parse_laurent(std::string_view text, std::span<const std::string> names);

/// Quotient f/g when g divides f in the Laurent ring, else nullopt.
/// Dividing by zero returns nullopt.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

/// Like divide_exact but throws std::logic_error when the division is inexact.
LaurentPoly divide_or_throw(const LaurentPoly& f, const LaurentPoly& g);

/// Greatest common divisor up to units, normalized (see LaurentPoly::normalized).
/// gcd(0, 0) == 0.
LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g);

/// Exponent span of `var`: max exponent minus min exponent. Throws
/// std::domain_error for the zero polynomial.
long span_degree(const LaurentPoly& f, int var);

/// Same class up to units (±monomials).
bool associates(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace alexmod
