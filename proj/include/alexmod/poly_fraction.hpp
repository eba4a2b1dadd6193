#pragma once

#include <string>

#include "alexmod/laurent_poly.hpp"

namespace alexmod {

/// Element of the fraction field of Z[t1^±..tn^±], kept reduced: the
/// denominator has all exponents >= 0 with minimum 0 in every variable and a
/// positive leading coefficient, and shares no non-unit factor with the
/// numerator. Zero is 0/1.
class PolyFraction {
 public:
  explicit PolyFraction(int nvars = 0);
  explicit PolyFraction(LaurentPoly numerator);
  /// Throws std::domain_error on a zero denominator.
  PolyFraction(LaurentPoly numerator, LaurentPoly denominator);

  int nvars() const { return num_.nvars(); }
  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  PolyFraction operator-() const;
  /// Throws std::domain_error on division by zero.
  PolyFraction inverse() const;

  friend PolyFraction operator+(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) { return a + (-b); }
  friend PolyFraction operator*(const PolyFraction& a, const PolyFraction& b);
  friend PolyFraction operator/(const PolyFraction& a, const PolyFraction& b) { return a * b.inverse(); }
  friend bool operator==(const PolyFraction&, const PolyFraction&) = default;

  /// `num` or `(num)/(den)`.
  std::string to_string() const;

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace alexmod
