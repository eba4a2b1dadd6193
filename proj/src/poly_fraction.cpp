#include "alexmod/poly_fraction.hpp"

#include <stdexcept>

namespace alexmod {

PolyFraction::PolyFraction(int nvars) : num_(nvars), den_(LaurentPoly::constant(nvars, 1)) {}

PolyFraction::PolyFraction(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(LaurentPoly::constant(num_.nvars(), 1)) {}

PolyFraction::PolyFraction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("variable count mismatch");
  reduce();
}

void PolyFraction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.nvars(), 1);
    return;
  }
  const LaurentPoly g = poly_gcd(num_, den_);
  num_ = divide_or_throw(num_, g);
  den_ = divide_or_throw(den_, g);
  // Move the denominator's monomial factor and sign into the numerator.
  Exponents shift = den_.min_exponents();
  for (int& e : shift) e = -e;
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);
  if (sgn(den_.leading_coefficient()) < 0) {
    den_ = -den_;
    num_ = -num_;
  }
}

PolyFraction PolyFraction::operator-() const {
  PolyFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

PolyFraction PolyFraction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return PolyFraction(den_, num_);
}

PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
  return PolyFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
  return PolyFraction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string PolyFraction::to_string() const {
  if (den_.is_constant() && den_.leading_coefficient() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace alexmod
