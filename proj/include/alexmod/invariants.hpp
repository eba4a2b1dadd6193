#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "alexmod/fox.hpp"
#include "alexmod/poly_matrix.hpp"
#include "alexmod/presentation.hpp"

namespace alexmod {

/// A dimension that may be infinite, or undefined at the requested level.
class Dimension {
 public:
  enum class Kind { finite, infinite, undefined };

  static Dimension finite(long v) { return Dimension(Kind::finite, v); }
  static Dimension infinite() { return Dimension(Kind::infinite, 0); }
  static Dimension undefined() { return Dimension(Kind::undefined, 0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  long value() const { return value_; }

  /// Decimal value, `infinite`, or `undefined`.
  std::string to_string() const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  Dimension(Kind k, long v) : kind_(k), value_(v) {}
  Kind kind_;
  long value_;
};

/// Ranks of the module presented by a Fox Jacobian.
///
/// At level 0, free_rank = g - 1 - jacobian_rank is r0 and
/// torsion_dimension is delta0 (infinite exactly when free_rank > 0).
/// At level 1 the module is a vector space over the coefficient field, so
/// free_rank is r1 = 0 and torsion_dimension is delta1.
struct ModuleRankResult {
  int level = 0;
  std::size_t generator_count = 0;
  std::size_t jacobian_rank = 0;
  long free_rank = 0;
  /// nullopt when not determined by the operation that produced the result.
  std::optional<Dimension> torsion_dimension;
};

struct WindowHomology {
  int radius = 0;
  std::vector<mpz_class> torsion;
  bool stabilized = false;
};

/// Normalized gcd of the (g-1)-minors of the univariate Fox Jacobian with
/// the integer content removed. Returns 0 when the relators cannot cut the
/// module down to a torsion one (a free quotient is present).
LaurentPoly alexander_polynomial(const GroupPresentation& p, const CoefficientSpec& spec,
                                 const ComputeLimits& limits = {});
/// Same, with the coefficient system read off the abelianization (needs H1 of rank 1).
LaurentPoly alexander_polynomial(const GroupPresentation& p, const ComputeLimits& limits = {});

ModuleRankResult crowell_ranks(const FoxJacobian& j, const ComputeLimits& limits = {});

/// delta0 over Q(u1..u(s-1))[t^±] after t_i -> u_i t (i != split), t_split -> t.
///
/// Throws InputError when H1 does not have rank `components`, or when the
/// linking-number map is not onto Z.
ModuleRankResult delta_zero(const GroupPresentation& p, int components, int split_index = 0,
                            const ComputeLimits& limits = {});

/// delta1 from a presentation of the commutator subgroup, with coefficients
/// in the fraction field of Z[H1(P') / torsion]. Undefined when that group is
/// trivial.
ModuleRankResult delta_one(const GroupPresentation& commutator, const ComputeLimits& limits = {});

/// Torsion of the integer cokernel on the window {t^j x_k : |j| <= w + D}
/// modulo {t^j r_i : |j| <= w}, compared against radius w + 1.
WindowHomology window_homology(const GroupPresentation& p, const CoefficientSpec& spec, int radius,
                               const ComputeLimits& limits = {});

/// Grows the radius from 1 until two consecutive windows agree, giving up
/// (stabilized == false) at limits.window_cap.
WindowHomology stable_window_homology(const GroupPresentation& p, const CoefficientSpec& spec,
                                      const ComputeLimits& limits = {});

}  // namespace alexmod
