#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alexmod/abelianization.hpp"
#include "alexmod/laurent_poly.hpp"
#include "alexmod/poly_matrix.hpp"
#include "alexmod/presentation.hpp"
#include "alexmod/word.hpp"

namespace alexmod {

/// Abelian coefficient system phi: F(x_1..x_g) -> Z^nvars, x_j -> t^images[j].
///
/// Level 0 is the universal abelian cover of a curve complement (variables
/// t1..ts, `split_index` names the coordinate used as t when splitting off
/// the linking-number direction). Level 1 is the torsion-free abelianization
/// of a commutator-subgroup presentation (variables p, q, ...).
class CoefficientSpec {
 public:
  /// Throws InputError when the level is not 0/1, an image has the wrong
  /// length, every image is zero, or the split index is out of range.
  CoefficientSpec(int level, int nvars, std::vector<Exponents> images, int split_index = 0,
                  std::vector<std::string> variable_names = {});

  /// Coefficients read off the canonical abelianization basis.
  static CoefficientSpec from_abelianization(const Abelianization& ab, int level,
                                             int split_index = 0);

  int level() const { return level_; }
  int nvars() const { return nvars_; }
  int generator_count() const { return static_cast<int>(images_.size()); }
  int split_index() const { return split_index_; }
  const std::vector<Exponents>& images() const { return images_; }
  const Exponents& image(int generator) const { return images_.at(static_cast<std::size_t>(generator)); }
  const std::vector<std::string>& variable_names() const { return names_; }

  /// phi(x_j) as a monomial.
  LaurentPoly monomial(int generator) const;
  /// Exponent vector of phi(w).
  Exponents image_of(const Word& w) const;
  /// Linking-number value: sum of the coordinates of phi(x_j).
  long psi(int generator) const;
  /// Every generator is a meridian (psi == 1).
  bool meridional() const;

 private:
  int level_;
  int nvars_;
  std::vector<Exponents> images_;
  int split_index_;
  std::vector<std::string> names_;
};

struct FoxJacobian {
  PolyMatrix matrix;  // rows = relators, columns = generators
  CoefficientSpec spec;
};

/// phi-specialized Fox derivative d w / d x_j. Powers x^k are expanded in
/// closed form as geometric sums, so long syllables cost O(1) letters.
LaurentPoly fox_derivative(const Word& w, int generator, const CoefficientSpec& spec);

/// All derivatives of all relators. Throws InputError when some relator has a
/// nonzero image (the coefficient system does not factor through the group).
FoxJacobian jacobian(const GroupPresentation& p, const CoefficientSpec& spec);

/// Rows joined by newlines, entries by tabs, in the polynomial display format.
std::string format_jacobian(const FoxJacobian& j);

}  // namespace alexmod
