#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "alexmod/integer_matrix.hpp"
#include "alexmod/presentation.hpp"

namespace alexmod {

/// H1 of a presented group: Z^free_rank plus the torsion chain.
///
/// `projection` has one row per generator and `free_rank` columns; row j is
/// the class of generator j in H1 modulo torsion. The basis of Z^free_rank is
/// canonical: the transposed projection is in row Hermite form, so meridian
/// generators land on standard basis vectors.
struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
  IntMatrix projection;

  /// Image of generator j as a small-integer exponent vector.
  std::vector<std::int64_t> image(int generator) const;
};

/// Relator exponent-sum matrix: rows = relators, columns = generators.
IntMatrix relation_matrix(const GroupPresentation& p);

Abelianization abelianize(const GroupPresentation& p);

}  // namespace alexmod
