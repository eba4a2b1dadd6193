#include "alexmod/abelianization.hpp"

#include <stdexcept>

namespace alexmod {

std::vector<std::int64_t> Abelianization::image(int generator) const {
  std::vector<std::int64_t> v(free_rank);
  for (std::size_t k = 0; k < free_rank; ++k) {
    const mpz_class& x = projection(static_cast<std::size_t>(generator), k);
    if (!x.fits_slong_p()) throw std::overflow_error("abelianization image exceeds machine range");
    v[k] = x.get_si();
  }
  return v;
}

IntMatrix relation_matrix(const GroupPresentation& p) {
  const auto g = static_cast<std::size_t>(p.generator_count());
  IntMatrix m(p.relators().size(), g);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto sums = p.relators()[i].exponent_sums(p.generator_count());
    for (std::size_t j = 0; j < g; ++j) m(i, j) = static_cast<long>(sums[j]);
  }
  return m;
}

Abelianization abelianize(const GroupPresentation& p) {
  const IntMatrix rel = relation_matrix(p);
  const std::size_t g = rel.cols();
  // left * rel * right = D; a generator row vector x maps to x * right, whose
  // trailing g - rank coordinates are the free part.
  const SmithTransforms st = integer_snf_with_transforms(rel);
  const std::size_t rank = st.smith.rank;

  Abelianization ab;
  ab.free_rank = g - rank;
  ab.torsion = st.smith.torsion();

  IntMatrix free_part_t(ab.free_rank, g);  // free_rank x g
  for (std::size_t k = 0; k < ab.free_rank; ++k)
    for (std::size_t j = 0; j < g; ++j) free_part_t(k, j) = st.right(j, rank + k);
  ab.projection = hermite_rows(free_part_t).transposed();
  if (ab.projection.cols() != ab.free_rank)
    throw std::logic_error("abelianization projection lost rank");
  if (ab.free_rank == 0) ab.projection = IntMatrix(g, 0);
  return ab;
}

}  // namespace alexmod
