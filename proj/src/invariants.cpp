#include "alexmod/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "alexmod/abelianization.hpp"
#include "alexmod/errors.hpp"
#include "alexmod/integer_matrix.hpp"

namespace alexmod {

std::string Dimension::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return std::to_string(value_);
    case Kind::infinite:
      return "infinite";
    case Kind::undefined:
      break;
  }
  return "undefined";
}

LaurentPoly alexander_polynomial(const GroupPresentation& p, const CoefficientSpec& spec,
                                 const ComputeLimits& limits) {
  if (spec.nvars() != 1) throw InputError("Alexander polynomial needs a univariate coefficient system");
  const FoxJacobian j = jacobian(p, spec);
  const auto g = static_cast<std::size_t>(p.generator_count());
  if (g == 0) return LaurentPoly::constant(1, 1);
  if (j.matrix.rows() < g - 1) return LaurentPoly(1);
  LaurentPoly d = minors_gcd(j.matrix, g - 1, limits);
  if (d.is_zero()) return d;
  d = divide_or_throw(d, LaurentPoly::constant(1, d.content()));
  return d.normalized();
}

LaurentPoly alexander_polynomial(const GroupPresentation& p, const ComputeLimits& limits) {
  const Abelianization ab = abelianize(p);
  if (ab.free_rank != 1)
    throw InputError("Alexander polynomial in one variable needs H1 of rank 1, got rank " +
                     std::to_string(ab.free_rank));
  return alexander_polynomial(p, CoefficientSpec::from_abelianization(ab, 0), limits);
}

ModuleRankResult crowell_ranks(const FoxJacobian& j, const ComputeLimits& limits) {
  ModuleRankResult r;
  r.level = j.spec.level();
  r.generator_count = j.matrix.cols();
  r.jacobian_rank = rank_fraction_free(j.matrix, limits);
  r.free_rank = static_cast<long>(r.generator_count) - 1 - static_cast<long>(r.jacobian_rank);
  if (r.free_rank > 0) r.torsion_dimension = Dimension::infinite();
  return r;
}

ModuleRankResult delta_zero(const GroupPresentation& p, int components, int split_index,
                            const ComputeLimits& limits) {
  const Abelianization ab = abelianize(p);
  if (components < 1) throw InputError("component count must be positive");
  if (ab.free_rank != static_cast<std::size_t>(components))
    throw InputError("H1 has rank " + std::to_string(ab.free_rank) + " but " +
                     std::to_string(components) + " components were declared");
  const CoefficientSpec spec = CoefficientSpec::from_abelianization(ab, 0, split_index);
  long psi_gcd = 0;
  for (int k = 0; k < spec.generator_count(); ++k) psi_gcd = std::gcd(psi_gcd, spec.psi(k));
  if (psi_gcd != 1) throw InputError("linking-number map is not onto Z");

  const FoxJacobian j = jacobian(p, spec);
  ModuleRankResult r = crowell_ranks(j, limits);
  if (r.free_rank > 0) return r;

  // New variables (u_1..u_{s-1}, t): t_i -> u_i t for i != split, t_split -> t.
  const int s = components;
  std::vector<Exponents> images;
  for (int i = 0; i < s; ++i) {
    Exponents e(static_cast<std::size_t>(s), 0);
    if (i != split_index) e[static_cast<std::size_t>(i < split_index ? i : i - 1)] = 1;
    e[static_cast<std::size_t>(s - 1)] = 1;
    images.push_back(std::move(e));
  }
  const PolyMatrix split = j.matrix.substitute(images, s);
  const LaurentPoly order = minors_gcd(split, r.jacobian_rank, limits);
  r.torsion_dimension = Dimension::finite(span_degree(order, s - 1));
  return r;
}

ModuleRankResult delta_one(const GroupPresentation& commutator, const ComputeLimits& limits) {
  const Abelianization ab = abelianize(commutator);
  ModuleRankResult r;
  r.level = 1;
  r.generator_count = static_cast<std::size_t>(commutator.generator_count());
  if (ab.free_rank == 0) {
    r.torsion_dimension = Dimension::undefined();
    return r;
  }
  const FoxJacobian j = jacobian(commutator, CoefficientSpec::from_abelianization(ab, 1));
  r.jacobian_rank = rank_fraction_free(j.matrix, limits);
  r.free_rank = 0;
  r.torsion_dimension =
      Dimension::finite(static_cast<long>(r.generator_count) - 1 - static_cast<long>(r.jacobian_rank));
  return r;
}

namespace {

std::vector<mpz_class> window_torsion(const PolyMatrix& jac, int radius, const ComputeLimits& limits) {
  const std::size_t g = jac.cols();
  // Each row may be moved by a unit; shift rows to start at exponent 0.
  std::vector<std::vector<LaurentPoly>> rows;
  long span = 0;
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    std::vector<LaurentPoly> row;
    int lo = 0, hi = 0;
    bool any = false;
    for (std::size_t k = 0; k < g; ++k) {
      const LaurentPoly& f = jac(i, k);
      if (f.is_zero()) continue;
      lo = any ? std::min(lo, f.min_exponents()[0]) : f.min_exponents()[0];
      hi = any ? std::max(hi, f.max_exponents()[0]) : f.max_exponents()[0];
      any = true;
    }
    for (std::size_t k = 0; k < g; ++k) row.push_back(jac(i, k).shifted({-lo}));
    if (any) span = std::max<long>(span, hi - lo);
    rows.push_back(std::move(row));
  }
  const long reach = radius + span;
  const auto positions = static_cast<std::size_t>(2 * reach + 1);
  IntMatrix m(rows.size() * static_cast<std::size_t>(2 * radius + 1), positions * g);
  std::size_t r = 0;
  for (const auto& row : rows)
    for (long j = -radius; j <= radius; ++j, ++r)
      for (std::size_t k = 0; k < g; ++k)
        for (const auto& [e, c] : row[k].terms()) {
          const auto pos = static_cast<std::size_t>(j + e[0] + reach);
          m(r, pos * g + k) += c;
        }
  limits.poll();
  return integer_snf(m).torsion();
}

PolyMatrix univariate_jacobian(const GroupPresentation& p, const CoefficientSpec& spec) {
  if (spec.nvars() != 1) throw InputError("window homology needs a univariate coefficient system");
  return jacobian(p, spec).matrix;
}

}  // namespace

WindowHomology window_homology(const GroupPresentation& p, const CoefficientSpec& spec, int radius,
                               const ComputeLimits& limits) {
  if (radius < 1) throw InputError("window radius must be positive");
  const PolyMatrix jac = univariate_jacobian(p, spec);
  WindowHomology w;
  w.radius = radius;
  w.torsion = window_torsion(jac, radius, limits);
  w.stabilized = w.torsion == window_torsion(jac, radius + 1, limits);
  return w;
}

WindowHomology stable_window_homology(const GroupPresentation& p, const CoefficientSpec& spec,
                                      const ComputeLimits& limits) {
  const PolyMatrix jac = univariate_jacobian(p, spec);
  const int cap = std::max(1, limits.window_cap);
  std::vector<mpz_class> prev = window_torsion(jac, 1, limits);
  for (int w = 1; w < cap; ++w) {
    std::vector<mpz_class> next = window_torsion(jac, w + 1, limits);
    if (next == prev) return {w, std::move(prev), true};
    prev = std::move(next);
  }
  return {cap, std::move(prev), false};
}

}  // namespace alexmod
