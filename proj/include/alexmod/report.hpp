#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "alexmod/curve.hpp"
#include "alexmod/invariants.hpp"
#include "alexmod/laurent_poly.hpp"
#include "alexmod/poly_matrix.hpp"
#include "alexmod/presentation.hpp"

namespace alexmod {

enum class Provenance { computed, formula, inferred, bound_only };

/// `computed`, `formula`, `inferred`, `bound-only`.
std::string to_string(Provenance p);

struct ReportedValue {
  Dimension value = Dimension::undefined();
  Provenance provenance = Provenance::computed;
  /// Set for bound-only values: the smallest applicable bound.
  std::optional<long> upper_bound;
  std::string note;
};

enum class Triviality { trivial, nontrivial, unknown };
std::string to_string(Triviality t);

/// One comparison delta_n <= bound.
struct Verdict {
  std::string bound;  // milnor, harvey, infinity
  int level = 0;
  long delta = 0;
  long bound_value = 0;
  bool pass = true;
};

struct InvariantReport {
  std::string id;

  bool has_group = false;
  std::size_t h1_rank = 0;
  std::vector<mpz_class> h1_torsion;
  std::optional<LaurentPoly> alexander;

  std::optional<ReportedValue> r0, r1;
  std::optional<ReportedValue> delta0, delta1;
  /// delta_n for every n >= 2 (formula or inferred values only).
  std::optional<ReportedValue> delta_higher;

  std::optional<WindowHomology> window;
  /// Whether the universal abelian module over Z vanishes.
  Triviality module0 = Triviality::unknown;

  std::optional<BoundReport> bounds;
  std::vector<Verdict> verdicts;
  std::vector<std::string> warnings;
  bool resource_cap_hit = false;
  double elapsed_ms = 0;

  bool bounds_hold() const;
};

/// Runs the whole pipeline for a curve: group invariants, the inference
/// rules, formulas, and the bound checks. Sub-computation failures become
/// warnings; only cancellation propagates.
InvariantReport infer_report(const CurveSpec& curve, const ComputeLimits& limits = {},
                             int split_index = 0);

/// Invariants of a bare group: H1, Delta (rank 1), r0/delta0, window torsion.
InvariantReport group_report(const GroupPresentation& group, const ComputeLimits& limits = {},
                             int split_index = 0);

/// delta1 of a commutator-subgroup presentation.
InvariantReport commutator_report(const GroupPresentation& commutator,
                                  const ComputeLimits& limits = {});

/// Deterministic JSON (no timing), schema `alexmod.report/1`.
nlohmann::ordered_json to_json_value(const InvariantReport& r);
std::string to_json(const InvariantReport& r);
std::string to_text(const InvariantReport& r);

}  // namespace alexmod
