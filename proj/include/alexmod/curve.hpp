#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexmod/presentation.hpp"

namespace alexmod {

/// Local data of an isolated plane curve singularity, repeated `count` times.
struct SingularityGerm {
  enum class Kind { quasi_homogeneous, explicit_data };

  Kind kind = Kind::explicit_data;
  long p = 0, q = 0;  // x^p + y^q, quasi-homogeneous germs only
  long mu = 0;        // Milnor number
  long branches = 1;
  long delta = 0;     // local genus drop
  long count = 1;

  /// x^p + y^q: mu = (p-1)(q-1), gcd(p,q) branches, delta = (mu + r - 1)/2.
  static SingularityGerm quasi_homogeneous(long p, long q, long count = 1);
  /// Throws InputError unless 2*delta == mu + branches - 1.
  static SingularityGerm from_data(long mu, long branches, long delta, long count = 1);

  friend bool operator==(const SingularityGerm&, const SingularityGerm&) = default;
};

/// An affine plane curve as seen by the invariants: degree, components,
/// singularities, and optionally the fundamental group of its complement.
struct CurveSpec {
  long degree = 1;
  std::vector<long> component_degrees;
  bool transverse = true;
  std::vector<SingularityGerm> singularities;
  bool weighted_homogeneous = false;
  std::optional<GroupPresentation> group;
  std::optional<GroupPresentation> commutator_group;
  std::optional<long> genus_override;
  /// Weighted-homogeneous germ whose link complement has the same group as
  /// this curve's complement (torus-knot groups); enables the fibered formula.
  std::optional<SingularityGerm> fibered_model;

  int component_count() const { return static_cast<int>(component_degrees.size()); }
  long singular_point_count() const;
};

/// Supplies the text behind a `group`/`commutator_group` path.
using AssetResolver = std::function<std::string(const std::string& path)>;

/// Parses the line-oriented curve format:
///
///     degree 4
///     components 4
///     transverse true
///     singularity qh 2 3 x3
///     singularity explicit mu=4 branches=2 delta=2 x1
///     weighted_homogeneous false
///     group quartic.pres
///     commutator_group quartic-commutator.pres
///     genus 0
///     fibered_model qh 2 3
///
/// Throws ParseError (with location) or InputError.
CurveSpec parse_curve(std::string_view text, const AssetResolver& resolve);

/// Resolver reading paths relative to `base_dir` from disk.
AssetResolver filesystem_resolver(std::string base_dir);

long genus_normalized(const CurveSpec& c);
/// chi of the complement, which also equals the rank of H2 with the
/// Gamma_n coefficient system. Throws NotApplicable when not transverse.
long euler_char_complement(const CurveSpec& c);
long bound_milnor(const CurveSpec& c);
long harvey_local_degree(const SingularityGerm& s, int level);
long bound_harvey(const CurveSpec& c, int level);
long bound_infinity(const CurveSpec& c);
/// Degree from the global Milnor fibration of a weighted-homogeneous curve.
long wh_degree(const CurveSpec& c, int level);

struct BoundReport {
  bool applicable = false;
  long milnor = 0;
  long harvey0 = 0;
  long harvey1 = 0;  // every level n >= 1
  long infinity = 0;
  long chi = 0;

  /// Harvey bound for a given level.
  long harvey(int level) const { return level == 0 ? harvey0 : harvey1; }
};

/// All bounds, or `applicable == false` for curves not transverse at infinity.
BoundReport bound_report(const CurveSpec& c);

}  // namespace alexmod
