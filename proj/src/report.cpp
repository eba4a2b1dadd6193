#include "alexmod/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "alexmod/abelianization.hpp"
#include "alexmod/errors.hpp"
#include "alexmod/integer_matrix.hpp"

namespace alexmod {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::computed:
      return "computed";
    case Provenance::formula:
      return "formula";
    case Provenance::inferred:
      return "inferred";
    case Provenance::bound_only:
      break;
  }
  return "bound-only";
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::trivial:
      return "trivial";
    case Triviality::nontrivial:
      return "nontrivial";
    case Triviality::unknown:
      break;
  }
  return "unknown";
}

bool InvariantReport::bounds_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
void guarded(InvariantReport& r, const std::string& what, F&& f) {
  try {
    f();
  } catch (const Cancelled&) {
    throw;
  } catch (const ResourceError& e) {
    r.resource_cap_hit = true;
    r.warnings.push_back(what + ": " + e.what());
  } catch (const std::exception& e) {
    r.warnings.push_back(what + ": " + e.what());
  }
}

ReportedValue value(Dimension d, Provenance p, std::string note = {}) {
  ReportedValue v;
  v.value = d;
  v.provenance = p;
  v.note = std::move(note);
  return v;
}

// Group-level invariants. `components` < 0 means "take the rank of H1".
void fill_group(InvariantReport& r, const GroupPresentation& g, int components,
                const ComputeLimits& limits, int split) {
  const Abelianization ab = abelianize(g);
  r.has_group = true;
  r.h1_rank = ab.free_rank;
  r.h1_torsion = ab.torsion;
  const int s = components < 0 ? static_cast<int>(ab.free_rank) : components;
  if (ab.free_rank != static_cast<std::size_t>(s)) {
    r.warnings.push_back("group has H1 of rank " + std::to_string(ab.free_rank) + " but the curve has " +
                         std::to_string(s) + " components; group invariants skipped");
    return;
  }
  if (s == 0) {
    r.warnings.push_back("H1 has rank 0: no level-0 coefficient system");
    return;
  }
  std::optional<CoefficientSpec> spec;
  guarded(r, "coefficients", [&] { spec = CoefficientSpec::from_abelianization(ab, 0, split); });
  if (!spec) return;
  if (!spec->meridional())
    r.warnings.push_back("not every generator maps to a meridian; the canonical H1 basis is used");

  if (s == 1) {
    guarded(r, "alexander polynomial", [&] {
      r.alexander = alexander_polynomial(g, *spec, limits);
      const mpq_class one[] = {1};
      const mpq_class at_one = r.alexander->evaluate(one);
      if (r.alexander->is_zero() || abs(at_one) != 1)
        r.warnings.push_back("Delta(1) = " + at_one.get_str() + ", not +-1");
    });
  }
  guarded(r, "delta0", [&] {
    const ModuleRankResult m = delta_zero(g, s, split, limits);
    r.r0 = value(Dimension::finite(m.free_rank), Provenance::computed);
    if (m.torsion_dimension) r.delta0 = value(*m.torsion_dimension, Provenance::computed);
  });
  if (s == 1) {
    guarded(r, "window homology", [&] {
      r.window = stable_window_homology(g, *spec, limits);
      if (!r.window->stabilized) {
        r.resource_cap_hit = true;
        r.warnings.push_back("window homology inconclusive: no agreement up to radius " +
                             std::to_string(r.window->radius));
      }
    });
  }

  const bool free_part = r.r0 && r.r0->value.is_finite() && r.r0->value.value() > 0;
  const bool positive_degree = r.delta0 && r.delta0->value.is_finite() && r.delta0->value.value() > 0;
  const bool window_torsion = r.window && !r.window->torsion.empty();
  const bool delta_trivial = r.alexander && *r.alexander == LaurentPoly::constant(1, 1);
  if (free_part || positive_degree || window_torsion)
    r.module0 = Triviality::nontrivial;
  else if (delta_trivial && r.window && r.window->stabilized)
    r.module0 = Triviality::trivial;
}

void set_or_check(InvariantReport& r, std::optional<ReportedValue>& slot, const std::string& name,
                  long v, Provenance p, const std::string& note) {
  if (!slot) {
    slot = value(Dimension::finite(v), p, note);
    return;
  }
  if (slot->value != Dimension::finite(v))
    r.warnings.push_back(name + ": " + note + " gives " + std::to_string(v) + " but " +
                         to_string(slot->provenance) + " value is " + slot->value.to_string());
}

void bound_only(const InvariantReport& r, std::optional<ReportedValue>& slot, int level) {
  if (slot) return;
  ReportedValue v;
  v.provenance = Provenance::bound_only;
  if (r.bounds && r.bounds->applicable)
    v.upper_bound = std::min({r.bounds->milnor, r.bounds->harvey(level), r.bounds->infinity});
  slot = v;
}

void add_verdicts(InvariantReport& r) {
  if (!r.bounds || !r.bounds->applicable) return;
  const BoundReport& b = *r.bounds;
  const std::pair<int, const std::optional<ReportedValue>*> levels[] = {
      {0, &r.delta0}, {1, &r.delta1}, {2, &r.delta_higher}};
  for (const auto& [level, slot] : levels) {
    if (!*slot || !(*slot)->value.is_finite()) continue;
    const long d = (*slot)->value.value();
    for (const auto& [name, bound] : {std::pair<std::string, long>{"milnor", b.milnor},
                                      {"harvey", b.harvey(level)},
                                      {"infinity", b.infinity}})
      r.verdicts.push_back({name, level, d, bound, d <= bound});
  }
}

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

InvariantReport infer_report(const CurveSpec& c, const ComputeLimits& limits, int split_index) {
  const auto t0 = Clock::now();
  InvariantReport r;
  if (c.transverse)
    guarded(r, "bounds", [&] { r.bounds = bound_report(c); });
  else
    r.warnings.push_back("bounds not applicable: curve is not transverse to the line at infinity");

  if (c.group) guarded(r, "group", [&] { fill_group(r, *c.group, c.component_count(), limits, split_index); });

  const bool irreducible = c.component_count() == 1;
  if (irreducible && r.alexander && *r.alexander == LaurentPoly::constant(1, 1)) {
    const std::string note = "trivial Alexander polynomial";
    set_or_check(r, r.delta0, "delta0", 0, Provenance::inferred, note);
    set_or_check(r, r.delta1, "delta1", 0, Provenance::inferred, note);
    set_or_check(r, r.delta_higher, "delta_n", 0, Provenance::inferred, note);
  } else if (c.weighted_homogeneous) {
    guarded(r, "weighted-homogeneous formula", [&] {
      const std::string note = "weighted-homogeneous fibration";
      const long d0 = wh_degree(c, 0), d1 = wh_degree(c, 1);
      set_or_check(r, r.delta0, "delta0", d0, Provenance::formula, note);
      set_or_check(r, r.delta1, "delta1", d1, Provenance::formula, note);
      set_or_check(r, r.delta_higher, "delta_n", d1, Provenance::formula, note);
    });
  } else if (c.fibered_model) {
    const std::string note = "fibered model qh " + std::to_string(c.fibered_model->p) + " " +
                             std::to_string(c.fibered_model->q);
    set_or_check(r, r.delta0, "delta0", harvey_local_degree(*c.fibered_model, 0), Provenance::formula, note);
    const long d1 = harvey_local_degree(*c.fibered_model, 1);
    set_or_check(r, r.delta1, "delta1", d1, Provenance::formula, note);
    set_or_check(r, r.delta_higher, "delta_n", d1, Provenance::formula, note);
  }

  if (c.commutator_group) {
    guarded(r, "delta1", [&] {
      const ModuleRankResult m = delta_one(*c.commutator_group, limits);
      const Dimension d = m.torsion_dimension.value_or(Dimension::undefined());
      if (r.delta1 && r.delta1->value != d)
        r.warnings.push_back("delta1: commutator presentation gives " + d.to_string() + " but " +
                             to_string(r.delta1->provenance) + " value is " + r.delta1->value.to_string());
      r.delta1 = value(d, Provenance::computed, "commutator presentation");
      if (d.is_finite()) r.r1 = value(Dimension::finite(m.free_rank), Provenance::computed);
    });
  }

  bound_only(r, r.delta0, 0);
  bound_only(r, r.delta1, 1);
  bound_only(r, r.delta_higher, 2);
  if (!r.r0 && r.delta0->value.is_finite()) r.r0 = value(Dimension::finite(0), r.delta0->provenance);
  if (!r.r1 && r.delta1->value.is_finite()) r.r1 = value(Dimension::finite(0), r.delta1->provenance);

  add_verdicts(r);
  r.elapsed_ms = since(t0);
  return r;
}

InvariantReport group_report(const GroupPresentation& group, const ComputeLimits& limits,
                             int split_index) {
  const auto t0 = Clock::now();
  InvariantReport r;
  guarded(r, "group", [&] { fill_group(r, group, -1, limits, split_index); });
  r.elapsed_ms = since(t0);
  return r;
}

InvariantReport commutator_report(const GroupPresentation& commutator, const ComputeLimits& limits) {
  const auto t0 = Clock::now();
  InvariantReport r;
  guarded(r, "delta1", [&] {
    const Abelianization ab = abelianize(commutator);
    r.has_group = true;
    r.h1_rank = ab.free_rank;
    r.h1_torsion = ab.torsion;
    const ModuleRankResult m = delta_one(commutator, limits);
    const Dimension d = m.torsion_dimension.value_or(Dimension::undefined());
    r.delta1 = value(d, Provenance::computed, "commutator presentation");
    if (d.is_finite()) r.r1 = value(Dimension::finite(m.free_rank), Provenance::computed);
  });
  r.elapsed_ms = since(t0);
  return r;
}

namespace {

nlohmann::ordered_json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::ordered_json dimension_json(const std::optional<ReportedValue>& v) {
  if (!v || v->provenance == Provenance::bound_only) return nullptr;
  if (v->value.is_finite()) return v->value.value();
  return v->value.to_string();
}

}  // namespace

nlohmann::ordered_json to_json_value(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "alexmod.report/1";
  j["id"] = r.id;
  if (r.has_group) {
    nlohmann::ordered_json tors = nlohmann::ordered_json::array();
    for (const auto& t : r.h1_torsion) tors.push_back(integer_json(t));
    j["h1"] = {{"free_rank", r.h1_rank}, {"torsion", tors}};
  } else {
    j["h1"] = nullptr;
  }
  j["alexander_polynomial"] = r.alexander ? nlohmann::ordered_json(r.alexander->to_string()) : nullptr;
  j["delta0"] = dimension_json(r.delta0);
  j["delta1"] = dimension_json(r.delta1);
  j["delta_n"] = dimension_json(r.delta_higher);
  j["r0"] = dimension_json(r.r0);
  j["r1"] = dimension_json(r.r1);

  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  nlohmann::ordered_json upper = nlohmann::ordered_json::object();
  for (const auto& [name, slot] : {std::pair<const char*, const std::optional<ReportedValue>*>{"delta0", &r.delta0},
                                   {"delta1", &r.delta1},
                                   {"delta_n", &r.delta_higher},
                                   {"r0", &r.r0},
                                   {"r1", &r.r1}}) {
    if (!*slot) continue;
    prov[name] = to_string((*slot)->provenance);
    if ((*slot)->upper_bound) upper[name] = *(*slot)->upper_bound;
  }
  j["provenance"] = prov;
  j["upper_bounds"] = upper;

  if (r.window) {
    nlohmann::ordered_json tors = nlohmann::ordered_json::array();
    for (const auto& t : r.window->torsion) tors.push_back(integer_json(t));
    j["window_torsion"] = tors;
    j["stabilized"] = r.window->stabilized;
    j["window_radius"] = r.window->radius;
  } else {
    j["window_torsion"] = nullptr;
    j["stabilized"] = nullptr;
    j["window_radius"] = nullptr;
  }
  j["module0"] = to_string(r.module0);

  if (r.bounds) {
    const BoundReport& b = *r.bounds;
    j["bounds"] = {{"applicable", b.applicable}, {"milnor", b.milnor}, {"harvey0", b.harvey0},
                   {"harvey1", b.harvey1},       {"infinity", b.infinity}, {"chi", b.chi}};
  } else {
    j["bounds"] = {{"applicable", false}};
  }
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const Verdict& v : r.verdicts)
    verdicts.push_back({{"bound", v.bound}, {"level", v.level}, {"delta", v.delta},
                        {"bound_value", v.bound_value}, {"pass", v.pass}});
  j["verdicts"] = verdicts;
  j["warnings"] = r.warnings;
  j["resource_cap_hit"] = r.resource_cap_hit;
  return j;
}

std::string to_json(const InvariantReport& r) { return to_json_value(r).dump(2); }

namespace {

std::string chain(const std::vector<mpz_class>& v) {
  return v.empty() ? std::string("none") : to_string(v);
}

void line(std::ostream& os, const std::string& label, const std::optional<ReportedValue>& v) {
  if (!v) return;
  os << label << ": ";
  if (v->provenance == Provenance::bound_only) {
    os << "unknown";
    if (v->upper_bound) os << " (at most " << *v->upper_bound << ")";
  } else {
    os << v->value.to_string();
  }
  os << " [" << to_string(v->provenance);
  if (!v->note.empty()) os << ": " << v->note;
  os << "]\n";
}

}  // namespace

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  if (!r.id.empty()) os << "id: " << r.id << '\n';
  if (r.has_group) os << "H1: Z^" << r.h1_rank << ", torsion " << chain(r.h1_torsion) << '\n';
  if (r.alexander) os << "Alexander polynomial: " << r.alexander->to_string() << '\n';
  line(os, "r0", r.r0);
  line(os, "delta0", r.delta0);
  line(os, "r1", r.r1);
  line(os, "delta1", r.delta1);
  line(os, "delta_n (n>=2)", r.delta_higher);
  if (r.window)
    os << "window torsion: " << chain(r.window->torsion) << " at radius " << r.window->radius
       << (r.window->stabilized ? ", stabilized" : ", NOT stabilized") << '\n';
  if (r.has_group) os << "universal abelian module: " << to_string(r.module0) << '\n';
  if (r.bounds && r.bounds->applicable) {
    const BoundReport& b = *r.bounds;
    os << "bounds: milnor " << b.milnor << ", harvey(0) " << b.harvey0 << ", harvey(n>0) " << b.harvey1
       << ", infinity " << b.infinity << ", chi " << b.chi << '\n';
  }
  for (const Verdict& v : r.verdicts)
    os << "  delta" << (v.level == 2 ? std::string("_n") : std::to_string(v.level)) << " = " << v.delta
       << " <= " << v.bound << ' ' << v.bound_value << ": " << (v.pass ? "pass" : "FAIL") << '\n';
  for (const std::string& w : r.warnings) os << "warning: " << w << '\n';
  os << "elapsed: " << static_cast<long>(r.elapsed_ms) << " ms\n";
  return os.str();
}

}  // namespace alexmod
