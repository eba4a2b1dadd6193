#include "alexmod/catalog.hpp"

#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "alexmod/errors.hpp"

namespace alexmod {

namespace {

const std::map<std::string, std::string, std::less<>>& embedded() {
  static const std::map<std::string, std::string, std::less<>> files = {
#include "catalog_assets.inc"
  };
  return files;
}

const std::pair<long, long> kOkaDefaults[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};

std::string oka_id(long p, long q) { return "oka-" + std::to_string(p) + "-" + std::to_string(q); }

std::string oka_curve_text(long p, long q) {
  const std::string ps = std::to_string(p), qs = std::to_string(q);
  std::ostringstream os;
  os << "# Oka curve (x^" << ps << " + y^" << ps << ")^" << qs << " + (y^" << qs << " + z^" << qs << ")^" << ps
     << " = 0, generic line removed.\n"
     << "degree " << p * q << "\n"
     << "transverse true\n"
     << "singularity qh " << ps << ' ' << qs << " x" << p * q << "\n"
     << "group " << oka_id(p, q) << ".pres\n"
     << "fibered_model qh " << ps << ' ' << qs << "\n";
  return os.str();
}

std::string oka_group_text(long p, long q) {
  return "# (" + std::to_string(p) + "," + std::to_string(q) + ") torus knot group.\ngenerators a b\nrelator a^" +
         std::to_string(p) + " = b^" + std::to_string(q) + "\n";
}

CatalogEntry oka_entry(long p, long q) {
  const std::string cite = "torus-knot group of type (p,q)";
  CatalogEntry e;
  e.id = oka_id(p, q);
  e.kind = EntryKind::curve;
  e.asset = e.id + ".curve";
  e.summary = "Oka curve with " + std::to_string(p * q) + " singular points of type x^" + std::to_string(p) +
              " + y^" + std::to_string(q);
  e.expected = {
      {"alexander", oka_alexander(p, q).to_string(), cite + ": (t^pq - 1)(t - 1)/((t^p - 1)(t^q - 1))"},
      {"delta0", std::to_string((p - 1) * (q - 1)), cite + ": degree of Delta"},
      {"r0", "0", cite},
      {"delta1", std::to_string(p * q - p - q), "fibration formula pq - p - q"},
      {"delta_n", std::to_string(p * q - p - q), "fibration formula pq - p - q"},
  };
  return e;
}

std::vector<CatalogEntry> fixed_entries() {
  const std::string sextic_bounds = "substitution: g = 4, d = 6, six cusps";
  const std::string quartic_bounds = "substitution: g = 0, d = 4, three cusps";
  return {
      {"nonsingular-generic", EntryKind::curve, "nonsingular-generic.curve", "smooth cubic, abelian complement",
       {{"alexander", "1", "abelian group"},
        {"delta0", "0", "abelian group"},
        {"delta1", "0", "abelian group"},
        {"r0", "0", "abelian group"},
        {"milnor", "5", "substitution: 2g + d with g = 1"},
        {"infinity", "3", "d(d-2)"},
        {"chi", "4", "smooth cubic minus three points"}}},
      {"two-lines", EntryKind::curve, "two-lines.curve", "two transverse lines, complement group Z^2",
       {{"delta0", "0", "complement group Z^2"},
        {"r0", "0", "complement group Z^2"},
        {"delta1", "0", "weighted-homogeneous formula: node, two components"},
        {"infinity", "0", "d(d-2)"},
        {"chi", "0", "C* x C*"}}},
      {"quartic-3-cusps", EntryKind::curve, "quartic-3-cusps.curve", "three-cuspidal quartic",
       {{"alexander", "1", "commutator subgroup Z/3"},
        {"delta0", "0", "trivial Alexander polynomial"},
        {"delta1", "0", "trivial Alexander polynomial"},
        {"delta_n", "0", "trivial Alexander polynomial"},
        {"window_torsion", "(3)", "commutator subgroup Z/3"},
        {"milnor", "13", quartic_bounds},
        {"harvey0", "16", quartic_bounds},
        {"harvey1", "13", quartic_bounds},
        {"infinity", "8", "d(d-2)"},
        {"chi", "3", quartic_bounds}}},
      {"sextic-6-cusps-conic", EntryKind::curve, "sextic-6-cusps-conic.curve", "six cusps on a conic",
       {{"alexander", "t^2 - t + 1", "trefoil group"},
        {"delta0", "2", "trefoil group"},
        {"r0", "0", "trefoil group"},
        {"delta1", "1", "trefoil fibration"},
        {"delta_n", "1", "trefoil fibration"},
        {"milnor", "32", sextic_bounds},
        {"harvey0", "38", sextic_bounds},
        {"harvey1", "32", sextic_bounds},
        {"infinity", "24", "d(d-2)"},
        {"chi", "13", sextic_bounds}}},
      {"sextic-6-cusps-generic", EntryKind::curve, "sextic-6-cusps-generic.curve", "six cusps not on a conic",
       {{"alexander", "1", "abelian complement group"},
        {"delta0", "0", "abelian complement group"},
        {"delta1", "0", "abelian complement group"},
        {"delta_n", "0", "abelian complement group"},
        {"milnor", "32", sextic_bounds},
        {"harvey0", "38", sextic_bounds},
        {"harvey1", "32", sextic_bounds},
        {"infinity", "24", "d(d-2)"},
        {"chi", "13", sextic_bounds}}},
      {"cusp-curve", EntryKind::curve, "cusp-curve.curve", "the cusp x^3 = y^2 (not transverse at infinity)",
       {{"alexander", "t^2 - t + 1", "trefoil group"},
        {"delta0", "2", "weighted-homogeneous formula: mu = 2"},
        {"delta1", "1", "weighted-homogeneous formula: mu - 1"},
        {"delta_n", "1", "weighted-homogeneous formula: mu - 1"}}},
      {"braid-4-branch-curve", EntryKind::curve, "braid-4-branch-curve.curve",
       "branch curve of a generic projection of a quartic surface",
       {{"alexander", "t^2 - t + 1", "Alexander polynomial of B4"},
        {"delta0", "2", "degree of Delta"},
        {"r0", "0", "irreducible curve"},
        {"delta1", "1", "rank of the B4'' abelianization over Q(p,q)"}}},
      {"braid-3", EntryKind::group, "braid-3.pres", "braid group B3",
       {{"alexander", "t^2 - t + 1", "B3 is the trefoil group"},
        {"delta0", "2", "B3 is the trefoil group"},
        {"r0", "0", "B3 is the trefoil group"}}},
      {"braid-4", EntryKind::group, "braid-4.pres", "braid group B4",
       {{"alexander", "t^2 - t + 1", "Alexander polynomial of B4"},
        {"delta0", "2", "degree of Delta"},
        {"r0", "0", "H1 of rank 1"}}},
      {"braid-4-commutator", EntryKind::commutator, "braid-4-commutator.pres", "commutator subgroup of B4",
       {{"h1", "Z^2", "abelianization generated by p and q"},
        {"delta1", "1", "rank of the B4'' abelianization over Q(p,q)"}}},
      {"free-2", EntryKind::group, "free-2.pres", "free group of rank 2",
       {{"r0", "1", "free groups of rank >= 2 have positive free rank"},
        {"delta0", "infinite", "positive free rank"}}},
      {"trefoil-torus", EntryKind::group, "trefoil-torus.pres", "trefoil group as <x, y | x^2 = y^3>",
       {{"alexander", "t^2 - t + 1", "trefoil group"}, {"delta0", "2", "trefoil group"}}},
      {"abelian-1", EntryKind::group, "abelian-1.pres", "infinite cyclic group",
       {{"alexander", "1", "abelian group"},
        {"delta0", "0", "abelian group"},
        {"r0", "0", "abelian group"},
        {"window_torsion", "()", "abelian group"},
        {"module0", "trivial", "abelian group"}}},
  };
}

std::string join_chain(const std::vector<mpz_class>& v) { return to_string(v); }

}  // namespace

LaurentPoly oka_alexander(long p, long q) {
  const auto binomial = [](long k) {
    LaurentPoly f = LaurentPoly::variable(1, 0, static_cast<int>(k));
    f -= LaurentPoly::constant(1, 1);
    return f;
  };
  const LaurentPoly num = binomial(p * q) * binomial(1);
  const LaurentPoly den = binomial(p) * binomial(q);
  return divide_or_throw(num, den).normalized();
}

std::optional<std::pair<long, long>> parse_oka_id(std::string_view id) {
  if (id.substr(0, 4) != "oka-") return std::nullopt;
  id.remove_prefix(4);
  const auto dash = id.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  long p = 0, q = 0;
  const auto a = id.substr(0, dash), b = id.substr(dash + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), p);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), q);
  if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() || r2.ec != std::errc() ||
      r2.ptr != b.data() + b.size() || a.empty() || b.empty())
    return std::nullopt;
  return std::pair{p, q};
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> all = fixed_entries();
  for (const auto& [p, q] : kOkaDefaults) all.push_back(oka_entry(p, q));
  return all;
}

std::optional<CatalogEntry> find_entry(std::string_view id) {
  if (const auto pq = parse_oka_id(id)) {
    const auto [p, q] = *pq;
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
      throw InputError("Oka curve needs coprime p, q >= 2, got " + std::string(id));
    if (p * q > 64) throw InputError("Oka curve parameters too large: " + std::string(id));
    return oka_entry(p, q);
  }
  for (CatalogEntry& e : fixed_entries())
    if (e.id == id) return std::move(e);
  return std::nullopt;
}

std::optional<std::string> catalog_asset(std::string_view name) {
  if (auto it = embedded().find(name); it != embedded().end()) return it->second;
  for (const char* ext : {".curve", ".pres"}) {
    const std::string_view e(ext);
    if (name.size() <= e.size() || name.substr(name.size() - e.size()) != e) continue;
    const auto pq = parse_oka_id(name.substr(0, name.size() - e.size()));
    if (!pq || pq->first < 2 || pq->second < 2 || std::gcd(pq->first, pq->second) != 1) return std::nullopt;
    return e == ".curve" ? oka_curve_text(pq->first, pq->second) : oka_group_text(pq->first, pq->second);
  }
  return std::nullopt;
}

std::vector<std::string> catalog_asset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : embedded()) names.push_back(name);
  return names;
}

AssetResolver catalog_resolver() {
  return [](const std::string& name) {
    auto text = catalog_asset(name);
    if (!text) throw InputError("no catalog asset named '" + name + "'");
    return *text;
  };
}

std::string show_entry(const CatalogEntry& e) {
  const auto text = catalog_resolver()(e.asset);
  std::ostringstream os;
  os << "== " << e.asset << " ==\n" << text;
  if (e.kind == EntryKind::curve) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string key, path;
      ls >> key >> path;
      if (key == "group" || key == "commutator_group")
        os << "== " << path << " ==\n" << catalog_resolver()(path);
    }
  }
  return os.str();
}

InvariantReport run_entry(const CatalogEntry& e, const ComputeLimits& limits, int split_index) {
  const std::string text = catalog_resolver()(e.asset);
  InvariantReport r;
  switch (e.kind) {
    case EntryKind::curve:
      r = infer_report(parse_curve(text, catalog_resolver()), limits, split_index);
      break;
    case EntryKind::group:
      r = group_report(parse_presentation(std::string_view(text)), limits, split_index);
      break;
    case EntryKind::commutator:
      r = commutator_report(parse_presentation(std::string_view(text)), limits);
      break;
  }
  r.id = e.id;
  return r;
}

std::optional<std::string> report_field(const InvariantReport& r, std::string_view key) {
  const auto dim = [](const std::optional<ReportedValue>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    if (v->provenance == Provenance::bound_only) return "bound-only";
    return v->value.to_string();
  };
  const auto bound = [&](long BoundReport::*field) -> std::optional<std::string> {
    if (!r.bounds || !r.bounds->applicable) return std::nullopt;
    return std::to_string((*r.bounds).*field);
  };
  if (key == "alexander") return r.alexander ? std::optional(r.alexander->to_string()) : std::nullopt;
  if (key == "delta0") return dim(r.delta0);
  if (key == "delta1") return dim(r.delta1);
  if (key == "delta_n") return dim(r.delta_higher);
  if (key == "r0") return dim(r.r0);
  if (key == "r1") return dim(r.r1);
  if (key == "window_torsion") return r.window ? std::optional(join_chain(r.window->torsion)) : std::nullopt;
  if (key == "module0") return to_string(r.module0);
  if (key == "h1") {
    if (!r.has_group) return std::nullopt;
    std::string s = "Z^" + std::to_string(r.h1_rank);
    if (!r.h1_torsion.empty()) s += " + torsion " + join_chain(r.h1_torsion);
    return s;
  }
  if (key == "milnor") return bound(&BoundReport::milnor);
  if (key == "harvey0") return bound(&BoundReport::harvey0);
  if (key == "harvey1") return bound(&BoundReport::harvey1);
  if (key == "infinity") return bound(&BoundReport::infinity);
  if (key == "chi") return bound(&BoundReport::chi);
  throw InputError("unknown report key '" + std::string(key) + "'");
}

std::vector<CheckResult> check_entry(const CatalogEntry& e, const InvariantReport& r) {
  std::vector<CheckResult> out;
  for (const ExpectedValue& x : e.expected) {
    const auto actual = report_field(r, x.key);
    CheckResult c{e.id, x.key, x.value, actual.value_or("missing"), x.citation, false};
    c.pass = actual && *actual == x.value;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace alexmod
