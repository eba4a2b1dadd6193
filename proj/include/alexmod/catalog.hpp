#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alexmod/curve.hpp"
#include "alexmod/poly_matrix.hpp"
#include "alexmod/report.hpp"

namespace alexmod {

enum class EntryKind { curve, group, commutator };

struct ExpectedValue {
  std::string key;  // see report_field
  std::string value;
  std::string citation;
};

struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::curve;
  std::string asset;  // .curve or .pres file name
  std::string summary;
  std::vector<ExpectedValue> expected;
};

/// Fixed entries followed by the default Oka instances, in catalog order.
std::vector<CatalogEntry> catalog_entries();

/// Looks up an id; `oka-<p>-<q>` is generated for any coprime p, q >= 2.
/// Throws InputError for an Oka id with invalid parameters.
std::optional<CatalogEntry> find_entry(std::string_view id);

/// Parses `oka-<p>-<q>`; nullopt when the id has another shape.
std::optional<std::pair<long, long>> parse_oka_id(std::string_view id);

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
LaurentPoly oka_alexander(long p, long q);

/// Embedded file text (including generated Oka files).
std::optional<std::string> catalog_asset(std::string_view name);
std::vector<std::string> catalog_asset_names();
AssetResolver catalog_resolver();

/// The entry's files verbatim, each under a `== name ==` header.
std::string show_entry(const CatalogEntry& e);

InvariantReport run_entry(const CatalogEntry& e, const ComputeLimits& limits = {}, int split_index = 0);

/// Report value under a catalog key: alexander, delta0, delta1, delta_n, r0,
/// r1, window_torsion, module0, h1, milnor, harvey0, harvey1, infinity, chi.
/// Values known only through bounds read as `bound-only`.
std::optional<std::string> report_field(const InvariantReport& r, std::string_view key);

struct CheckResult {
  std::string id;
  std::string key;
  std::string expected;
  std::string actual;
  std::string citation;
  bool pass = false;
};

std::vector<CheckResult> check_entry(const CatalogEntry& e, const InvariantReport& r);

}  // namespace alexmod
