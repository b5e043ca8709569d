#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wzaccel/eval.hpp"

namespace wzaccel {

using Json = nlohmann::ordered_json;

/// A pair file: F with optional G (derived when absent) and optional H for
/// three-variable forms.
struct CatalogEntry {
  std::string id;
  std::string description;
  ProperTerm F;
  std::optional<ProperTerm> G;
  std::optional<ProperTerm> H;
  std::optional<std::string> claimedValue;
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

Json term_to_json(const ProperTerm& term);
/// `path` prefixes field names in ParseError messages. Without a
/// "variables" field the term uses `default_variables`.
ProperTerm term_from_json(const Json& j, const std::string& path,
                          const std::vector<std::string>& default_variables);

Json entry_to_json(const CatalogEntry& entry);
CatalogEntry entry_from_json(const Json& j);
/// Parses JSON text; syntax errors report line and column.
CatalogEntry entry_from_text(const std::string& text);

Json series_to_json(const SeriesSpec& spec);
Json report_to_json(const EvalReport& report);
Json boundary_to_json(const BoundaryCheckReport& report);
Json residual_to_json(const IdentityResidual& residual);
Json grid_to_json(const std::vector<GridCell>& grid);

/// Aligned "key  value" lines.
std::string report_to_text(const EvalReport& report);

}  // namespace wzaccel
