#pragma once

#include <string>
#include <vector>

#include "wzaccel/serialize.hpp"

namespace wzaccel {

/// Entries compiled into the library. Only `zeta3-paper` ships; other
/// pairs are read from files.
const std::vector<CatalogEntry>& builtin_catalog();

/// The F of the shipped zeta(3) entry.
ProperTerm zeta3_F();

/// Throws ParseError (unreadable file, bad JSON, schema violation).
CatalogEntry load_pair(const std::string& path);
void save_pair(const CatalogEntry& entry, const std::string& path);

/// A catalog id, or else a path to a pair file.
CatalogEntry resolve_pair(const std::string& id_or_path);

/// The pair (F, G) of a two-variable entry, with G derived by
/// find_companion when absent. `verified` reflects verify_wz.
WZForm entry_form(const CatalogEntry& entry);

/// The three-variable form of an entry with H; `verified` reflects verify_wz3.
WZForm3 entry_form3(const CatalogEntry& entry);

}  // namespace wzaccel
