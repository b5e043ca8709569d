#include "wzaccel/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wzaccel/errors.hpp"

namespace wzaccel {

ProperTerm zeta3_F() {
  const std::vector<std::string> vars{"n", "k"};
  auto form = [](long n, long k, long c) {
    LinearForm f;
    if (n != 0) f.coeffs["n"] = n;
    if (k != 0) f.coeffs["k"] = k;
    f.constant = c;
    return f;
  };
  // (-1)^k n!^6 (2n-k-1)! k!^3 / (2 (n+k+1)!^2 (2n)!^3)
  return ProperTerm(vars, Rational(1, 2), {{"k", -1}}, RationalFunction::constant(vars, 1),
                    {{form(1, 0, 0), 6},
                     {form(2, -1, -1), 1},
                     {form(0, 1, 0), 3},
                     {form(1, 1, 1), -2},
                     {form(2, 0, 0), -3}});
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries{
      CatalogEntry{"zeta3-paper",
                   "(-1)^k n!^6 (2n-k-1)! k!^3 / (2 (n+k+1)!^2 (2n)!^3); G derived by Gosper",
                   zeta3_F(), std::nullopt, std::nullopt, std::string("zeta(3)")}};
  return entries;
}

CatalogEntry load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return entry_from_text(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_pair(const CatalogEntry& entry, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument(path + ": cannot write file");
  out << entry_to_json(entry).dump(2) << "\n";
}

CatalogEntry resolve_pair(const std::string& id_or_path) {
  for (const auto& e : builtin_catalog()) {
    if (e.id == id_or_path) return e;
  }
  if (std::filesystem::exists(id_or_path)) return load_pair(id_or_path);
  throw ParseError("unknown pair '" + id_or_path + "' (not a catalog id or a file)");
}

WZForm entry_form(const CatalogEntry& entry) {
  if (entry.H) throw InvalidArgument("'" + entry.id + "' is a three-variable form");
  WZForm form{entry.F, entry.G ? *entry.G : find_companion(entry.F), false};
  form.verified = verify_wz(form.F, form.G).verified;
  return form;
}

WZForm3 entry_form3(const CatalogEntry& entry) {
  if (!entry.H || !entry.G) throw InvalidArgument("'" + entry.id + "' is not a three-variable form");
  WZForm3 form{entry.F, *entry.G, *entry.H, false};
  form.verified = verify_wz3(form).verified;
  return form;
}

}  // namespace wzaccel
