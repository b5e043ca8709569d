#include "wzaccel/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

#include "wzaccel/catalog.hpp"
#include "wzaccel/errors.hpp"

namespace wzaccel {

namespace {

constexpr long kMaxDigits = 100000;

struct Args {
  std::string pair;
  std::string f;
  std::string out_path;
  std::string method = "split";
  long s = 1;
  long t = 1;
  long r = 1;
  long s_max = 1;
  long t_max = 1;
  long digits = 50;
  long nmax = 30;
  long truncation = 200;
  bool json = false;
  bool closed_form = false;
  bool lhs = false;
};

WZForm verified_pair(const CatalogEntry& entry) {
  WZForm form = entry_form(entry);
  if (!form.verified) {
    throw VerificationFailed("pair '" + entry.id + "' does not satisfy the WZ condition");
  }
  return form;
}

WZForm3 verified_form3(const CatalogEntry& entry) {
  WZForm3 form = entry_form3(entry);
  if (!form.verified) {
    throw VerificationFailed("form '" + entry.id + "' is not closed");
  }
  return form;
}

SeriesSpec series_for(const CatalogEntry& entry, const Args& a) {
  if (entry.H) {
    const WZForm3 form = verified_form3(entry);
    return a.lhs ? lhs_series(form, entry.id) : series_formula4(form, a.s, a.t, a.r, entry.id);
  }
  const WZForm pair = verified_pair(entry);
  return a.lhs ? lhs_series(pair, entry.id) : series_formula3(pair, a.s, a.t, entry.id);
}

int run_catalog_list(std::ostream& out) {
  for (const auto& e : builtin_catalog()) {
    out << std::left << std::setw(14) << e.id << e.description << "\n";
  }
  return kExitOk;
}

int run_verify(const Args& a, std::ostream& out) {
  const CatalogEntry entry = resolve_pair(a.pair);
  if (entry.H) {
    const WZCheck check = verify_wz3(entry.F, *entry.G, *entry.H);
    out << "form: " << entry.id << "\n";
    if (check) {
      out << "verified: yes\n";
      return kExitOk;
    }
    out << "verified: no\nresidue: " << check.residue.to_string() << "\n";
    return kExitFailed;
  }
  const ProperTerm G = entry.G ? *entry.G : find_companion(entry.F);
  out << "pair: " << entry.id << "\n";
  out << "F = " << entry.F.to_string() << "\n";
  out << "G = " << G.to_string() << (entry.G ? "" : "  (derived)") << "\n";
  const WZCheck check = verify_wz(entry.F, G);
  if (check) {
    out << "verified: yes\n";
    return kExitOk;
  }
  out << "verified: no\nresidue: " << check.residue.to_string() << "\n";
  return kExitFailed;
}

int run_certify(const Args& a, std::ostream& out) {
  CatalogEntry entry = resolve_pair(a.f);
  if (entry.H) throw InvalidArgument("certify works on two-variable pairs");
  entry.G = find_companion(entry.F);
  if (a.out_path.empty()) {
    out << entry_to_json(entry).dump(2) << "\n";
  } else {
    save_pair(entry, a.out_path);
    out << "G = " << entry.G->to_string() << "\nwritten: " << a.out_path << "\n";
  }
  return kExitOk;
}

int run_accelerate(const Args& a, std::ostream& out) {
  const CatalogEntry entry = resolve_pair(a.pair);
  const SeriesSpec spec = series_for(entry, a);
  if (a.closed_form) {
    const ProperTerm term = combine_to_closed_form(spec);
    if (a.json) {
      out << term_to_json(term).dump(2) << "\n";
    } else {
      out << term.to_string() << "\n";
    }
    return kExitOk;
  }
  if (a.json) {
    out << series_to_json(spec).dump(2) << "\n";
    return kExitOk;
  }
  out << "sum over m >= " << spec.startIndex << " of the summand total\n";
  for (std::size_t j = 0; j < spec.summands.size(); ++j) {
    out << "  [" << j << "] " << spec.summands[j].to_string() << "\n";
  }
  for (const auto& b : spec.boundaryTerms) {
    out << "  minus limit " << (b.kind == BoundaryKind::RowSumOfF ? "RowSumOfF" : "ColSumOfG")
        << " claimed " << to_canonical_string(b.claimedLimit) << "\n";
  }
  return kExitOk;
}

int run_eval(const Args& a, std::ostream& out) {
  const CatalogEntry entry = resolve_pair(a.pair);
  const SeriesSpec spec = series_for(entry, a);
  EvalOptions options;
  options.method = a.method == "loop" ? SumMethod::Loop : SumMethod::Split;
  const EvalReport report = eval_series(spec, a.digits, options);
  if (a.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << report_to_text(report);
  }
  return kExitOk;
}

int run_bench(const Args& a, std::ostream& out) {
  const CatalogEntry entry = resolve_pair(a.pair);
  const WZForm pair = verified_pair(entry);
  std::vector<long> ss;
  std::vector<long> ts;
  for (long s = 1; s <= a.s_max; ++s) ss.push_back(s);
  for (long t = 1; t <= a.t_max; ++t) ts.push_back(t);
  const auto grid = convergence_grid(pair, ss, ts, a.digits);
  if (a.json) {
    out << grid_to_json(grid).dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(4) << "s" << std::setw(4) << "t" << std::setw(16)
      << "digitsPerTerm" << "termsFor100Digits\n";
  for (const auto& c : grid) {
    out << std::left << std::setw(4) << c.s << std::setw(4) << c.t;
    if (c.error.empty()) {
      std::ostringstream dpt;
      dpt << std::fixed << std::setprecision(4) << *c.digitsPerTerm;
      out << std::setw(16) << dpt.str() << *c.termsFor100Digits << "\n";
    } else {
      out << "error: " << c.error << "\n";
    }
  }
  return kExitOk;
}

int run_check_boundary(const Args& a, std::ostream& out) {
  const CatalogEntry entry = resolve_pair(a.pair);
  const WZForm pair = verified_pair(entry);
  const BoundaryCheckReport report = check_boundary_vanishing(pair, a.s, a.t, a.nmax);
  const bool vanishes = report.verdict == BoundaryVerdict::VanishesNumerically;
  if (a.json) {
    out << boundary_to_json(report).dump(2) << "\n";
  } else {
    for (const auto& s : report.samples) {
      out << std::left << std::setw(6) << s.n << s.magnitude << "\n";
    }
    out << "monotoneFrom: "
        << (report.monotoneFromIndex ? std::to_string(*report.monotoneFromIndex) : "none") << "\n";
    out << "verdict: " << (vanishes ? "VanishesNumerically" : "Inconclusive") << "\n";
  }
  return vanishes ? kExitOk : kExitFailed;
}

int run_identity2(const Args& a, std::ostream& out) {
  const CatalogEntry entry = resolve_pair(a.pair);
  const WZForm pair = verified_pair(entry);
  const IdentitySpec spec = identity_formula2(pair);
  const IdentityResidual res = verify_identity_numeric(spec, a.digits, a.truncation);
  const bool ok = res.exact == 0 || res.log10Magnitude < -std::floor(a.digits / 2.0);
  if (a.json) {
    out << residual_to_json(res).dump(2) << "\n";
  } else {
    out << "residual: " << res.magnitude << "\ntruncation: " << res.truncation
        << "\nholds: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"WZ pairs, accelerated series and their high-precision evaluation", "wzaccel"};
  app.require_subcommand(1);
  Args a;
  const auto digits_range = CLI::Range(1L, kMaxDigits);

  auto* catalog = app.add_subcommand("catalog", "Shipped pairs");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog ids");

  auto* verify = app.add_subcommand("verify", "Check the WZ condition of a pair");
  verify->add_option("--pair", a.pair, "Catalog id or pair file")->required();

  auto* certify = app.add_subcommand("certify", "Derive G from F and write the pair");
  certify->add_option("--f", a.f, "Catalog id or pair file holding F")->required();
  certify->add_option("--out", a.out_path, "Output pair file (default: stdout)");

  auto add_series_options = [&a](CLI::App* sub) {
    sub->add_option("--pair", a.pair, "Catalog id or pair file")->required();
    sub->add_option("--s", a.s, "Step in n")->check(CLI::PositiveNumber);
    sub->add_option("--t", a.t, "Step in k")->check(CLI::PositiveNumber);
    sub->add_option("--r", a.r, "Step in a (three-variable forms)")->check(CLI::PositiveNumber);
    sub->add_flag("--lhs", a.lhs, "Use the common left side instead");
    sub->add_flag("--json", a.json, "JSON output");
  };
  auto* accelerate = app.add_subcommand("accelerate", "Emit the accelerated series");
  add_series_options(accelerate);
  accelerate->add_flag("--closed-form", a.closed_form, "Combine the summands into one term");

  auto* eval = app.add_subcommand("eval", "Evaluate the accelerated series");
  add_series_options(eval);
  eval->add_option("--digits", a.digits, "Significant digits")->required()->check(digits_range);
  eval->add_option("--method", a.method, "Summation method")
      ->check(CLI::IsMember({"loop", "split"}));

  auto* bench = app.add_subcommand("bench", "Convergence rates over a grid of (s, t)");
  bench->add_option("--pair", a.pair, "Catalog id or pair file")->required();
  bench->add_option("--s-max", a.s_max, "Largest s")->check(CLI::NonNegativeNumber);
  bench->add_option("--t-max", a.t_max, "Largest t")->check(CLI::NonNegativeNumber);
  bench->add_option("--digits", a.digits, "Significant digits")->check(digits_range);
  bench->add_flag("--json", a.json, "JSON output");

  auto* boundary = app.add_subcommand("check-boundary", "Numeric check that the limit term vanishes");
  boundary->add_option("--pair", a.pair, "Catalog id or pair file")->required();
  boundary->add_option("--s", a.s, "Step in n")->check(CLI::PositiveNumber);
  boundary->add_option("--t", a.t, "Step in k")->check(CLI::PositiveNumber);
  boundary->add_option("--nmax", a.nmax, "Largest n")->check(CLI::PositiveNumber);
  boundary->add_flag("--json", a.json, "JSON output");

  auto* identity2 = app.add_subcommand("identity2", "Truncated check of the boundary identity");
  identity2->add_option("--pair", a.pair, "Catalog id or pair file")->required();
  identity2->add_option("--digits", a.digits, "Digits of the residual")->check(digits_range);
  identity2->add_option("--truncation", a.truncation, "Truncation index")
      ->check(CLI::NonNegativeNumber);
  identity2->add_flag("--json", a.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (list->parsed()) return run_catalog_list(out);
    if (verify->parsed()) return run_verify(a, out);
    if (certify->parsed()) return run_certify(a, out);
    if (accelerate->parsed()) return run_accelerate(a, out);
    if (eval->parsed()) return run_eval(a, out);
    if (bench->parsed()) return run_bench(a, out);
    if (boundary->parsed()) return run_check_boundary(a, out);
    if (identity2->parsed()) return run_identity2(a, out);
  } catch (const VerificationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const NotSimilarPair& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Inapplicable& e) {
    err << "inapplicable: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const UndefinedTerm& e) {
    err << "undefined term: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const NoConvergenceDetected& e) {
    err << "no convergence: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const NoHypergeometricAntidifference& e) {
    err << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const ZeroTerm& e) {
    err << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace wzaccel
