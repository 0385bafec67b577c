#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyalg/gfseries.hpp"
#include "polyalg/io.hpp"
#include "polyalg/permstat.hpp"
#include "polyalg/spectra.hpp"
#include "polyalg/suites.hpp"

using namespace polyalg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::string suite;
  std::string type;
  std::optional<int> d;
  std::optional<std::string> flat;
  std::optional<int> order;
  std::string input;
  Format format = Format::Json;
  bool quick = false;
  bool debug_checks = false;
  unsigned seed = 2024;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void log(const std::string& msg) { std::cerr << "polyalg: " << msg << '\n'; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------------------
// eta

// Enumeration limits of the arrangement tables.
int eta_max_d(ArrangementType t) {
  switch (t) {
    case ArrangementType::BraidA: return 7;
    case ArrangementType::TypeB: return 5;
    case ArrangementType::Coordinate: return 8;
  }
  return 0;
}

json table_json(const EtaTable& t) {
  const auto& arr = *t.arrangement();
  json rows = json::array();
  for (int x = 0; x < static_cast<int>(arr.num_flats()); ++x) {
    json vals = json::array();
    for (int r = 0; r <= t.max_grade(); ++r) vals.push_back(t.value(x, r));
    rows.push_back({{"flat", arr.format_flat(x)}, {"eta", vals}});
  }
  return {{"arrangement", std::string(1, type_letter(arr.type()))}, {"d", arr.d()}, {"method", method_name(t.method())},
          {"flats", rows}};
}

int run_eta(const RunConfig& cfg) {
  const ArrangementType type = parse_arrangement_type(cfg.type);
  const int d = *cfg.d;
  if (d < 1 || d > eta_max_d(type))
    throw InputError("eta: d must lie in 1.." + std::to_string(eta_max_d(type)) + " for type " + cfg.type);
  auto arr = Arrangement::get({type, d});
  std::optional<int> flat;
  if (cfg.flat) flat = arr->flat_index(arr->parse_flat(*cfg.flat));

  std::vector<EtaTable> tables{eta_mobius(arr), eta_permutations(arr)};
  if (type != ArrangementType::TypeB && d <= 4) tables.push_back(eta_idempotent_rank(arr));
  bool agree = true;
  std::string diff;
  for (std::size_t k = 1; k < tables.size(); ++k)
    if (!tables[0].same_values(tables[k])) {
      agree = false;
      diff = std::string(method_name(tables[k].method())) + ": " + tables[0].first_difference(tables[k]);
    }
  if (!agree) log("methods disagree: " + diff);

  switch (cfg.format) {
    case Format::Csv: std::cout << eta_to_csv(tables, flat); break;
    case Format::Text:
      for (int x = 0; x < static_cast<int>(arr->num_flats()); ++x) {
        if (flat && x != *flat) continue;
        std::cout << arr->format_flat(x) << ':';
        for (int r = 0; r <= d; ++r) std::cout << ' ' << tables[0].value(x, r);
        std::cout << '\n';
      }
      std::cout << (agree ? "methods agree\n" : "methods disagree\n");
      break;
    case Format::Json: {
      json methods = json::array();
      for (const auto& t : tables) methods.push_back(method_name(t.method()));
      json out{{"arrangement", std::string(1, type_letter(type))}, {"d", d}};
      if (cfg.flat) out["flat"] = arr->format_flat(*flat);
      out["methods"] = methods;
      out["agree"] = agree;
      out["rows"] = json::parse(eta_to_json(tables, flat));
      emit(out);
      break;
    }
  }
  return agree ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteRun {
  std::vector<Report> reports;
  json tables = json::array();
};

// Ranks: [lo, max] accepted by --d; [lo, default_hi] or [lo, quick_hi] run
// otherwise.
struct SuiteSpec {
  int lo, max, default_hi, quick_hi;
  std::function<void(int d, const RunConfig&, SuiteRun&)> run;
};

std::vector<int> dims_for(const std::string& name, const SuiteSpec& s, const RunConfig& cfg) {
  const int hi = cfg.quick ? s.quick_hi : s.default_hi;
  if (cfg.d) {
    if (*cfg.d < s.lo || *cfg.d > s.max)
      throw InputError(name + ": d must lie in " + std::to_string(s.lo) + ".." + std::to_string(s.max));
    return {*cfg.d};
  }
  std::vector<int> out;
  for (int d = s.lo; d <= hi; ++d) out.push_back(d);
  return out;
}

void run_eta_suite(const ArrangementPtr& arr, SuiteRun& run) {
  auto check = verify_eta(arr, true);
  run.reports.push_back(check.report);
  run.tables.push_back(table_json(check.tables.front()));
}

// Brenti suite over one type, or both when --type is absent.
void run_brenti(int d, const RunConfig& cfg, SuiteRun& run) {
  const bool want_a = cfg.type.empty() || parse_arrangement_type(cfg.type) == ArrangementType::BraidA;
  const bool want_b = cfg.type.empty() || parse_arrangement_type(cfg.type) == ArrangementType::TypeB;
  if (!cfg.type.empty() && !want_a && !want_b) throw InputError("brenti: --type must be A or B");
  const int b_hi = cfg.d ? 5 : cfg.quick ? 3 : 4;
  if (want_a) run.reports.push_back(verify_brenti(ArrangementType::BraidA, d));
  if (want_b && d <= b_hi) run.reports.push_back(verify_brenti(ArrangementType::TypeB, d));
}

const std::map<std::string, SuiteSpec>& suites() {
  static const std::map<std::string, SuiteSpec> table{
      {"thm-a", {1, 6, 5, 4, [](int d, const RunConfig&, SuiteRun& r) { run_eta_suite(Arrangement::braid(d), r); }}},
      {"thm-b", {1, 5, 4, 3, [](int d, const RunConfig&, SuiteRun& r) { run_eta_suite(Arrangement::type_b(d), r); }}},
      {"brenti", {1, 6, 5, 4, run_brenti}},
      {"idempotents", {1, 4, 4, 4, [](int d, const RunConfig&, SuiteRun& r) { r.reports.push_back(verify_idempotents(d)); }}},
      {"conjecture", {1, 4, 4, 4, [](int d, const RunConfig&, SuiteRun& r) { r.reports.push_back(verify_conjecture(d)); }}},
      {"b-gens",
       {1, 4, 4, 3,
        [](int d, const RunConfig& c, SuiteRun& r) { r.reports.push_back(verify_b_generators(d, c.seed, 10)); }}},
      {"hopf", {1, 4, 4, 3, [](int d, const RunConfig&, SuiteRun& r) { r.reports.push_back(verify_hopf(d)); }}},
      {"cube",
       {1, 5, 5, 4,
        [](int d, const RunConfig&, SuiteRun& r) {
          r.reports.push_back(verify_cube(d));
          r.tables.push_back(table_json(eta_mobius(Arrangement::coordinate(d))));
        }}},
      {"phi",
       {2, 3, 3, 3,
        [](int d, const RunConfig& c, SuiteRun& r) {
          for (auto arr : {Arrangement::braid(d), Arrangement::type_b(d), Arrangement::coordinate(d)})
            r.reports.push_back(verify_phi_soundness(arr, 25, c.seed));
        }}},
      {"module",
       {2, 3, 3, 3,
        [](int d, const RunConfig& c, SuiteRun& r) {
          r.reports.push_back(verify_module_axioms(Arrangement::braid(d), 20, c.seed));
          if (d == 2) r.reports.push_back(verify_module_axioms(Arrangement::type_b(d), 20, c.seed));
        }}},
      {"oracles",
       {1, 6, 6, 4,
        [](int d, const RunConfig&, SuiteRun& r) {
          if (d <= 3)
            for (auto arr : {Arrangement::braid(d), Arrangement::type_b(d), Arrangement::coordinate(d)})
              r.reports.push_back(verify_arrangement_oracles(arr));
          r.reports.push_back(verify_forest_bijection(d));
        }}},
  };
  return table;
}

// Suites run by `verify all`; the cross-checks join under --debug-checks.
const std::vector<std::string> kMainSuites{"brenti", "thm-a", "thm-b", "gf",  "idempotents",
                                           "conjecture", "b-gens", "hopf", "cube"};
const std::vector<std::string> kDebugSuites{"phi", "module", "oracles"};

json run_one_suite(const std::string& name, const RunConfig& cfg, bool& pass) {
  SuiteRun run;
  const auto t0 = std::chrono::steady_clock::now();
  if (name == "gf") {
    const int oa = cfg.order.value_or(cfg.quick ? 6 : 8);
    const int ob = cfg.order.value_or(6);
    if (oa < 1 || oa > 10 || ob < 1 || ob > 8) throw InputError("gf: order must lie in 1..10 (A) and 1..8 (B)");
    run.reports.push_back(verify_identities(oa, ob));
  } else {
    const auto it = suites().find(name);
    if (it == suites().end()) throw InputError("unknown suite: " + name);
    for (int d : dims_for(name, it->second, cfg)) it->second.run(d, cfg, run);
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& r : run.reports) {
    ok = ok && r.pass();
    reports.push_back(json::parse(r.to_json()));
  }
  log("verify " + name + ": " + (ok ? "pass" : "FAIL") + " (" + fmt_seconds(seconds_since(t0)) + ")");
  pass = pass && ok;
  json out{{"suite", name}, {"pass", ok}, {"reports", reports}};
  if (!run.tables.empty()) out["tables"] = run.tables;
  return out;
}

void print_text(const json& suite_out, bool csv) {
  for (const auto& rep : suite_out["reports"])
    for (const auto& c : rep["checks"]) {
      const std::string name = rep["suite"].get<std::string>() + "/" + c["name"].get<std::string>();
      const std::string detail = c.contains("detail") ? c["detail"].get<std::string>() : "";
      const bool ok = c["pass"].get<bool>();
      if (csv)
        std::cout << csv_quote(name) << ',' << (ok ? "pass" : "fail") << ',' << csv_quote(detail) << '\n';
      else
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << (detail.empty() ? "" : "  " + detail) << '\n';
    }
}

int run_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = kMainSuites;
    if (cfg.debug_checks) names.insert(names.end(), kDebugSuites.begin(), kDebugSuites.end());
  } else {
    names = {cfg.suite};
  }
  if (cfg.suite == "all" && cfg.d) throw InputError("verify all takes no --d");
  bool pass = true;
  json results = json::array();
  for (const auto& n : names) results.push_back(run_one_suite(n, cfg, pass));

  if (cfg.format == Format::Json) {
    emit(names.size() == 1 ? results[0] : json{{"suite", "all"}, {"pass", pass}, {"suites", results}});
  } else {
    if (cfg.format == Format::Csv) std::cout << "check,result,detail\n";
    for (const auto& r : results) print_text(r, cfg.format == Format::Csv);
    if (cfg.format == Format::Text) std::cout << (pass ? "all checks pass\n" : "some checks FAIL\n");
  }
  return pass ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// decompose

int run_decompose(const RunConfig& cfg) {
  const ArrangementType type = parse_arrangement_type(cfg.type);
  if (type == ArrangementType::Coordinate) throw InputError("decompose: --type must be A or B");
  const VPolytope p = polytope_from_json(read_text_file(cfg.input));
  if (p.arrangement()->type() != type)
    throw InputError(std::string("decompose: input polytope is of type ") + type_letter(p.arrangement()->type()));
  if (cfg.debug_checks && !is_deformation(p)) throw InputError("decompose: input fails the deformation check");
  const Decomposition dec = type == ArrangementType::BraidA ? a_decompose(p) : b_decompose(p);
  if (cfg.format == Format::Json) {
    std::cout << decomposition_to_json(dec) << '\n';
  } else {
    if (cfg.format == Format::Csv) std::cout << "generator,coefficient\n";
    for (std::size_t k = 0; k < dec.names.size(); ++k) {
      if (cfg.format == Format::Csv)
        std::cout << dec.names[k] << ',' << dec.coeffs[k].get_str() << '\n';
      else if (dec.coeffs[k] != 0)
        std::cout << dec.names[k] << ' ' << dec.coeffs[k].get_str() << '\n';
    }
    if (cfg.format == Format::Text) std::cout << (dec.reconstructed ? "reconstructed\n" : "NOT reconstructed\n");
  }
  log(std::string("decomposition ") + (dec.reconstructed ? "reconstructs" : "does NOT reconstruct") + " the input");
  return dec.reconstructed ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// stats

int run_stats(const RunConfig& cfg) {
  const int d = *cfg.d;
  const bool signed_group = cfg.type == "B";
  if (cfg.type != "S" && cfg.type != "B") throw InputError("stats: --group must be S or B");
  const auto bounds = enumeration_bounds();
  const int max_d = signed_group ? bounds.max_hyperoctahedral : bounds.max_symmetric;
  if (d < 1 || d > max_d) throw InputError("stats: d must lie in 1.." + std::to_string(max_d));

  const ArrangementPtr arr = signed_group ? Arrangement::type_b(d) : Arrangement::braid(d);
  std::vector<long long> exc(d + 1, 0), des(d + 1, 0);
  // (dim, flat text) orders supports by dimension, then by their notation
  std::map<std::pair<int, std::string>, std::vector<long long>> by_support;
  long long count = 0;
  auto record = [&](int e, int de, const Flat& supp) {
    ++count;
    ++exc[e];
    ++des[de];
    auto& row = by_support[{static_cast<int>(supp.blocks.size()), arr->format(supp)}];
    if (row.empty()) row.assign(d + 1, 0);
    ++row[e];
  };
  if (signed_group)
    for_each_signed_permutation(d, [&](const SignedPermutation& s) {
      const auto st = stats_signed(s);
      record(st.exc_b, st.des, st.supp);
    });
  else
    for_each_permutation(d, [&](const Permutation& s) {
      const auto st = stats(s);
      record(st.exc, st.des, st.supp);
    });

  const std::string exc_name = signed_group ? "exc_B" : "exc";
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (const auto& [key, row] : by_support) rows.push_back({{"flat", key.second}, {"dim", key.first}, {exc_name, row}});
    emit({{"group", cfg.type},
          {"d", d},
          {"count", count},
          {exc_name, exc},
          {"des", des},
          {"equidistributed", exc == des},
          {"by_support", rows}});
  } else if (cfg.format == Format::Csv) {
    std::cout << "flat,k,count\n";
    for (const auto& [key, row] : by_support)
      for (int k = 0; k <= d; ++k) std::cout << csv_quote(key.second) << ',' << k << ',' << row[k] << '\n';
  } else {
    std::cout << cfg.type << "_" << d << ": " << count << " elements\n";
    auto line = [&](const std::string& name, const std::vector<long long>& v) {
      std::cout << name << ':';
      for (long long c : v) std::cout << ' ' << c;
      std::cout << '\n';
    };
    line(exc_name, exc);
    line("des", des);
    for (const auto& [key, row] : by_support) line("  " + key.second, row);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Polytope algebra of Coxeter zonotope deformations: eigenspace tables and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized samples");
  app.add_flag("--debug-checks", cfg.debug_checks, "Extra input validation; `verify all` adds the cross-check suites");

  auto* eta = app.add_subcommand("eta", "Multiplicities eta_X(Xi_r) by every applicable method");
  eta->add_option("--type", cfg.type, "A, B, C or cube")->required();
  eta->add_option("--d", cfg.d, "Rank")->required();
  eta->add_option("--flat", cfg.flat, "Restrict to one flat, e.g. \"X_{1,3}\" or \"{12,3}\"");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suite_names{"all", "gf"};
  for (const auto& entry : suites()) suite_names.push_back(entry.first);
  verify->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--d", cfg.d, "Run only this rank");
  verify->add_option("--type", cfg.type, "Type for brenti (A or B)");
  verify->add_option("--order", cfg.order, "Truncation order for gf");
  verify->add_flag("--quick", cfg.quick, "Reduced bounds: A d <= 4, B d <= 3, series order 6");

  auto* decompose = app.add_subcommand("decompose", "Decompose log[p] over the generators");
  decompose->add_option("--type", cfg.type, "A or B")->required();
  decompose->add_option("--input", cfg.input, "Polytope JSON file")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Excedance and descent statistics");
  stats_cmd->add_option("--group", cfg.type, "S or B")->required()->check(CLI::IsMember({"S", "B"}));
  stats_cmd->add_option("--d", cfg.d, "Rank")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "eta") return run_eta(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "decompose") return run_decompose(cfg);
    if (cfg.command == "stats") return run_stats(cfg);
  } catch (const InputError& e) {
    log(std::string("input error: ") + e.what());
    return kInputError;
  } catch (const InvalidArgument& e) {
    log(std::string("input error: ") + e.what());
    return kInputError;
  } catch (const ResourceLimit& e) {
    log(std::string("bound exceeded: ") + e.what());
    return kInputError;
  } catch (const std::exception& e) {
    log(std::string("verification error: ") + e.what());
    return kFail;
  }
  return kInputError;
}
