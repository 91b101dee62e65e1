// discord: command-line front end.
//
//   discord analyze state.json [--swap-parties] [--restarts N] [--skip-dg]
//   discord generate (--spec spec.json | --family F --m M [...])
//   discord sweep (--spec sweep.json | --family F --m M --start A --stop B --steps K) [--columns ...]
//   discord selftest [--quick] [--corrupt-ordering]
//
// Global: --seed, --output, --format {json,csv}. Exit codes: 0 ok, 1 selftest
// failure, 2 input or validation error, 3 numeric failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "discord/acceptance.hpp"
#include "discord/errors.hpp"
#include "discord/matrix_io.hpp"
#include "discord/sweep.hpp"

namespace {

using nlohmann::json;
using namespace discord;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format;  // empty: command default
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file '" + g.output + "'");
  out << text;
}

std::string format_or(const Globals& g, const char* fallback) {
  return g.format.empty() ? fallback : g.format;
}

std::string report_csv(const MeasureReport& r) {
  std::ostringstream os;
  os << "m,n,d_p,i_p,c_p,q,d_g,d_g_kind,zero_discord\n"
     << r.dims.m << ',' << r.dims.n << ',' << format_double(r.d_p) << ','
     << format_double(r.i_p) << ',' << format_double(r.c_p) << ',' << format_double(r.q) << ','
     << (r.d_g_kind == DgKind::skipped ? "" : format_double(r.d_g)) << ','
     << to_string(r.d_g_kind) << ',' << (r.zero_discord.zero_discord ? "true" : "false") << '\n';
  return os.str();
}

struct AnalyzeArgs {
  std::string input;
  bool swap = false;
  int restarts = OptimizerConfig{}.restarts;
  bool skip_dg = false;
};

int cmd_analyze(const Globals& g, const AnalyzeArgs& a) {
  DensityMatrix rho = read_matrix_file(a.input);
  if (a.swap) rho = swap_parties(rho);
  ReportOptions opt;
  opt.optimizer.restarts = a.restarts;
  opt.optimizer.seed = g.seed.value_or(0);
  opt.skip_dg = a.skip_dg;
  const MeasureReport r = measure_report(rho, opt);
  emit(g, format_or(g, "json") == "csv" ? report_csv(r) : report_to_json(r).dump(2) + "\n");
  return 0;
}

struct GenerateArgs {
  std::string spec_path;
  std::string family;
  std::optional<int> m, n, rank;
  std::optional<double> x;
  std::vector<double> s, p;
};

int cmd_generate(const Globals& g, const GenerateArgs& a) {
  StateSpec spec;
  if (!a.spec_path.empty()) {
    spec = spec_from_json(read_json_file(a.spec_path));
  } else {
    if (a.family.empty()) throw InvalidInput("generate needs --spec or --family");
    json doc{{"family", a.family}};
    if (a.m) doc["m"] = *a.m;
    if (a.n) doc["n"] = *a.n;
    if (a.x) doc["x"] = *a.x;
    if (a.rank) doc["rank"] = *a.rank;
    if (!a.s.empty()) doc["s"] = a.s;
    if (!a.p.empty()) doc["p"] = a.p;
    spec = spec_from_json(doc);
  }
  if (g.seed) spec.seed = *g.seed;
  if (format_or(g, "json") != "json") throw InvalidInput("generate only writes json");
  emit(g, matrix_to_json(generate(spec)).dump() + "\n");
  return 0;
}

struct SweepArgs {
  std::string spec_path;
  std::string family;
  std::optional<int> m, n, steps, restarts;
  std::optional<double> start, stop;
  std::vector<std::string> columns;
  bool skip_dg = false;
};

int cmd_sweep(const Globals& g, const SweepArgs& a) {
  json doc;
  if (!a.spec_path.empty()) {
    doc = read_json_file(a.spec_path);
  } else {
    if (a.family.empty()) throw InvalidInput("sweep needs --spec or --family");
    doc = json{{"family", a.family}};
    if (a.m) doc["m"] = *a.m;
    if (a.n) doc["n"] = *a.n;
    if (a.start) doc["start"] = *a.start;
    if (a.stop) doc["stop"] = *a.stop;
    if (a.steps) doc["steps"] = *a.steps;
  }
  SweepSpec spec = sweep_spec_from_json(doc);
  if (a.restarts) spec.optimizer.restarts = *a.restarts;
  if (!a.columns.empty()) spec.columns = a.columns;
  if (a.skip_dg) spec.skip_dg = true;
  if (g.seed) spec.optimizer.seed = *g.seed;
  const std::vector<SweepRow> rows = run_sweep(spec);
  if (format_or(g, "csv") == "json") {
    emit(g, sweep_to_json(spec, rows).dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_csv(os, spec, rows);
    emit(g, os.str());
  }
  return 0;
}

struct SelftestArgs {
  bool quick = false;
  bool corrupt = false;
};

int cmd_selftest(const Globals& g, const SelftestArgs& a) {
  AcceptanceOptions opt;
  opt.quick = a.quick;
  if (g.seed) opt.seed = *g.seed;
  if (a.corrupt) opt.ordering = GeneratorOrdering::corrupted_for_testing;
  std::ostringstream os;
  int failed = 0;
  for (const CriterionResult& r : run_acceptance(opt)) {
    os << format_result(r) << '\n';
    failed += !r.passed;
  }
  os << (failed == 0 ? std::string("all criteria passed")
                     : std::to_string(failed) + " criteria failed")
     << '\n';
  emit(g, os.str());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric discord measures for bipartite density matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Root seed for random states and optimizer restarts");
  app.add_option("--output", g.output, "Write to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  AnalyzeArgs aa;
  CLI::App* analyze = app.add_subcommand("analyze", "Report all measures for a state file");
  analyze->add_option("input", aa.input, "Matrix JSON file")->required();
  analyze->add_flag("--swap-parties", aa.swap, "Exchange parties A and B before analysis");
  analyze->add_option("--restarts", aa.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  analyze->add_flag("--skip-dg", aa.skip_dg, "Do not compute D_G");

  GenerateArgs ga;
  CLI::App* gen = app.add_subcommand("generate", "Write the matrix JSON of a state family");
  gen->add_option("--spec", ga.spec_path, "State spec JSON file");
  gen->add_option("--family", ga.family, "State family");
  gen->add_option("--m", ga.m, "Dimension of party A");
  gen->add_option("--n", ga.n, "Dimension of party B");
  gen->add_option("--x", ga.x, "Werner / isotropic parameter");
  gen->add_option("--s", ga.s, "Schmidt coefficients")->delimiter(',');
  gen->add_option("--p", ga.p, "Classical-quantum block probabilities")->delimiter(',');
  gen->add_option("--rank", ga.rank, "Rank of a random mixed state");

  SweepArgs sa;
  CLI::App* sweep = app.add_subcommand("sweep", "Scan a state family over its parameter");
  sweep->add_option("--spec", sa.spec_path, "Sweep spec JSON file");
  sweep->add_option("--family", sa.family, "werner, isotropic or pure_schmidt");
  sweep->add_option("--m", sa.m, "Dimension of party A");
  sweep->add_option("--n", sa.n, "Dimension of party B (pure_schmidt)");
  sweep->add_option("--start", sa.start, "First grid point");
  sweep->add_option("--stop", sa.stop, "Last grid point");
  sweep->add_option("--steps", sa.steps, "Number of grid points");
  sweep->add_option("--columns", sa.columns, "Columns to print")->delimiter(',');
  sweep->add_option("--restarts", sa.restarts, "Optimizer restarts for m > 2");
  sweep->add_flag("--skip-dg", sa.skip_dg, "Do not compute D_G");

  SelftestArgs st;
  CLI::App* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_flag("--quick", st.quick, "Reduced corpus sizes");
  self->add_flag("--corrupt-ordering", st.corrupt,
                 "Use a corrupted generator ordering (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(g, aa);
    if (*gen) return cmd_generate(g, ga);
    if (*sweep) return cmd_sweep(g, sa);
    if (*self) return cmd_selftest(g, st);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
