// Command-line surface of the twindelta solvers: spectra, wavefunctions,
// parameter sweeps, dark-state queries, and the finite-difference oracle.
// Emits CSV (default) or JSON per the schema in docs/output_schema.md.
//
// Exit codes: 0 success, 2 usage error, 3 solver error, 4 oracle error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twindelta/twindelta.hpp"

namespace {

using namespace twindelta;

struct OutputOpts {
  std::string format = "csv";
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Write to file instead of stdout");
}

int emit(const io::Table& t, const OutputOpts& o) {
  std::string text =
      o.format == "json" ? io::to_json(t).dump(2) + "\n" : io::to_csv(t);
  if (o.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file " << o.out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

std::string fmt(double x) { return io::format_double(x); }

io::Table levels_table(const std::vector<EnergyLevel>& lv) {
  io::Table t;
  t.columns = {"n", "parity", "epsilon", "Q", "kind"};
  for (const auto& l : lv)
    t.rows.push_back({static_cast<std::int64_t>(l.n), parity_name(l.parity),
                      l.epsilon, l.q,
                      std::string(l.kind == LevelKind::Dark ? "dark" : "regular")});
  return t;
}

int cmd_levels(double g, double c, const std::string& parity, int count,
               const OutputOpts& o) {
  std::vector<EnergyLevel> lv;
  if (parity == "even")
    lv = rel::solve_levels({g, c}, Parity::Even, count);
  else if (parity == "odd")
    lv = rel::solve_levels({g, c}, Parity::Odd, count);
  else
    lv = rel::solve_levels_both({g, c}, count);
  io::Table t = levels_table(lv);
  t.command = "levels";
  t.params = {{"g", fmt(g)}, {"c", fmt(c)}, {"parity", parity},
              {"count", std::to_string(count)}};
  return emit(t, o);
}

int cmd_wavefunction(double g, double c, int n, double xmin, double xmax,
                     double dx, const OutputOpts& o) {
  Parity p = parity_of(n);
  auto lv = rel::solve_levels({g, c}, p, n / 2 + 1);
  const EnergyLevel& level = lv[n / 2];
  auto w = rel::build_wavefunction(level, {g, c});
  io::Table t;
  t.command = "wavefunction";
  t.params = {{"g", fmt(g)},       {"c", fmt(c)},   {"n", std::to_string(n)},
              {"epsilon", fmt(level.epsilon)},      {"xmin", fmt(xmin)},
              {"xmax", fmt(xmax)}, {"dx", fmt(dx)}};
  t.columns = {"x", "phi"};
  long steps = std::lround((xmax - xmin) / dx);
  for (long i = 0; i <= steps; ++i) {
    double x = xmin + i * dx;
    t.rows.push_back({x, rel::evaluate_wavefunction(w, x)});
  }
  return emit(t, o);
}

int cmd_dark(int n_max, double c_max, const OutputOpts& o) {
  auto pts = hardwall::dark_points(n_max, c_max);
  io::Table t;
  t.command = "dark";
  t.params = {{"n_max", std::to_string(n_max)}, {"c_max", fmt(c_max)}};
  t.columns = {"n", "parity", "c_star"};
  for (const auto& d : pts)
    t.rows.push_back({static_cast<std::int64_t>(d.n), parity_name(d.parity),
                      d.c_star});
  return emit(t, o);
}

int cmd_oracle(double g, double c, double L, double h, int k,
               const std::string& model, const OutputOpts& o) {
  oracle::GridSpec spec{L, h,
                        model == "split" ? oracle::DeltaModel::SplitWeight
                                         : oracle::DeltaModel::NearestPoint};
  auto cert = oracle::grid_eigensolve_certified({g, c}, spec, k);
  io::Table t;
  t.command = "oracle";
  t.params = {{"g", fmt(g)}, {"c", fmt(c)},
              {"L", fmt(L)}, {"h", fmt(h)},
              {"k", std::to_string(k)}, {"delta_model", model}};
  t.columns = {"index", "eigenvalue", "second_moment", "certified_error"};
  for (int i = 0; i < k; ++i)
    t.rows.push_back({static_cast<std::int64_t>(i),
                      cert.fine.eigenvalues[i], cert.fine.second_moments[i],
                      cert.certified_error[i]});
  return emit(t, o);
}

io::Table scan_table(const scan::ScanResult& r, const std::string& command) {
  io::Table t;
  t.command = command;
  for (const auto& [k, v] : r.metadata) t.params.emplace_back(k, v);
  t.columns.push_back(r.axis == scan::Axis::G ? "g" : "c");
  for (const auto& l : r.curve_labels) t.columns.push_back(l);
  bool tagged = !r.tags.empty();
  if (tagged)
    for (const auto& l : r.curve_labels) t.columns.push_back("kind_" + l);
  if (!r.sample_tags.empty()) t.columns.push_back("regime");
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    std::vector<io::Cell> row;
    row.emplace_back(r.samples[i]);
    for (double v : r.values[i]) row.emplace_back(v);
    if (tagged)
      for (const auto& tag : r.tags[i]) row.emplace_back(tag);
    if (!r.sample_tags.empty()) row.emplace_back(r.sample_tags[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

int cmd_sweep(const std::string& mode, double g, double c, double lo,
              double hi, int points, int n_levels, const OutputOpts& o) {
  std::vector<double> grid;
  if (points > 0) {
    for (int i = 0; i < points; ++i)
      grid.push_back(lo + (hi - lo) * i / std::max(1, points - 1));
  }
  scan::ScanResult r;
  if (mode == "g") {
    r = scan::sweep_g(c, grid.empty() ? scan::default_g_grid() : grid,
                      n_levels);
  } else if (mode == "c") {
    r = scan::sweep_c(g, grid.empty() ? scan::default_c_grid() : grid,
                      n_levels);
  } else if (mode == "widths") {
    r = scan::sweep_widths(g, grid.empty() ? scan::default_c_grid() : grid);
  } else {
    r = scan::sweep_infinite(grid.empty() ? scan::default_c_grid() : grid,
                             n_levels);
  }
  return emit(scan_table(r, "sweep_" + mode), o);
}

// Re-derive the CSV from a JSON output file and compare with a CSV file.
int cmd_verify(const std::string& json_path, const std::string& csv_path) {
  std::ifstream jf(json_path, std::ios::binary);
  if (!jf) {
    std::cerr << "error: cannot read " << json_path << "\n";
    return 2;
  }
  nlohmann::json j = nlohmann::json::parse(jf);
  std::string regenerated = io::to_csv(io::from_json(j));
  std::ifstream cf(csv_path, std::ios::binary);
  if (!cf) {
    std::cerr << "error: cannot read " << csv_path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << cf.rdbuf();
  if (ss.str() != regenerated) {
    std::cerr << "verify: MISMATCH between " << json_path << " and "
              << csv_path << "\n";
    return 1;
  }
  std::cout << "verify: OK\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twindelta: two trapped particles with twin displaced delta interactions"};
  app.require_subcommand(1);

  double g = 0.0, c = 0.75;
  int count = 6, n = 0, k = 6, n_levels = 8, points = -1;
  double xmin = 0.0, xmax = 0.0, dx = 0.01;
  double L = 10.0, h = 0.002, c_max = 4.0, lo = 0.0, hi = 1.0;
  int n_max = 10;
  std::string parity = "both", delta_model = "nearest", mode;
  std::string json_path, csv_path;
  OutputOpts out_levels, out_wf, out_dark, out_oracle, out_sweep;

  auto* lv = app.add_subcommand("levels", "Solve the lowest energy levels");
  lv->add_option("--g", g, "Coupling strength")->required();
  lv->add_option("--c", c, "Interaction displacement")->required();
  lv->add_option("--parity", parity, "Parity sector")
      ->check(CLI::IsMember({"even", "odd", "both"}))
      ->capture_default_str();
  lv->add_option("--count", count, "Number of levels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(lv, out_levels);

  auto* wf = app.add_subcommand("wavefunction", "Sample a normalized eigenfunction");
  wf->add_option("--g", g)->required();
  wf->add_option("--c", c)->required();
  wf->add_option("--n", n, "Level label (node count)")->required();
  wf->add_option("--xmin", xmin);
  wf->add_option("--xmax", xmax);
  wf->add_option("--dx", dx)->check(CLI::PositiveNumber)->capture_default_str();
  add_output_flags(wf, out_wf);

  auto* sw = app.add_subcommand("sweep", "Parameter sweeps behind the paper figures");
  sw->add_option("--mode", mode, "g | c | widths | infinite")
      ->check(CLI::IsMember({"g", "c", "widths", "infinite"}))
      ->required();
  sw->add_option("--g", g, "Fixed g (modes c, widths)");
  sw->add_option("--c", c, "Fixed c (mode g)");
  sw->add_option("--min", lo, "Grid start (with --points)");
  sw->add_option("--max", hi, "Grid end (with --points)");
  sw->add_option("--points", points, "Grid size; omit for figure defaults");
  sw->add_option("--levels", n_levels, "Curves to track")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(sw, out_sweep);

  auto* dk = app.add_subcommand("dark", "Dark displacements c* with H_n(c*/sqrt(2)) = 0");
  dk->add_option("--n-max", n_max)->check(CLI::PositiveNumber)->capture_default_str();
  dk->add_option("--c-max", c_max)->capture_default_str();
  add_output_flags(dk, out_dark);

  auto* orc = app.add_subcommand("oracle", "Finite-difference grid diagonalization");
  orc->set_help_flag("--help", "Print this help message and exit");  // frees --h
  orc->add_option("--g", g)->required();
  orc->add_option("--c", c)->required();
  orc->add_option("--L", L)->capture_default_str();
  orc->add_option("--h", h)->check(CLI::PositiveNumber)->capture_default_str();
  orc->add_option("--k", k, "Eigenvalues to compute")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  orc->add_option("--delta", delta_model, "Delta discretization")
      ->check(CLI::IsMember({"nearest", "split"}))
      ->capture_default_str();
  add_output_flags(orc, out_oracle);

  auto* vf = app.add_subcommand("verify", "Check a JSON output reproduces a CSV output");
  vf->add_option("--json", json_path)->required();
  vf->add_option("--csv", csv_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (lv->parsed()) return cmd_levels(g, c, parity, count, out_levels);
    if (wf->parsed()) {
      if (xmin == 0.0 && xmax == 0.0) {
        xmin = -(c + 6.0);
        xmax = c + 6.0;
      }
      return cmd_wavefunction(g, c, n, xmin, xmax, dx, out_wf);
    }
    if (sw->parsed())
      return cmd_sweep(mode, g, c, lo, hi, points, n_levels, out_sweep);
    if (dk->parsed()) return cmd_dark(n_max, c_max, out_dark);
    if (orc->parsed())
      return cmd_oracle(g, c, L, h, k, delta_model, out_oracle);
    if (vf->parsed()) return cmd_verify(json_path, csv_path);
  } catch (const convergence_error& e) {
    std::cerr << "oracle error: " << e.what() << "\n";
    return 4;
  } catch (const twindelta::error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
