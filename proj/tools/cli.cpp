#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "h3sep/errors.hpp"
#include "h3sep/hydrogen.hpp"
#include "h3sep/integrals.hpp"
#include "h3sep/io.hpp"
#include "h3sep/oracle.hpp"
#include "h3sep/pes_scan.hpp"
#include "h3sep/secular.hpp"
#include "h3sep/wavefunction.hpp"

#ifndef H3SEP_DEFAULT_DATA_DIR
#define H3SEP_DEFAULT_DATA_DIR "data/reference_tables"
#endif

namespace h3sep::cli {

namespace fs = std::filesystem;

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string output;
  std::optional<int> precision;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", o.output,
                  "Output file (relative paths resolve against $H3SEP_OUTPUT_DIR when set)");
  cmd->add_option("--precision", o.precision,
                  "CSV decimals / JSON significant digits (defaults 7 / 9)")
      ->check(CLI::Range(1, 17));
}

fs::path resolve_output(const std::string& name) {
  fs::path p(name);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("H3SEP_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      p = fs::path(dir) / p;
    }
  }
  return p;
}

// Writes `text` to the requested file, or to `out` when no file was given.
void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  const fs::path path = resolve_output(o.output);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + path.string());
  f << text;
}

fs::path data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("H3SEP_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return H3SEP_DEFAULT_DATA_DIR;
}

std::vector<std::pair<double, double>> reference_rows(double alpha, const std::string& dir_flag) {
  const std::string name = io::reference_table_name(alpha);
  if (name.empty()) {
    throw DomainError("no reference grid for this alpha (available: pi/2, pi/6, pi/3, pi/8)");
  }
  return io::read_reference_table(data_dir(dir_flag) / name);
}

void check_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-8)) throw DomainError("--tol must lie in (0, 1e-8]");
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  double r = -1.0;
  std::string alpha;
  double tol = 1e-10;
  bool electronic_only = false;
  OutputOptions out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  check_tol(a.tol);
  const Geometry geom(a.r, io::parse_angle(a.alpha));
  const SecularRoot root = ground_state_root(geom, a.tol);
  const LambdaVector lambda = lambda_vector(geom, root);
  std::optional<double> v_nn;
  std::optional<double> e_total;
  if (geom.r() > 0.0 && !a.electronic_only) {
    v_nn = nuclear_repulsion(geom);
    e_total = -root.epsilon + *v_nn;
  }
  const double ratio = lambda.lplus / lambda.l0;

  std::ostringstream text;
  if (a.out.format == "json") {
    const int digits = a.out.precision.value_or(io::kJsonDigits);
    const auto num = [&](const std::optional<double>& v) {
      return v ? nlohmann::ordered_json(io::round_significant(*v, digits)) : nlohmann::ordered_json(nullptr);
    };
    const nlohmann::ordered_json j = {
        {"schema_version", io::kJsonSchemaVersion},
        {"R", num(geom.r())},
        {"alpha", num(geom.alpha())},
        {"x", num(root.x)},
        {"epsilon", num(root.epsilon)},
        {"E_electronic", num(-root.epsilon)},
        {"V_nn", num(v_nn)},
        {"E_total", num(e_total)},
        {"lambda_ratio", num(ratio)},
    };
    text << j.dump(2) << '\n';
  } else {
    const int dec = a.out.precision.value_or(io::kCsvDecimals);
    const auto num = [&](const std::optional<double>& v) {
      return v ? io::format_fixed(*v, dec) : std::string{};
    };
    text << "R,alpha,x,epsilon,E_electronic,V_nn,E_total,lambda_ratio\n"
         << num(geom.r()) << ',' << num(geom.alpha()) << ',' << num(root.x) << ','
         << num(root.epsilon) << ',' << num(-root.epsilon) << ',' << num(v_nn) << ','
         << num(e_total) << ',' << num(ratio) << '\n';
  }
  emit(a.out, text.str(), out);
  return kOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
  std::string alpha;
  bool reference_grid = false;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<std::size_t> steps;
  std::vector<double> r_values;
  std::string data_dir;
  double tol = 1e-10;
  OutputOptions out;
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  check_tol(a.tol);
  const double alpha = io::parse_angle(a.alpha);
  (void)Geometry(0.0, alpha);

  const int modes = int(a.reference_grid) + int(a.r_min.has_value() || a.r_max.has_value() ||
                                            a.steps.has_value()) +
                    int(!a.r_values.empty());
  if (modes != 1) {
    throw DomainError("choose exactly one of --paper-grid, --r-min/--r-max/--steps, --r-values");
  }

  PesTable table;
  if (a.reference_grid) {
    std::vector<double> rs;
    for (const auto& [r, x] : reference_rows(alpha, a.data_dir)) rs.push_back(r);
    table = scan_r(alpha, rs, a.tol);
  } else if (!a.r_values.empty()) {
    table = scan_r(alpha, a.r_values, a.tol);
  } else {
    if (!a.r_min || !a.r_max || !a.steps) throw DomainError("--r-min, --r-max and --steps go together");
    table = comparison_curve(alpha, *a.r_min, *a.r_max, *a.steps, a.tol);
  }

  std::optional<StabilityReport> stability;
  try {
    stability = stability_report(table);
    err << "stability: " << stability->classification << '\n';
  } catch (const DomainError&) {
  }

  std::ostringstream text;
  if (a.out.format == "json") {
    nlohmann::ordered_json j = io::pes_json(table, a.out.precision.value_or(io::kJsonDigits));
    if (stability) {
      j["stability"] = {
          {"classification", stability->classification},
          {"monotone_decreasing", stability->monotone_decreasing},
          {"minimum_R", stability->minimum_r ? nlohmann::ordered_json(*stability->minimum_r) : nullptr},
      };
    }
    text << j.dump(2) << '\n';
  } else {
    io::write_pes_csv(text, table.rows, a.out.precision.value_or(io::kCsvDecimals));
  }
  emit(a.out, text.str(), out);
  return kOk;
}

// ---------------------------------------------------------------------------
// psi-grid

struct GridArgs {
  double r = 1.6;
  std::string alpha = "pi/6";
  std::optional<double> radius;
  std::size_t theta_count = 90;
  std::size_t phi_count = 180;
  bool normalize = false;
  double tol = 1e-10;
  OutputOptions out;
};

int cmd_psi_grid(const GridArgs& a, std::ostream& out) {
  check_tol(a.tol);
  const Geometry geom(a.r, io::parse_angle(a.alpha));
  const double radius = a.radius.value_or(a.r);
  if (!(radius > 0.0)) throw DomainError("--radius must be positive");
  if (a.theta_count < 2 || a.phi_count < 2) throw DomainError("grid counts must be >= 2");
  const SecularRoot root = ground_state_root(geom, a.tol);
  const PsiParams params = a.normalize ? normalize(geom, root) : raw_params(geom, root);
  const AngularGrid grid = psi_grid(radius, params, a.theta_count, a.phi_count);
  std::ostringstream text;
  io::write_grid_csv(text, grid, a.out.precision.value_or(10));
  emit(a.out, text.str(), out);
  return kOk;
}

// ---------------------------------------------------------------------------
// hydrogen-check / validate

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel_dev(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double max_a_deviation(const std::vector<double>& xs) {
  double worst = 0.0;
  for (double x : xs) {
    const hydrogen::AMatrix2 a = hydrogen::a_matrix(x);
    const double closed[2][2] = {{a.a00, a.a01}, {a.a10, a.a11}};
    for (int q = 0; q < 2; ++q) {
      for (int m = 0; m < 2; ++m) {
        const double o = oracle::a_entry(q, m, x).value;
        // Entries pass through zero at x = 1/2 and x = 1; compare those absolutely.
        worst = std::max(worst, std::abs(closed[q][m] - o) / std::max(std::abs(o), 1e-3));
      }
    }
  }
  return worst;
}

struct HydrogenArgs {
  double x_max = 3.0;
  double tol = 1e-10;
};

int cmd_hydrogen_check(const HydrogenArgs& a, std::ostream& out) {
  if (!(a.tol > 0.0 && a.tol < 1e-6)) throw DomainError("--tol must lie in (0, 1e-6)");
  if (!(a.x_max >= 2.0)) throw DomainError("--x-max must be >= 2");
  Checklist c(out);
  const auto roots = hydrogen::find_hydrogen_roots(a.x_max, a.tol);
  c.check("root-count", roots.size() == 2, std::to_string(roots.size()) + " positive roots");
  const double tol = std::max(a.tol, 1e-10);
  c.check("root-1s", std::abs(roots[0].x - 1.0) <= tol, "x = " + io::format_fixed(roots[0].x, 12));
  c.check("root-2s", std::abs(roots[1].x - 0.5) <= tol, "x = " + io::format_fixed(roots[1].x, 12));
  c.check("pure-1s", roots[0].pure_state && roots[0].lambda1 == 0.0, "lambda = (1, 0)");
  c.check("pure-2s", roots[1].pure_state && roots[1].lambda0 == 0.0, "lambda = (0, 1)");
  const double dev = max_a_deviation({0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0});
  c.check("oracle-a-matrix", dev <= 1e-9, "max relative deviation " + sci(dev));
  return c.all_ok() ? kOk : kValidationFailure;
}

struct ValidateArgs {
  unsigned seed = 20240611;
  std::size_t samples = 100;
  double table_tol = 1e-6;
  std::string data_dir;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  Checklist c(out);
  std::mt19937_64 rng(a.seed);
  std::uniform_real_distribution<double> ud(0.1, 6.0);
  std::uniform_real_distribution<double> ux(0.3, 3.0);

  double f_dev = 0.0;
  double i0_dev = 0.0;
  for (std::size_t i = 0; i < a.samples; ++i) {
    const double d = ud(rng);
    const double x = ux(rng);
    f_dev = std::max(f_dev, rel_dev(f_overlap(d, x), oracle::i_integral(d, x).value));
    i0_dev = std::max(i0_dev, rel_dev(i0(x), oracle::i_integral(0.0, x).value));
  }
  c.check("oracle-f-overlap", f_dev <= 1e-8, "max relative deviation " + sci(f_dev));
  c.check("oracle-i0", i0_dev <= 1e-8, "max relative deviation " + sci(i0_dev));

  double unit_dev = 0.0;
  for (double h : {-1e-3, -1e-5, 0.0, 1e-5, 1e-3}) {
    for (double d : {0.5, 1.0, 2.0, 4.0}) {
      unit_dev = std::max(unit_dev, rel_dev(f_overlap(d, 1.0 + h), oracle::i_integral(d, 1.0 + h).value));
    }
  }
  c.check("oracle-near-unit-x", unit_dev <= 1e-8, "max relative deviation " + sci(unit_dev));

  std::vector<double> xs(25);
  for (double& x : xs) x = ux(rng);
  const double a_dev = max_a_deviation(xs);
  c.check("oracle-a-matrix", a_dev <= 1e-8, "max relative deviation " + sci(a_dev));

  double table_dev = 0.0;
  std::size_t rows = 0;
  for (const char* text : {"pi/2", "pi/6", "pi/3", "pi/8"}) {
    const double alpha = io::parse_angle(text);
    const auto ref = reference_rows(alpha, a.data_dir);
    std::vector<double> rs;
    for (const auto& [r, x] : ref) rs.push_back(r);
    const PesTable t = scan_r(alpha, rs, 1e-10);
    for (std::size_t i = 0; i < ref.size(); ++i, ++rows) {
      table_dev = t.rows[i].x ? std::max(table_dev, std::abs(*t.rows[i].x - ref[i].second))
                              : std::numeric_limits<double>::infinity();
    }
  }
  c.check("reference-tables", table_dev <= a.table_tol,
          "max |dx| " + sci(table_dev) + " over " + std::to_string(rows) + " rows");

  const double united = 3.0 * i0(2.1349367) - 1.0;
  c.check("united-atom", std::abs(united) <= 1e-6, "3 I0(2.1349367) - 1 = " + sci(united));
  return c.all_ok() ? kOk : kValidationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-rank separable-potential solver for a three-proton one-electron ion"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Ground-state root and energies for one geometry");
  s->add_option("--r", solve.r, "Proton separation R (Bohr)")->required();
  s->add_option("--alpha", solve.alpha, "Half-apex angle, e.g. pi/6 or 0.5236")->required();
  s->add_option("--tol", solve.tol, "Root tolerance");
  s->add_flag("--electronic-only", solve.electronic_only, "Omit nuclear repulsion and total energy");
  add_output_options(s, solve.out);

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "Potential-energy scan along R at fixed alpha");
  sc->add_option("--alpha", scan.alpha, "Half-apex angle")->required();
  sc->add_flag("--paper-grid", scan.reference_grid, "Use the R grid of the reference table for alpha");
  sc->add_option("--r-min", scan.r_min, "First R of a uniform grid");
  sc->add_option("--r-max", scan.r_max, "Last R of a uniform grid");
  sc->add_option("--steps", scan.steps, "Number of uniform grid points");
  sc->add_option("--r-values", scan.r_values, "Explicit R values")->delimiter(',');
  sc->add_option("--data-dir", scan.data_dir, "Directory with reference tables");
  sc->add_option("--tol", scan.tol, "Root tolerance");
  add_output_options(sc, scan.out);

  GridArgs grid;
  auto* g = app.add_subcommand("psi-grid", "Ground-state wavefunction on a sphere (theta, phi, psi)");
  g->add_option("--r", grid.r, "Proton separation R (Bohr)");
  g->add_option("--alpha", grid.alpha, "Half-apex angle");
  g->add_option("--radius", grid.radius, "Sphere radius (defaults to R)");
  g->add_option("--theta-count", grid.theta_count, "Polar samples");
  g->add_option("--phi-count", grid.phi_count, "Azimuthal samples");
  g->add_flag("--normalize", grid.normalize, "Scale psi to unit norm");
  g->add_option("--tol", grid.tol, "Root tolerance");
  g->add_option("-o,--output", grid.out.output, "Output file");
  g->add_option("--precision", grid.out.precision, "Significant digits")->check(CLI::Range(1, 17));

  HydrogenArgs hyd;
  auto* h = app.add_subcommand("hydrogen-check", "Self-check on the two-level hydrogen atom");
  h->add_option("--x-max", hyd.x_max, "Upper end of the root scan");
  h->add_option("--tol", hyd.tol, "Root tolerance");

  ValidateArgs val;
  auto* v = app.add_subcommand("validate", "Closed forms against quadrature and reference tables");
  v->add_option("--seed", val.seed, "Sampling seed");
  v->add_option("--samples", val.samples, "Random (d, x) samples");
  v->add_option("--table-tol", val.table_tol, "Allowed |dx| against the reference tables");
  v->add_option("--data-dir", val.data_dir, "Directory with reference tables");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*s) return cmd_solve(solve, out);
    if (*sc) return cmd_scan(scan, out, err);
    if (*g) return cmd_psi_grid(grid, out);
    if (*h) return cmd_hydrogen_check(hyd, out);
    if (*v) return cmd_validate(val, out);
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NoBoundState& e) {
    err << "no bound state: " << e.what() << '\n';
    return kNoBoundState;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kInputError;
}

}  // namespace h3sep::cli
