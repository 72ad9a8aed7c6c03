#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "entropart/error.hpp"
#include "entropart/renyi.hpp"
#include "entropart/shannon.hpp"
#include "entropart/summation.hpp"
#include "json.hpp"

namespace entropart::cli {
namespace {

constexpr double kClosureTol = 1e-8;      // add - nadd = total after integration
constexpr double kShapeTol = 1e-10;       // shape relations
constexpr double kLimitTol = 1e-4;        // entropy limits at the largest distance
constexpr double kVanishTol = 1e-6;       // overlap / nadd at the largest distance

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string idx(std::size_t a) { return std::to_string(a + 1); }

void check(std::vector<std::string>& failures, const std::string& where, const std::string& what,
           double lhs, double rhs, double tol) {
  const double gap = std::abs(lhs - rhs);
  if (!(gap <= tol * std::max(1.0, std::abs(rhs))))
    failures.push_back(where + ": " + what + " off by " + fmt(gap));
}

void add_shannon(Row& row, const std::string& prefix, const ShannonTerms& t, std::size_t n) {
  row.add(prefix + "_total", t.total);
  row.add(prefix + "_add", t.add);
  row.add(prefix + "_nadd", t.nadd);
  for (std::size_t a = 0; a < n; ++a) row.add(prefix + "_net_" + idx(a), t.net[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      row.add(prefix + "_overlap_" + idx(a) + "_" + idx(b), t.overlap[pair_index(a, b, n)]);
}

// Full Shannon + Renyi decomposition of one density; identities are checked
// in nats before any unit conversion.
void decompose_into(Row& row, std::vector<std::string>& failures, const std::string& where,
                    const PairDensityField& field, const MolecularGrid& grid,
                    const std::vector<double>& alphas) {
  const std::size_t n = field.atom_count();
  const ShannonDecomposition d = shannon_decompose(field, grid);
  const double N = d.electrons;
  row.add("N", N, false);
  row.add("N_grid", d.grid_electrons, false);
  add_shannon(row, "S", d.density, n);
  add_shannon(row, "Ssig", d.shape, n);
  row.add("clamped", static_cast<double>(d.diagnostics.clamped), false);
  row.add("negative", static_cast<double>(d.diagnostics.negative), false);

  check(failures, where, "S add - nadd = total", d.density.add - d.density.nadd, d.density.total, kClosureTol);
  check(failures, where, "Ssig add - nadd = total", d.shape.add - d.shape.nadd, d.shape.total, kClosureTol);
  // Quadrature form of S_rho = N S_sigma - N log N (the grid integrates rho to N_grid).
  check(failures, where, "S_rho = N S_sigma - N log N", d.density.total,
        N * d.shape.total - d.grid_electrons * std::log(N), kShapeTol);

  for (double alpha : alphas) {
    const std::string a = alpha_label(alpha);
    const RenyiDecomposition r = renyi_decompose(field, grid, alpha);
    row.add("S" + a + "_total", r.total.density);
    row.add("S" + a + "_shape", r.total.shape);
    row.add("S" + a + "_net", r.atoms.net_density);
    row.add("S" + a + "_net_shape", r.atoms.net_shape);
    row.add("S" + a + "_nadd_intra", r.atoms.nadd_intra);
    for (std::size_t k = 0; k < n; ++k) row.add("p" + a + "_" + idx(k), r.atoms.p_atom[k], false);
    check(failures, where, "Renyi " + a + " shape relation", r.total.shape,
          r.total.density + alpha / (alpha - 1.0) * std::log(N), kShapeTol);
    if (r.partition) {
      const Renyi2Partition& p = *r.partition;
      row.add("S" + a + "_add", p.add);
      row.add("S" + a + "_nadd", p.nadd);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              const double v = p.at(i, j, k, l);
              sum += v;
              row.add("p4_" + idx(i) + "_" + idx(j) + "_" + idx(k) + "_" + idx(l), v, false);
            }
      check(failures, where, "p4 normalization", sum, 1.0, kShapeTol);
      check(failures, where, "Renyi 2 add - nadd = total", p.add - p.nadd, p.total, kClosureTol);
    }
  }
}

MolecularGrid make_grid(const Molecule& m, const GridOptions& g) {
  return build_molecular_grid(m, g.spec(), g.size_adjust);
}

void convert_units(Table& t, Units units) {
  if (units != Units::Bits) return;
  const double ln2 = std::log(2.0);
  auto conv = [&](Row& r) {
    for (auto& c : r.columns)
      if (c.entropy) c.value /= ln2;
  };
  for (auto& r : t.rows) conv(r);
  conv(t.reference);
}

std::string units_name(Units u) { return u == Units::Bits ? "bits" : "nats"; }

}  // namespace

AtomicGridSpec GridOptions::spec() const {
  AtomicGridSpec s;
  s.n_radial = n_radial;
  s.lebedev_order = lebedev;
  s.stiffness = stiffness;
  return s;
}

const Column* Row::find(const std::string& name) const {
  for (const auto& c : columns)
    if (c.name == name) return &c;
  return nullptr;
}

double Row::at(const std::string& name) const {
  const Column* c = find(name);
  if (!c) throw Error("no column '" + name + "'");
  return c->value;
}

std::string alpha_label(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "a%g", alpha);
  return buf;
}

void validate(const SweepConfig& c) {
  if (c.distances.empty()) throw Error("no distances given");
  for (std::size_t i = 0; i < c.distances.size(); ++i) {
    if (!(c.distances[i] > 0.0) || !std::isfinite(c.distances[i]))
      throw Error("distances must be positive and finite");
    if (i > 0 && !(c.distances[i] > c.distances[i - 1]))
      throw Error("distances must be strictly increasing");
  }
  for (double a : c.alphas)
    if (!(a > 0.0) || !std::isfinite(a) || std::abs(a - 1.0) <= kRenyiOrderGuard)
      throw Error("Renyi orders must be positive, finite and different from 1");
}

Table run_sweep(const SweepConfig& config) {
  validate(config);
  Table t;
  t.command = "sweep";

  // Reference block from the isolated atom in the same basis and grid.
  const AtomModel atom = atom_reference();
  const MolecularGrid atom_grid = make_grid(atom.molecule, config.grid);
  const ShannonDecomposition sa = shannon_decompose(atom.field(), atom_grid);
  const std::vector<FragmentShannon> frags = {{sa.density.total, 1.0}, {sa.density.total, 1.0}};
  const ShannonLimit lim = asymptotic_shannon_reference(frags);
  t.reference.add("E_atom", atom.energy, false);
  t.reference.add("E_limit", 2.0 * atom.energy, false);
  t.reference.add("S_atom", sa.density.total);
  t.reference.add("Ssig_atom", sa.shape.total);
  t.reference.add("S_limit", lim.density);
  t.reference.add("Ssig_limit", lim.shape);
  std::vector<RenyiLimit> renyi_limits;
  for (double alpha : config.alphas) {
    const std::string a = alpha_label(alpha);
    const RenyiTotal ra = renyi_total(atom.field(), atom_grid, alpha);
    const std::vector<FragmentRenyi> rf = {{ra.density, 0.5, 1.0}, {ra.density, 0.5, 1.0}};
    const RenyiLimit rl = asymptotic_renyi_reference(rf, alpha);
    renyi_limits.push_back(rl);
    t.reference.add("S" + a + "_atom", ra.density);
    t.reference.add("S" + a + "_limit", rl.density);
    t.reference.add("S" + a + "_shape_limit", rl.shape);
  }

  // Each R is independent; the reduction inside each decomposition is
  // already parallel and deterministic, so rows are produced in order.
  for (double R : config.distances) {
    const std::string where = "R=" + fmt(R);
    try {
      const H2Model model = build_h2_model(config.method, R);
      const MolecularGrid grid = make_grid(model.molecule, config.grid);
      Row row;
      row.add("R", R, false);
      row.add("energy", model.energy, false);
      row.add("overlap_integral", model.overlap, false);
      decompose_into(row, t.failures, where, model.field(), grid, config.alphas);
      t.rows.push_back(std::move(row));
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
  }

  if (config.strict_limits) {
    const Row& last = t.rows.back();
    const std::string where = "strict limits at R=" + fmt(config.distances.back());
    check(t.failures, where, "S_total vs atomic limit", last.at("S_total"), lim.density, kLimitTol);
    check(t.failures, where, "Ssig_total vs atomic limit", last.at("Ssig_total"), lim.shape, kLimitTol);
    if (std::abs(last.at("S_overlap_1_2")) > kVanishTol)
      t.failures.push_back(where + ": S_overlap does not vanish");
    if (std::abs(last.at("S_nadd")) > kVanishTol)
      t.failures.push_back(where + ": S_nadd does not vanish");
    for (std::size_t k = 0; k < config.alphas.size(); ++k) {
      const std::string a = alpha_label(config.alphas[k]);
      check(t.failures, where, "S" + a + "_total vs limit", last.at("S" + a + "_total"),
            renyi_limits[k].density, kLimitTol);
      check(t.failures, where, "S" + a + "_shape vs limit", last.at("S" + a + "_shape"),
            renyi_limits[k].shape, kLimitTol);
    }
  }
  convert_units(t, config.units);
  return t;
}

Table run_analyze(const std::filesystem::path& wfn, const std::vector<double>& alphas,
                  const GridOptions& grid, PrimitiveConvention convention, Units units) {
  const WfnDocument doc = read_wfn_file(wfn);
  const PairDensityField field = field_from_wfn(doc, convention);
  Table t;
  t.command = "analyze";
  Row row;
  if (field.atom_count() == 2) row.add("R", field.molecule().distance(0, 1), false);
  if (doc.total_energy) row.add("energy", *doc.total_energy, false);
  decompose_into(row, t.failures, wfn.filename().string(), field, make_grid(field.molecule(), grid), alphas);
  t.rows.push_back(std::move(row));
  convert_units(t, units);
  return t;
}

Table run_atom(const std::optional<std::filesystem::path>& wfn, const std::vector<double>& alphas,
               const GridOptions& grid, PrimitiveConvention convention, Units units) {
  Table t;
  t.command = "atom";
  Row row;
  if (wfn) {
    const WfnDocument doc = read_wfn_file(*wfn);
    if (doc.nuclei.size() != 1)
      throw Error(wfn->string() + ": atom expects a single-center wavefunction, found " +
                  std::to_string(doc.nuclei.size()) + " centers");
    const PairDensityField field = field_from_wfn(doc, convention);
    if (doc.total_energy) row.add("energy", *doc.total_energy, false);
    decompose_into(row, t.failures, wfn->filename().string(), field, make_grid(field.molecule(), grid), alphas);
  } else {
    const AtomModel atom = atom_reference();
    row.add("energy", atom.energy, false);
    decompose_into(row, t.failures, "H STO-6G", atom.field(), make_grid(atom.molecule, grid), alphas);
  }
  t.rows.push_back(std::move(row));
  convert_units(t, units);
  return t;
}

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& c : table.reference.columns) out << "# reference," << c.name << ',' << fmt(c.value) << '\n';
  if (table.rows.empty()) return;
  const auto& head = table.rows.front().columns;
  for (std::size_t k = 0; k < head.size(); ++k) out << (k ? "," : "") << head[k].name;
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.columns.size(); ++k) out << (k ? "," : "") << fmt(row.columns[k].value);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  using json = nlohmann::ordered_json;
  auto row_json = [](const Row& row) {
    json j = json::object();
    json p4 = json::object();
    for (const auto& c : row.columns) {
      if (c.name.rfind("p4_", 0) == 0) {
        std::string key = c.name.substr(3);
        for (char& ch : key)
          if (ch == '_') ch = ',';
        p4[key] = c.value;
      } else {
        j[c.name] = c.value;
      }
    }
    if (!p4.empty()) j["p4"] = std::move(p4);
    return j;
  };
  json doc;
  doc["command"] = table.command;
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back(row_json(r));
  doc["rows"] = std::move(rows);
  if (!table.reference.columns.empty()) doc["reference"] = row_json(table.reference);
  doc["failures"] = table.failures;
  out << doc.dump(2) << '\n';
}

void write_plot_script(std::ostream& out, const std::filesystem::path& csv_path, const Table& table) {
  const std::string csv = csv_path.string();
  std::filesystem::path png = csv_path;
  png.replace_extension(".png");
  const Row& ref = table.reference;
  auto ref_line = [&](const std::string& name) -> std::string {
    const Column* c = ref.find(name);
    return c ? ", " + fmt(c->value) + " with lines dashtype 2 lc rgb 'black' title '" + name + "'" : "";
  };
  auto has = [&](const std::string& name) { return !table.rows.empty() && table.rows.front().find(name); };

  out << "# gnuplot script; run with: gnuplot " << csv_path.stem().string() << ".gp\n"
      << "set datafile separator ','\n"
      << "set datafile commentschars '#'\n"
      << "set key autotitle columnhead\n"
      << "set terminal pngcairo size 1400,1000 enhanced\n"
      << "set output '" << png.string() << "'\n"
      << "set xlabel 'R (bohr)'\n"
      << "set logscale x\n"
      << "set multiplot layout 2,2\n";
  out << "set title 'Density: total, additive, nonadditive'\n"
      << "plot '" << csv << "' using 'R':'S_total' with linespoints, '' using 'R':'S_add' with linespoints, "
      << "'' using 'R':'S_nadd' with linespoints" << ref_line("S_limit") << '\n';
  out << "set title 'Density: net and overlap'\n"
      << "plot '" << csv << "' using 'R':'S_net_1' with linespoints, '' using 'R':'S_overlap_1_2' with linespoints"
      << ref_line("S_atom") << '\n';
  out << "set title 'Shape function'\n"
      << "plot '" << csv << "' using 'R':'Ssig_total' with linespoints, '' using 'R':'Ssig_nadd' with linespoints"
      << ref_line("Ssig_limit") << '\n';
  out << "set title 'Renyi entropies'\n";
  std::string plot;
  for (const auto& c : ref.columns) {
    const auto pos = c.name.find("_limit");
    if (c.name[0] != 'S' || c.name[1] != 'a' || pos == std::string::npos || c.name.find("shape") != std::string::npos)
      continue;
    const std::string total = c.name.substr(0, pos) + "_total";
    if (!has(total)) continue;
    plot += std::string(plot.empty() ? "plot '" + csv + "'" : ", ''") + " using 'R':'" + total +
            "' with linespoints" + ref_line(c.name);
  }
  out << (plot.empty() ? "plot '" + csv + "' using 'R':'Ssig_total' with linespoints" : plot) << '\n';
  out << "unset multiplot\n";
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct Common {
  GridOptions grid;
  std::vector<double> alphas;
  std::string units = "nats";
  std::string out;
  std::string format;
  std::string convention = "raw";
  std::string config;
  unsigned threads = 0;
};

void add_grid_flags(CLI::App* app, GridOptions& g) {
  app->add_option("--n-radial", g.n_radial, "Radial points per atom")->check(CLI::PositiveNumber);
  app->add_option("--lebedev", g.lebedev, "Angular (Lebedev) points per radial shell");
  app->add_option("--stiffness", g.stiffness, "Becke cell stiffness k")->check(CLI::PositiveNumber);
  app->add_flag("--no-size-adjust{false}", g.size_adjust, "Disable Becke atomic size adjustment");
}

void add_output_flags(CLI::App* app, Common& c) {
  app->add_option("--units", c.units, "Entropy units")->check(CLI::IsMember({"nats", "bits"}));
  app->add_option("--out", c.out, "Output path (stdout when omitted)");
  app->add_option("--format", c.format, "csv or json (default from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_alphas(CLI::App* app, Common& c) {
  app->add_option("--alphas", c.alphas, "Renyi orders, comma separated")->delimiter(',');
}

void add_convention(CLI::App* app, Common& c) {
  app->add_option("--wfn-convention", c.convention,
                  "MO coefficients multiply raw (unnormalized) or normalized primitives")
      ->check(CLI::IsMember({"raw", "normalized"}));
}

// Flat key=value file; keys are long option names without dashes. Values
// only fill options that were not given on the command line.
void apply_config(CLI::App* app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw ParseError(path, number, "config", "expected key=value");
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    for (char& ch : key)
      if (ch == '_') ch = '-';
    if (key == "config") throw ParseError(path, number, "config", "nested config files are not supported");
    CLI::Option* opt = app->get_option_no_throw("--" + key);
    if (!opt) throw ParseError(path, number, "config", "unknown key '" + key + "'");
    if (opt->count() > 0) continue;  // command line wins
    try {
      opt->add_result(value);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ParseError(path, number, "config", std::string("bad value for ") + key + ": " + e.what());
    }
  }
}

Units parse_units(const std::string& s) { return s == "bits" ? Units::Bits : Units::Nats; }

PrimitiveConvention parse_convention(const std::string& s) {
  return s == "normalized" ? PrimitiveConvention::Normalized : PrimitiveConvention::Raw;
}

Format resolve_format(const Common& c) {
  if (c.format == "json") return Format::Json;
  if (c.format == "csv") return Format::Csv;
  return std::filesystem::path(c.out).extension() == ".json" ? Format::Json : Format::Csv;
}

void emit(const Table& t, const Common& c, bool plot_script) {
  const Format f = resolve_format(c);
  auto write = [&](std::ostream& os) {
    if (f == Format::Json) write_json(os, t);
    else write_csv(os, t);
  };
  if (c.out.empty()) {
    write(std::cout);
  } else {
    std::ofstream os(c.out);
    if (!os) throw Error("cannot write " + c.out);
    write(os);
  }
  if (plot_script) {
    std::filesystem::path gp = c.out;
    gp.replace_extension(".gp");
    std::ofstream os(gp);
    if (!os) throw Error("cannot write " + gp.string());
    write_plot_script(os, std::filesystem::path(c.out).filename(), t);
  }
}

int report(const Table& t) {
  for (const auto& f : t.failures) std::cerr << "identity check failed: " << f << '\n';
  return t.failures.empty() ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Shannon and Renyi entropy partitions of molecular electron densities"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  // sweep
  SweepConfig sweep;
  std::string method = "fci";
  bool plot = false;
  auto* sw = app.add_subcommand("sweep", "Dissociation sweep of a built-in H2 model");
  sw->add_option("--method", method, "hf, hl or fci")->check(CLI::IsMember({"hf", "hl", "fci"}));
  sw->add_option("--distances", sweep.distances, "Internuclear distances in bohr, comma separated")
      ->delimiter(',');
  add_alphas(sw, c);
  add_grid_flags(sw, c.grid);
  add_output_flags(sw, c);
  sw->add_flag("--emit-plot-script", plot, "Write a gnuplot script next to the CSV output");
  sw->add_flag("--strict-limits", sweep.strict_limits, "Also assert the limits at the largest R");
  sw->add_option("--config", c.config, "key=value configuration file");

  // analyze
  std::string wfn_path;
  auto* an = app.add_subcommand("analyze", "Decompose the density of a .wfn file");
  an->add_option("wfn", wfn_path, "AIM .wfn file")->required();
  add_alphas(an, c);
  add_grid_flags(an, c.grid);
  add_output_flags(an, c);
  add_convention(an, c);
  an->add_option("--config", c.config, "key=value configuration file");

  // atom
  std::string atom_wfn;
  auto* at = app.add_subcommand("atom", "Atomic reference entropies (STO-6G H or a 1-center .wfn)");
  at->add_option("--wfn", atom_wfn, "Single-center .wfn file");
  add_alphas(at, c);
  add_grid_flags(at, c.grid);
  add_output_flags(at, c);
  add_convention(at, c);
  at->add_option("--config", c.config, "key=value configuration file");

  // grid-dump
  double dump_distance = 1.4;
  std::string dump_wfn;
  auto* gd = app.add_subcommand("grid-dump", "Write the molecular grid as CSV");
  gd->add_option("--distance", dump_distance, "H2 internuclear distance in bohr")->check(CLI::PositiveNumber);
  gd->add_option("--wfn", dump_wfn, "Take the geometry from a .wfn file instead");
  add_grid_flags(gd, c.grid);
  gd->add_option("--out", c.out, "Output path (stdout when omitted)");

  // export-wfn
  double export_distance = 1.4;
  bool legacy = false;
  auto* ex = app.add_subcommand("export-wfn", "Write a built-in model (or the H atom) as a .wfn file");
  ex->add_option("--method", method, "hf, hl, fci or atom")->check(CLI::IsMember({"hf", "hl", "fci", "atom"}));
  ex->add_option("--distance", export_distance, "Internuclear distance in bohr")->check(CLI::PositiveNumber);
  ex->add_flag("--legacy-widths", legacy, "Use the classic fixed field widths (8 significant digits)");
  ex->add_option("--out", c.out, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    for (auto* sub : {sw, an, at})
      if (sub->parsed() && !c.config.empty()) apply_config(sub, c.config);
    set_worker_threads(c.threads);

    if (sw->parsed()) {
      sweep.method = parse_method(method);
      sweep.alphas = c.alphas;
      sweep.grid = c.grid;
      sweep.units = parse_units(c.units);
      if (plot && (c.out.empty() || resolve_format(c) != Format::Csv))
        throw Error("--emit-plot-script needs CSV output written to --out");
      const Table t = run_sweep(sweep);
      emit(t, c, plot);
      return report(t);
    }
    if (an->parsed()) {
      const Table t = run_analyze(wfn_path, c.alphas, c.grid, parse_convention(c.convention), parse_units(c.units));
      emit(t, c, false);
      return report(t);
    }
    if (at->parsed()) {
      std::optional<std::filesystem::path> p;
      if (!atom_wfn.empty()) p = atom_wfn;
      const Table t = run_atom(p, c.alphas, c.grid, parse_convention(c.convention), parse_units(c.units));
      emit(t, c, false);
      return report(t);
    }
    if (gd->parsed()) {
      Molecule m = dump_wfn.empty() ? homonuclear_diatomic("H", dump_distance)
                                    : molecule_from_wfn(read_wfn_file(dump_wfn));
      const MolecularGrid g = make_grid(m, c.grid);
      if (c.out.empty()) {
        write_grid_csv(std::cout, g);
      } else {
        std::ofstream os(c.out);
        if (!os) throw Error("cannot write " + c.out);
        write_grid_csv(os, g);
      }
      return 0;
    }
    if (ex->parsed()) {
      WfnDocument doc;
      char title[96];
      if (method == "atom") {
        const AtomModel a = atom_reference();
        doc = make_wfn("H atom STO-6G", a.molecule, a.primitives, a.orbitals, a.energy);
      } else {
        const H2Model m = build_h2_model(parse_method(method), export_distance);
        std::snprintf(title, sizeof title, "H2 %s STO-6G R=%.10g bohr", std::string(to_string(m.method)).c_str(),
                      export_distance);
        doc = make_wfn(title, m.molecule, m.primitives, m.orbitals, m.energy);
      }
      const std::string text = write_wfn(doc, {.legacy_widths = legacy});
      if (c.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream os(c.out);
        if (!os) throw Error("cannot write " + c.out);
        os << text;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace entropart::cli
