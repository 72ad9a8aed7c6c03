#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entropart/models.hpp"
#include "entropart/quadrature.hpp"
#include "entropart/wfn.hpp"

namespace entropart::cli {

enum class Format { Csv, Json };
enum class Units { Nats, Bits };

struct GridOptions {
  int n_radial = 400;
  int lebedev = 194;
  int stiffness = 3;
  bool size_adjust = true;

  AtomicGridSpec spec() const;
};

struct SweepConfig {
  Method method = Method::FullCI;
  std::vector<double> distances;  // bohr, strictly positive and increasing
  std::vector<double> alphas;     // Renyi orders, > 0 and != 1
  GridOptions grid;
  Units units = Units::Nats;
  bool strict_limits = false;
};

/// Throws entropart::Error when the configuration violates its invariants.
void validate(const SweepConfig& config);

struct Column {
  std::string name;
  double value = 0.0;
  bool entropy = false;  // converted when units = bits
};

struct Row {
  std::vector<Column> columns;

  void add(std::string name, double value, bool entropy = true) {
    columns.push_back({std::move(name), value, entropy});
  }
  const Column* find(const std::string& name) const;
  double at(const std::string& name) const;  // throws if missing
};

/// Output of every subcommand: data rows, an optional reference block and
/// the list of violated identities (empty on success).
struct Table {
  std::string command;
  std::vector<Row> rows;
  Row reference;
  std::vector<std::string> failures;
};

Table run_sweep(const SweepConfig& config);
Table run_analyze(const std::filesystem::path& wfn, const std::vector<double>& alphas,
                  const GridOptions& grid, PrimitiveConvention convention, Units units);
/// Isolated STO-6G hydrogen, or the single-center density of a .wfn file.
Table run_atom(const std::optional<std::filesystem::path>& wfn, const std::vector<double>& alphas,
               const GridOptions& grid, PrimitiveConvention convention, Units units);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
/// gnuplot script plotting the CSV at `csv_path` with atomic-limit lines.
void write_plot_script(std::ostream& out, const std::filesystem::path& csv_path, const Table& table);

/// Column label for a Renyi order ("a2", "a0.5").
std::string alpha_label(double alpha);

/// Entry point shared by the executable and the tests. Exit codes:
/// 0 success, 1 identity check failed, 2 usage error, 3 input or numerical error.
int run(int argc, char** argv);

}  // namespace entropart::cli
