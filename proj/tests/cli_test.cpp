#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "app.hpp"
#include "entropart/error.hpp"

namespace fs = std::filesystem;
namespace cli = entropart::cli;

namespace {

fs::path fixture(const std::string& name) { return fs::path(ENTROPART_FIXTURE_DIR) / name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("entropart_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct Outcome {
  int code;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "entropart");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream err;
  auto* old = std::cerr.rdbuf(err.rdbuf());
  const int code = cli::run(static_cast<int>(argv.size()), argv.data());
  std::cerr.rdbuf(old);
  return {code, err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Csv {
  std::map<std::string, double> reference;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  double at(std::size_t row, const std::string& name) const {
    for (std::size_t k = 0; k < header.size(); ++k)
      if (header[k] == name) return rows.at(row).at(k);
    throw std::out_of_range(name);
  }
  bool has(const std::string& name) const {
    return std::find(header.begin(), header.end(), name) != header.end();
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

Csv read_csv(const fs::path& p) {
  Csv csv;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# reference,", 0) == 0) {
      const auto f = split(line);
      csv.reference[f[1]] = std::stod(f[2]);
    } else if (csv.header.empty()) {
      csv.header = split(line);
    } else {
      std::vector<double> row;
      for (const auto& f : split(line)) row.push_back(std::stod(f));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

}  // namespace

TEST(CliSweep, FullCiWithLimits) {
  TempDir dir;
  const auto out = dir / "fci.csv";
  const auto r = run_cli({"sweep", "--method", "fci", "--distances", "1.4,4,50", "--alphas", "2",
                          "--strict-limits", "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const Csv csv = read_csv(out);
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_DOUBLE_EQ(csv.at(0, "R"), 1.4);
  EXPECT_DOUBLE_EQ(csv.at(2, "R"), 50.0);
  EXPECT_NEAR(csv.at(2, "S_total"), csv.reference.at("S_limit"), 1e-4);
  EXPECT_NEAR(csv.at(2, "Sa2_total"), csv.reference.at("Sa2_limit"), 1e-4);
  EXPECT_NEAR(csv.at(2, "pa2_1"), 0.5, 1e-8);
  EXPECT_NEAR(csv.at(2, "energy"), csv.reference.at("E_limit"), 1e-6);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NEAR(csv.at(i, "S_add") - csv.at(i, "S_nadd"), csv.at(i, "S_total"), 1e-10);
  EXPECT_TRUE(csv.has("p4_1_2_1_2"));
}

TEST(CliSweep, EmptyAlphasGiveShannonOnly) {
  TempDir dir;
  const auto out = dir / "hf.csv";
  ASSERT_EQ(run_cli({"sweep", "--method", "hf", "--distances", "1.4", "--out", out.string()}).code, 0);
  const Csv csv = read_csv(out);
  for (const auto& name : csv.header) {
    EXPECT_EQ(name.find("a2"), std::string::npos) << name;
    EXPECT_NE(name.rfind("p4", 0), 0u) << name;
  }
  EXPECT_TRUE(csv.has("S_total"));
  EXPECT_TRUE(csv.has("Ssig_overlap_1_2"));
}

TEST(CliSweep, BitsAreNatsOverLogTwo) {
  TempDir dir;
  const std::vector<std::string> base = {"sweep", "--method", "hl", "--distances", "2", "--alphas", "2",
                                         "--n-radial", "200", "--lebedev", "110"};
  auto nats_args = base, bits_args = base;
  nats_args.insert(nats_args.end(), {"--out", (dir / "n.csv").string()});
  bits_args.insert(bits_args.end(), {"--units", "bits", "--out", (dir / "b.csv").string()});
  ASSERT_EQ(run_cli(nats_args).code, 0);
  ASSERT_EQ(run_cli(bits_args).code, 0);
  const Csv n = read_csv(dir / "n.csv"), b = read_csv(dir / "b.csv");
  ASSERT_EQ(n.header, b.header);
  for (std::size_t k = 0; k < n.header.size(); ++k) {
    const std::string& name = n.header[k];
    const bool entropy = name[0] == 'S';
    const double expected = entropy ? n.rows[0][k] / std::log(2.0) : n.rows[0][k];
    EXPECT_NEAR(b.rows[0][k], expected, 1e-14 * std::max(1.0, std::abs(expected))) << name;
  }
  EXPECT_NEAR(b.reference.at("S_atom"), n.reference.at("S_atom") / std::log(2.0), 1e-14);
  EXPECT_DOUBLE_EQ(b.reference.at("E_atom"), n.reference.at("E_atom"));
}

TEST(CliSweep, CsvAndJsonCarryIdenticalValues) {
  TempDir dir;
  const std::vector<std::string> base = {"sweep", "--method", "fci", "--distances", "1.4,3", "--alphas",
                                         "0.5,2", "--n-radial", "200", "--lebedev", "110", "--out"};
  auto a = base, b = base;
  a.push_back((dir / "o.csv").string());
  b.push_back((dir / "o.json").string());
  ASSERT_EQ(run_cli(a).code, 0);
  ASSERT_EQ(run_cli(b).code, 0);
  const Csv csv = read_csv(dir / "o.csv");
  const auto doc = nlohmann::json::parse(slurp(dir / "o.json"));
  ASSERT_EQ(doc["rows"].size(), csv.rows.size());
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = doc["rows"][i];
    for (std::size_t k = 0; k < csv.header.size(); ++k) {
      const std::string& name = csv.header[k];
      double v;
      if (name.rfind("p4_", 0) == 0) {
        std::string key = name.substr(3);
        std::replace(key.begin(), key.end(), '_', ',');
        v = row["p4"][key].get<double>();
      } else {
        v = row[name].get<double>();
      }
      EXPECT_NEAR(v, csv.rows[i][k], 1e-14 * std::max(1.0, std::abs(v))) << name;
    }
  }
  for (const auto& [name, value] : csv.reference)
    EXPECT_NEAR(doc["reference"][name].get<double>(), value, 1e-14 * std::max(1.0, std::abs(value)));
  EXPECT_TRUE(doc["failures"].empty());
}

TEST(CliConfig, CommandLineBeatsFileBeatsDefaults) {
  TempDir dir;
  const auto conf = dir / "run.conf";
  std::ofstream(conf) << "# coarse sweep\n"
                         "method = hl\n"
                         "distances = 1.4,2\n"
                         "n_radial = 150\n"
                         "lebedev=110\n"
                         "units = bits\n";
  const auto out = dir / "c.csv";
  // --units on the command line overrides the file; --lebedev comes from the file.
  ASSERT_EQ(run_cli({"sweep", "--config", conf.string(), "--units", "nats", "--out", out.string()}).code, 0);
  const Csv from_config = read_csv(out);
  ASSERT_EQ(from_config.rows.size(), 2u);

  const auto ref = dir / "r.csv";
  ASSERT_EQ(run_cli({"sweep", "--method", "hl", "--distances", "1.4,2", "--n-radial", "150", "--lebedev",
                     "110", "--out", ref.string()})
                .code,
            0);
  const Csv direct = read_csv(ref);
  EXPECT_EQ(from_config.rows, direct.rows);

  std::ofstream(dir / "bad.conf") << "distances = 1.4\nno_such_key = 3\n";
  const auto bad = run_cli({"sweep", "--config", (dir / "bad.conf").string()});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("bad.conf:2"), std::string::npos) << bad.err;
}

TEST(CliAnalyze, FixtureMatchesSweepRow) {
  TempDir dir;
  ASSERT_EQ(run_cli({"analyze", fixture("h2_hf_r1.4.wfn").string(), "--alphas", "2", "--out",
                     (dir / "a.csv").string()})
                .code,
            0);
  ASSERT_EQ(run_cli({"sweep", "--method", "hf", "--distances", "1.4", "--alphas", "2", "--out",
                     (dir / "s.csv").string()})
                .code,
            0);
  const Csv a = read_csv(dir / "a.csv"), s = read_csv(dir / "s.csv");
  for (const char* name : {"R", "S_total", "S_add", "S_nadd", "S_net_1", "S_overlap_1_2", "Ssig_total",
                           "Sa2_total", "Sa2_nadd", "pa2_1"})
    EXPECT_NEAR(a.at(0, name), s.at(0, name), 1e-8) << name;
  EXPECT_NEAR(a.at(0, "energy"), s.at(0, "energy"), 1e-12);
}

TEST(CliAnalyze, SingleAtomHasNoNonadditivity) {
  TempDir dir;
  ASSERT_EQ(run_cli({"analyze", fixture("h_atom_sto6g.wfn").string(), "--out", (dir / "a.json").string()})
                .code,
            0);
  const auto doc = nlohmann::json::parse(slurp(dir / "a.json"));
  EXPECT_EQ(doc["rows"][0]["S_nadd"].get<double>(), 0.0);
}

TEST(CliAnalyze, CorruptedFileReportsLocation) {
  const auto r = run_cli({"analyze", fixture("h2_truncated.wfn").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("h2_truncated.wfn:10"), std::string::npos) << r.err;
}

TEST(CliAtom, ShapeEqualsDensityForOneElectron) {
  TempDir dir;
  const auto out = dir / "atom.csv";
  ASSERT_EQ(run_cli({"atom", "--alphas", "2", "--out", out.string()}).code, 0);
  const Csv csv = read_csv(out);
  EXPECT_NEAR(csv.at(0, "Ssig_total"), csv.at(0, "S_total"), 1e-15);
  EXPECT_NEAR(csv.at(0, "Sa2_shape"), csv.at(0, "Sa2_total"), 1e-15);
  EXPECT_NEAR(csv.at(0, "S_total"), 3.0 + std::log(M_PI) - 3.0 * std::log(1.24), 1e-3);
}

TEST(CliPlot, ScriptReferencesCsvAndLimits) {
  TempDir dir;
  const auto out = dir / "curve.csv";
  ASSERT_EQ(run_cli({"sweep", "--method", "hf", "--distances", "1.4,3", "--n-radial", "150", "--lebedev",
                     "110", "--emit-plot-script", "--out", out.string()})
                .code,
            0);
  const std::string gp = slurp(dir / "curve.gp");
  EXPECT_NE(gp.find("'curve.csv'"), std::string::npos);
  EXPECT_NE(gp.find("multiplot"), std::string::npos);
  EXPECT_NE(gp.find("S_limit"), std::string::npos);

  EXPECT_EQ(run_cli({"sweep", "--distances", "1.4", "--emit-plot-script"}).code, 3);
}

TEST(CliUsage, BadArgumentsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"sweep", "--method", "ccsd"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  // Invariant violations are reported as input errors.
  EXPECT_EQ(run_cli({"sweep", "--distances", "2,1.4"}).code, 3);
  EXPECT_EQ(run_cli({"sweep", "--distances", "1.4", "--alphas", "1"}).code, 3);
}

TEST(CliValidate, SweepConfigInvariants) {
  cli::SweepConfig c;
  c.distances = {1.4, 2.0};
  EXPECT_NO_THROW(cli::validate(c));
  c.distances = {};
  EXPECT_THROW(cli::validate(c), entropart::Error);
  c.distances = {-1.0};
  EXPECT_THROW(cli::validate(c), entropart::Error);
  c.distances = {1.4};
  c.alphas = {0.0};
  EXPECT_THROW(cli::validate(c), entropart::Error);
  EXPECT_EQ(cli::alpha_label(0.5), "a0.5");
  EXPECT_EQ(cli::alpha_label(2.0), "a2");
}

TEST(CliBinary, GridDumpWritesCsv) {
  TempDir dir;
  const auto out = dir / "grid.csv";
  const std::string cmd = std::string("\"") + ENTROPART_CLI_PATH + "\" grid-dump --distance 2 --n-radial 20 " +
                          "--lebedev 26 --out \"" + out.string() + "\"";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "x,y,z,weight,owner_atom");
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_GT(lines, 500u);
  EXPECT_LE(lines, 2u * 20u * 26u);
}
