// Copyright 2026 The ferrosim Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ferro/cli/config.hpp"
#include "ferro/cli/report.hpp"
#include "ferro/cli/run.hpp"
#include "ferro/cli/units.hpp"
#include "ferro/error.hpp"

using namespace ferro;
using namespace ferro::cli;

namespace {

std::string error_code(const std::string& text) {
  try {
    parse_experiment_config(text);
  } catch (const ConfigError& e) {
    return e.code();
  }
  return "";
}

std::string error_message(const std::string& text) {
  try {
    parse_experiment_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

const char* kSmallSweep = R"(kind = nc-sweep
seed = 5

[material]
alpha = -4.6e8 m/F
beta = 9.8e9 m^5/(C^2 F)
k_dw = 2e-9 m^3/F

[geometry]
t_f = 11.6nm
t_d = 13.5 nm
n_x = 4
n_y = 4

[init]
mode = random
noise = 1.5e-4 C/m^2

[sweep]
segment.1 = 0 V, 3 V, 1e5 V/s, 31
segment.2 = 3 V, -3 V, 1e5 V/s, 61
)";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ferrosim_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("quantity parsing") {
  CHECK(parse_quantity("11.6nm", Dimension::kLength, "t_f", 1) == doctest::Approx(11.6e-9));
  CHECK(parse_quantity("11.6 nm", Dimension::kLength, "t_f", 1) == doctest::Approx(11.6e-9));
  CHECK(parse_quantity("1.5e-4 C/m^2", Dimension::kPolarization, "noise", 1) == 1.5e-4);
  CHECK(parse_quantity("20 uC/cm^2", Dimension::kPolarization, "p0", 1) == doctest::Approx(0.2));
  CHECK(parse_quantity("1e19 cm^-3", Dimension::kDensity, "n_d", 1) == doctest::Approx(1e25));
  CHECK(parse_quantity("100 Ohm m", Dimension::kResistivity, "rho", 1) == 100.0);
  CHECK(parse_quantity("9.8e9 m^5/(C^2 F)", Dimension::kBeta, "beta", 1) == 9.8e9);
  CHECK(parse_quantity("+2", Dimension::kNone, "n_x", 1) == 2.0);
  CHECK_THROWS_AS(parse_quantity("13.5", Dimension::kLength, "t_d", 1), ConfigError);
  CHECK_THROWS_AS(parse_quantity("13.5 s", Dimension::kLength, "t_d", 1), ConfigError);
  CHECK_THROWS_AS(parse_quantity("2 nm", Dimension::kNone, "n_x", 1), ConfigError);
  CHECK_THROWS_AS(parse_quantity("abc nm", Dimension::kLength, "t_d", 1), ConfigError);
  CHECK_THROWS_AS(parse_quantity("inf nm", Dimension::kLength, "t_d", 1), ConfigError);
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.0, 1.0, -3.25e-17, 0.1, 1.0 / 3.0, 6.02214076e23}) {
    CHECK(std::stod(format_number(x)) == x);
  }
  CHECK(format_quantity(1e-9, Dimension::kLength).find(" m") != std::string::npos);
}

TEST_CASE("config errors") {
  SUBCASE("unitless length") {
    const std::string text = "kind = stability-check\n[material]\nalpha = -4.6e8 m/F\n[geometry]\nt_d = 13.5\n";
    CHECK(error_code(text) == "E_UNIT");
  }
  SUBCASE("duplicate key reports both lines") {
    const std::string text = "kind = stability-check\n[material]\nalpha = -4.6e8 m/F\nalpha = -4e8 m/F\n[geometry]\n";
    CHECK(error_code(text) == "E_DUPLICATE");
    const std::string msg = error_message(text);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("line 4") != std::string::npos);
  }
  SUBCASE("duplicate section") {
    CHECK(error_code("kind = stability-check\n[material]\n[geometry]\n[material]\n") == "E_DUPLICATE");
  }
  SUBCASE("unknown key") {
    CHECK(error_code("kind = stability-check\n[material]\nalpah = -4.6e8 m/F\n[geometry]\n") == "E_UNKNOWN_KEY");
  }
  SUBCASE("unknown section") {
    CHECK(error_code("kind = stability-check\n[material]\n[geometry]\n[foo]\n") == "E_UNKNOWN_KEY");
  }
  SUBCASE("section unused by the kind") {
    CHECK(error_code("kind = stability-check\n[material]\n[geometry]\n[barrier]\n") == "E_UNKNOWN_KEY");
  }
  SUBCASE("missing section") {
    CHECK(error_code("kind = stability-check\n[material]\n") == "E_MISSING");
  }
  SUBCASE("missing kind") {
    CHECK(error_code("[material]\n[geometry]\n") == "E_MISSING");
  }
  SUBCASE("malformed line") {
    CHECK(error_code("kind = stability-check\n[material\n") == "E_PARSE");
  }
  SUBCASE("segment gap") {
    std::string text = kSmallSweep;
    text.replace(text.find("segment.2"), 9, "segment.3");
    CHECK(error_code(text) == "E_MISSING");
  }
}

TEST_CASE("config values") {
  const auto spec = parse_experiment_config(kSmallSweep);
  CHECK(spec.kind == ExperimentKind::kNcSweep);
  CHECK(spec.seed == 5);
  CHECK(spec.init.seed == 5);
  CHECK(spec.geometry.t_f == doctest::Approx(11.6e-9));
  CHECK(spec.geometry.n_x == 4);
  REQUIRE(spec.sweep.segments.size() == 2);
  CHECK(spec.sweep.segments[1].v_end == -3.0);
  CHECK_NOTHROW(validate(spec));
}

TEST_CASE("manifest round trip") {
  for (auto kind : {ExperimentKind::kNcSweep, ExperimentKind::kStabilityCheck, ExperimentKind::kFtjRead,
                    ExperimentKind::kFtjProgram, ExperimentKind::kFefetIdvg}) {
    const std::string first = write_manifest(default_spec(kind));
    const auto reparsed = parse_experiment_config(first);
    CHECK(reparsed.kind == kind);
    CHECK(write_manifest(reparsed) == first);
  }
  const std::string m = write_manifest(parse_experiment_config(kSmallSweep));
  CHECK(write_manifest(parse_experiment_config(m)) == m);
}

TEST_CASE("trace csv") {
  lgd::Trace trace;
  CHECK(nc_trace_csv(trace) == "t_s,v_t_V,p_avg_Cm2,v_d_avg_V,q_md_Cm2,gain,energy_J\n");
  trace.records = {{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0},
                   {1e-6, 0.1, 0.01, 0.05, 0.02, -1e-20, 0},
                   {2e-6, 0.2, 0.03, 0.1, 0.04, -2e-20, 0}};
  const std::string csv = nc_trace_csv(trace);
  std::istringstream in(csv);
  std::string line;
  int lines = 0;
  std::getline(in, line);
  ++lines;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++lines;
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(cells, cell, ',')) values.push_back(std::stod(cell));
    REQUIRE(values.size() == 7);
    CHECK(values[0] == trace.records[row].t);
    CHECK(values[1] == trace.records[row].v_t);
    CHECK(values[2] == trace.records[row].p_avg);
    CHECK(values[6] == trace.records[row].energy);
    ++row;
  }
  CHECK(lines == 4);

  trace.snapshots = {{1, 2, 3, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}};
  std::istringstream snap(snapshot_csv(trace));
  std::getline(snap, line);
  CHECK(std::count(line.begin(), line.end(), ',') == 5);
}

TEST_CASE("summary") {
  Summary s;
  s.add("name", "abc");
  s.add("count", std::size_t{3});
  s.add("flag", true);
  s.add("x", 0.5);
  CHECK(s.get("name") == "abc");
  CHECK(s.get("count") == "3");
  CHECK(s.get("flag") == "true");
  CHECK(std::stod(s.get("x")) == 0.5);
  CHECK(s.get("missing").empty());
  CHECK(s.text().find("count=3\n") != std::string::npos);
}

TEST_CASE("reruns are byte identical") {
  const auto spec = parse_experiment_config(kSmallSweep);
  const auto a = scratch("a"), b = scratch("b");
  const auto ra = run_experiment(spec, a);
  run_experiment(spec, b);
  REQUIRE_FALSE(ra.files.empty());
  for (const auto& f : ra.files) {
    const auto name = f.filename();
    CHECK(read_file(a / name) == read_file(b / name));
  }
  CHECK(std::filesystem::exists(a / "trace.csv"));
  CHECK(std::filesystem::exists(a / "summary.txt"));
  CHECK(std::filesystem::exists(a / "manifest.cfg"));
  const auto again = parse_experiment_config(read_file(a / "manifest.cfg"));
  CHECK(write_manifest(again) == read_file(a / "manifest.cfg"));
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}

TEST_CASE("exit codes") {
  CHECK(exit_code(ErrorCategory::kConfig) == 2);
  CHECK(exit_code(ErrorCategory::kNumerical) == 3);
  CHECK(exit_code(ErrorCategory::kIo) == 4);
  CHECK(exit_code(InvalidParameter("x").category()) == 2);
  CHECK(exit_code(NonConvergence("x", 1.0).category()) == 3);
  CHECK(exit_code(IoError("x").category()) == 4);
}

TEST_CASE("unwritable output directory") {
  const auto spec = parse_experiment_config(
      "kind = stability-check\n[material]\n[geometry]\n");
  const auto file = scratch("file");
  std::ofstream(file) << "x";
  CHECK_THROWS_AS(run_experiment(spec, file / "sub"), IoError);
  std::filesystem::remove_all(file);
}
