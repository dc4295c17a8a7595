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

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ferro/cli/config.hpp"
#include "ferro/cli/run.hpp"
#include "ferro/error.hpp"
#include "ferro/parallel.hpp"

namespace {

struct Args {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  bool validate_quasi_static = false;
  bool snapshots = false;
  std::size_t workers = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ferro::IoError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(ferro::cli::ExperimentKind kind, const Args& args) {
  using namespace ferro;
  try {
    auto spec = cli::parse_experiment_config(read_file(args.config), kind);
    if (spec.kind != kind) {
      throw ConfigError("E_PARAM", std::string("config declares kind ") + cli::to_string(spec.kind) +
                                       " but the subcommand is " + cli::to_string(kind));
    }
    if (args.seed) {
      spec.seed = *args.seed;
      spec.init.seed = *args.seed;
    }
    if (args.snapshots) spec.snapshots = true;
    if (args.validate_quasi_static) spec.validate_quasi_static = true;
    if (args.workers > 0) set_default_workers(args.workers);
    const auto report = cli::run_experiment(spec, args.out);
    std::cout << report.summary.text();
    return 0;
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "] " << to_string(e.category()) << ": " << e.what() << '\n';
    return cli::exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL] numerical: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-domain ferroelectric device simulator"};
  app.require_subcommand(1);
  Args args;
  struct Command {
    const char* name;
    ferro::cli::ExperimentKind kind;
    const char* help;
  };
  const Command commands[] = {
      {"nc-sweep", ferro::cli::ExperimentKind::kNcSweep, "Voltage sweep of an MFIM capacitor"},
      {"stability-check", ferro::cli::ExperimentKind::kStabilityCheck, "Single-domain NC stability test"},
      {"ftj-read", ferro::cli::ExperimentKind::kFtjRead, "Read current of the set and reset states"},
      {"ftj-program", ferro::cli::ExperimentKind::kFtjProgram, "Reset/write/read multi-level programming"},
      {"fefet-idvg", ferro::cli::ExperimentKind::kFefetIdvg, "Quasi-static FeFET transfer curve"},
  };
  std::optional<ferro::cli::ExperimentKind> chosen;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", args.config, "Experiment config file")->required();
    sub->add_option("--out", args.out, "Output directory")->required();
    sub->add_option("--seed", args.seed, "Override the config seed");
    sub->add_flag("--validate-quasi-static", args.validate_quasi_static,
                  "Rerun at half the ramp rate and compare (nc-sweep)");
    sub->add_flag("--snapshots", args.snapshots, "Write per-domain polarization snapshots");
    sub->add_option("--workers", args.workers, "Worker threads (0 keeps one)");
    sub->callback([&chosen, kind = c.kind] { chosen = kind; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run(*chosen, args);
}
