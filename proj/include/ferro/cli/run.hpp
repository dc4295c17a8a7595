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

#pragma once

#include <filesystem>
#include <vector>

#include "ferro/cli/config.hpp"
#include "ferro/cli/report.hpp"
#include "ferro/error.hpp"

namespace ferro::cli {

struct RunReport {
  Summary summary;
  std::vector<std::filesystem::path> files;
};

// Runs the experiment and writes into out_dir (created if needed):
// trace.csv, snapshots.csv (nc-sweep with snapshots), summary.txt and
// manifest.cfg. Physics errors propagate as ferro::Error.
RunReport run_experiment(const ExperimentSpec& spec, const std::filesystem::path& out_dir);

// Process exit status for an error category: config 2, numerical 3, I/O 4.
int exit_code(ErrorCategory category);

}  // namespace ferro::cli
