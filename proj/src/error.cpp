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

#include "ferro/error.hpp"

namespace ferro {

const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kConfig:
      return "config";
    case ErrorCategory::kNumerical:
      return "numerical";
    case ErrorCategory::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace ferro
