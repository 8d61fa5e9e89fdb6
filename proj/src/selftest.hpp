// Copyright 2026 The ehtp Authors
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

#include <cstdint>
#include <string>
#include <vector>

namespace ehtp {

inline constexpr std::uint64_t kDefaultSelftestSeed = 0x20260415ULL;

struct SelftestOptions {
  std::uint64_t seed = kDefaultSelftestSeed;
  bool quick = false;
  int threads = 1;
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // largest residual seen, or 0 for pure verdict checks
  double tol = 0.0;
  std::string first_failure;
};

struct SelftestResult {
  int exit_code = 0;
  std::vector<PropertyResult> properties;
  std::string table;
};

/// Randomized invariant suite. With `quick`, every trial count is divided by
/// ten (minimum one).
SelftestResult run_selftest(const SelftestOptions& options);

}  // namespace ehtp
