// Copyright 2026 The Authors.
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

#ifndef CGEO_VERIFY_HPP_
#define CGEO_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cgeo {

// One verified claim. The detail string contains only deterministic counts
// and pins, so a report is byte-identical across runs with one seed.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  // Largest ground set used for the randomized corpora (clamped to the
  // stated sizes of the individual criteria; raising it past 6 changes
  // nothing).
  int max_n = 6;
  std::uint64_t seed = 1;
  // Stated workloads; the defaults are the sizes the acceptance gate runs.
  std::uint64_t n4_samples = 10000;
  std::uint64_t join_lists = 1000;
  std::uint64_t sym_trials = 10000;
};

// Runs criteria 1 through 10 and returns one result per criterion.
std::vector<CriterionResult> run_battery(const VerifyOptions& options);

// One line per criterion: PASS/FAIL, id, name, detail.
std::string render_battery(const std::vector<CriterionResult>& results);

struct VerifyOutcome {
  std::vector<CriterionResult> results;  // criteria 1..11
  std::string report;
  bool all_pass = false;
};

// Runs the battery twice with the same options and adds the determinism
// criterion: the two rendered reports must agree byte for byte.
VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace cgeo

#endif  // CGEO_VERIFY_HPP_
