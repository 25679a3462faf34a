/*
   Copyright 2026 The liewidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIEWIDTH_VERIFY_HPP
#define LIEWIDTH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace liewidth {

inline constexpr const char* kVersion = "0.1.0";

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;  // overrides every per-check sample count
  std::optional<int> degree_bound;     // overrides every per-check degree bound
  // Empty lists select the defaults of each suite.
  std::vector<std::string> p;       // Danielewski polynomials in z
  std::vector<std::string> h;       // hyperelliptic polynomials in x
  std::vector<std::string> poles;   // comma-separated pole lists
  std::vector<std::string> spaces;  // space signatures such as "a:1,t:1"
};

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string details;
  nlohmann::json counterexample;  // null when passed
  int criterion = 0;              // acceptance criterion number, 0 if none
  double seconds = 0;             // wall time; not part of the report
};

struct SuiteReport {
  std::string name;
  nlohmann::json params;
  std::vector<CheckResult> checks;
};

struct Report {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<SuiteReport> suites;

  bool all_passed() const;
  std::size_t check_count() const;
  std::size_t failed_count() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// "all", "torus-poisson", "danielewski", "curve", "width1", "ratcurve".
const std::vector<std::string>& suite_names();

/// Runs the selected suites. Ring parameters are validated before anything
/// runs (liewidth::Error with NotSquarefree / InvalidRing / SyntaxError);
/// an unknown suite name raises InvalidArgument.
Report run_verify(std::string_view suite, const VerifyConfig& config);

}  // namespace liewidth

#endif  // LIEWIDTH_VERIFY_HPP
