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

// Command-line front end over the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liewidth/liewidth.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int report_error() {
  std::cerr << "error: " << lw_last_error() << "\n";
  return kExitUsage;
}

struct Owned {
  char* s = nullptr;
  ~Owned() { lw_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie and Poisson bracket computations with replayable certificates", "liewidth"};
  app.set_version_flag("--version", lw_version());
  app.require_subcommand(1);

  std::string suite;
  std::vector<std::string> p, h, poles, spaces;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  int degree_bound = -1;
  std::string out_path;
  bool json_stdout = false;

  CLI::App* verify = app.add_subcommand("verify", "Run seeded property suites and certificate replays");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("suite", suite, "all, torus-poisson, danielewski, curve, width1 or ratcurve")
      ->required()
      ->check(CLI::IsMember({"all", "torus-poisson", "danielewski", "curve", "width1", "ratcurve"}));
  verify->add_option("--p", p, "Danielewski polynomial p(z); repeatable");
  verify->add_option("--h", h, "hyperelliptic polynomial h(x); repeatable");
  verify->add_option("--poles", poles, "comma-separated rational poles; repeatable");
  verify->add_option("--space", spaces, "space signature such as a:2,t:1; repeatable");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "samples per check (default: per-check)")->check(CLI::PositiveNumber);
  verify->add_option("--degree-bound", degree_bound, "degree bound for random elements")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out_path, "write the JSON report to this file");
  verify->add_flag("--json", json_stdout, "print the JSON report instead of text");

  std::string context, element, demo_p, demo_poles;
  CLI::App* demo = app.add_subcommand("demo", "Single-shot demonstrations");
  demo->require_subcommand(1);
  CLI::App* decompose = demo->add_subcommand("decompose", "Decompose one element and replay the result");
  decompose->add_option("--context", context, "torus, dan, eomega or ratcurve")
      ->required()
      ->check(CLI::IsMember({"torus", "dan", "eomega", "ratcurve"}));
  decompose->add_option("element", element, "element in the shared polynomial grammar")->required();
  decompose->add_option("--p", demo_p, "Danielewski polynomial p(z) (default z^2 - 1)");
  decompose->add_option("--poles", demo_poles, "comma-separated poles (default 0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*decompose) {
    Owned text;
    int ok = 0;
    const lw_status s = lw_demo_decompose(context.c_str(), element.c_str(), demo_p.empty() ? nullptr : demo_p.c_str(),
                                          demo_poles.empty() ? nullptr : demo_poles.c_str(), &text.s, &ok);
    if (s != LW_OK) return report_error();
    std::cout << text.s;
    return ok ? kExitPass : kExitFail;
  }

  nlohmann::json cfg = {{"seed", seed}};
  if (samples > 0) cfg["samples"] = samples;
  if (degree_bound >= 0) cfg["degree_bound"] = degree_bound;
  if (!p.empty()) cfg["p"] = p;
  if (!h.empty()) cfg["h"] = h;
  if (!poles.empty()) cfg["poles"] = poles;
  if (!spaces.empty()) cfg["space"] = spaces;
  const std::string cfg_text = cfg.dump();

  Owned text, json;
  int all_passed = 0;
  const bool need_json = json_stdout || !out_path.empty();
  const lw_status s =
      lw_verify(suite.c_str(), cfg_text.c_str(), json_stdout ? nullptr : &text.s, need_json ? &json.s : nullptr, &all_passed);
  if (s != LW_OK) return report_error();

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << json.s;
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::cout << (json_stdout ? json.s : text.s);
  return all_passed ? kExitPass : kExitFail;
}
