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

#ifndef LIEWIDTH_DEMO_HPP
#define LIEWIDTH_DEMO_HPP

#include <string>
#include <string_view>

namespace liewidth {

struct DemoParams {
  std::string p = "z^2 - 1";  // dan and eomega contexts
  std::string poles = "0,1";  // ratcurve context
};

struct DemoOutput {
  std::string text;
  bool replay_ok = false;
};

/// Decomposes `element` in one of the contexts "torus", "dan", "eomega",
/// "ratcurve" and replays the result. Throws liewidth::Error.
DemoOutput demo_decompose(std::string_view context, std::string_view element, const DemoParams& params = {});

}  // namespace liewidth

#endif  // LIEWIDTH_DEMO_HPP
