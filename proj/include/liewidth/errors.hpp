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

#ifndef LIEWIDTH_ERRORS_HPP
#define LIEWIDTH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace liewidth {

// Numeric values are part of the C ABI (see liewidth.h); append only.
enum class Errc : int {
  MixedSpaces = 1,
  UnknownVariable = 2,
  NonIntegrable = 3,
  NonInvertibleSubstitution = 4,
  NotUnivariate = 5,
  SyntaxError = 6,
  NegativeExponentOnAffineVar = 7,
  NotSquarefree = 8,
  InvalidRing = 9,
  MixedRings = 10,
  NotInImage = 11,
  UndeclaredPole = 12,
  NotDivergenceFree = 13,
  NeedTwoVariables = 14,
  WrongDegree = 15,
  NotInEOmega = 16,
  NonzeroConstantTerm = 17,
  ZeroInput = 18,
  IncompleteReduction = 19,
  NotTangent = 20,
  InvalidArgument = 21,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace liewidth

#endif  // LIEWIDTH_ERRORS_HPP
