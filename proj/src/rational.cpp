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

#include "liewidth/rational.hpp"

#include <cctype>

#include "liewidth/errors.hpp"

namespace liewidth {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MixedSpaces: return "MixedSpaces";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NonIntegrable: return "NonIntegrable";
    case Errc::NonInvertibleSubstitution: return "NonInvertibleSubstitution";
    case Errc::NotUnivariate: return "NotUnivariate";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NegativeExponentOnAffineVar: return "NegativeExponentOnAffineVar";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::InvalidRing: return "InvalidRing";
    case Errc::MixedRings: return "MixedRings";
    case Errc::NotInImage: return "NotInImage";
    case Errc::UndeclaredPole: return "UndeclaredPole";
    case Errc::NotDivergenceFree: return "NotDivergenceFree";
    case Errc::NeedTwoVariables: return "NeedTwoVariables";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::NotInEOmega: return "NotInEOmega";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::IncompleteReduction: return "IncompleteReduction";
    case Errc::NotTangent: return "NotTangent";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error(Errc::SyntaxError, "bad rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw Error(Errc::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(zn, zd));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace liewidth
