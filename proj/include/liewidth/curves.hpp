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

#ifndef LIEWIDTH_CURVES_HPP
#define LIEWIDTH_CURVES_HPP

#include <optional>
#include <string>

#include "liewidth/rings.hpp"

namespace liewidth {

/// Order at the place at infinity; +infinity for the zero function.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long v) { return Valuation(v); }

  bool is_infinite() const { return !value_; }
  long value() const;
  std::string str() const;

  friend Valuation operator+(Valuation a, Valuation b);
  friend Valuation operator+(Valuation a, long b);
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  explicit Valuation(long v) : value_(v) {}

  std::optional<long> value_;
};

/// ord(a + b y) = min(-2 deg a, -2 deg b - (2g+1)).
Valuation ord_inf(const CurveElement& e);

/// tau = 2y d/dx + h'(x) d/dy applied to a + b y: (2h b' + h' b) + 2a' y.
CurveElement tau_apply(const CurveElement& e);

/// Coefficient of [f tau, g tau] = (f tau(g) - g tau(f)) tau.
CurveElement field_bracket(const CurveElement& f, const CurveElement& g);

/// Order of the field f tau: (2 - 2g) + ord f.
Valuation ord_field(const CurveElement& f);

/// Coefficient of the extremal monomial of e (e nonzero).
Rational leading_coefficient(const CurveElement& e);

struct LambdaStep {
  Rational lambda;
  CurveElement reduced_f;  // f - lambda g
};

enum class Conclusion { BracketIsZero, OrderMismatch };

struct ObstructionCertificate {
  std::optional<LambdaStep> lambda_step;
  Valuation ord_f = Valuation::infinity();  // after the lambda step
  Valuation ord_g = Valuation::infinity();
  Valuation ord_bracket = Valuation::infinity();  // order of the bracket field, computed directly
  Valuation ord_tau = Valuation::infinity();
  Conclusion conclusion = Conclusion::BracketIsZero;
  CurveElement bracket;    // coefficient of [f tau, g tau]
  bool bracket_is_tau = false;
};

ObstructionCertificate obstruction_certificate(const CurveElement& f, const CurveElement& g);

/// True if the certificate's valuations satisfy
/// ord_bracket = 2(2-2g) + ord f + ord g - 1 < 2 - 2g = ord_tau (OrderMismatch),
/// or the bracket vanishes (BracketIsZero), and bracket_is_tau is false.
bool certificate_consistent(const ObstructionCertificate& c, int genus);

struct CentralizerResult {
  bool proportional = false;
  Rational lambda;       // g = lambda f when proportional
  CurveElement witness;  // nonzero bracket coefficient otherwise
};

CentralizerResult centralizer_check(const CurveElement& f, const CurveElement& g);

struct NoEigenCertificate {
  bool holds = false;  // [f tau, g tau] != lambda g tau
  CurveElement bracket;
  /// Valuation argument, present when ord f != ord g.
  std::optional<std::string> valuation_remark;
};

NoEigenCertificate no_eigen_check(const CurveElement& f, const CurveElement& g, const Rational& lambda);

struct TauSolve {
  std::optional<CurveElement> solution;  // F with tau(F) = f
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
};

TauSolve solve_tau_equation(const CurveElement& f);

/// dim of span{monomials of order >= -max_pole} modulo the image of tau.
int coker_dimension(const CurveRingPtr& ring, int max_pole);

}  // namespace liewidth

#endif  // LIEWIDTH_CURVES_HPP
