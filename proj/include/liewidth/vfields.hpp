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

#ifndef LIEWIDTH_VFIELDS_HPP
#define LIEWIDTH_VFIELDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liewidth/poly.hpp"
#include "liewidth/rings.hpp"

namespace liewidth {

/// Polynomial vector field sum_v c_v d/dv on a product of affine lines
/// (affine variables) and one-dimensional tori (Laurent variables).
class VectorField {
 public:
  explicit VectorField(SpacePtr space);
  /// `coeffs[i]` is the coefficient of d/d(var i); missing trailing entries are zero.
  VectorField(SpacePtr space, std::vector<Polynomial> coeffs);
  /// c * d/dv
  static VectorField coordinate(SpacePtr space, std::string_view var, const Polynomial& c);
  /// Parses "x^2*d/dx + (1/2)*t^-1*d/dt".
  static VectorField parse(SpacePtr space, std::string_view text);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return coeffs_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }
  const Polynomial& coeff(std::string_view var) const { return coeffs_[space_->require(var)]; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// The derivation applied to a function: sum_v c_v * d f / dv.
  Polynomial apply(const Polynomial& f) const;

  std::string str() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator-(const VectorField& a);
  /// Multiplication by a function.
  friend VectorField operator*(const Polynomial& f, const VectorField& a);
  friend VectorField operator*(const Rational& c, const VectorField& a);
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  void check_space(const VectorField& o) const;

  SpacePtr space_;
  std::vector<Polynomial> coeffs_;
};

VectorField vf_bracket(const VectorField& xi, const VectorField& nu);

/// Divergence for the volume form prod dx_i ^ prod dt_j / t_j:
/// sum over affine v of d c_v/dv plus sum over Laurent t of (d c_t/dt - c_t/t).
Polynomial vf_divergence(const VectorField& xi);

/// delta with [d/dv, delta] = mu; v must be affine.
VectorField solve_bracket_affine(const VectorField& mu, std::string_view var);

struct TorusBracketSolution {
  int l = 0;
  VectorField delta;
};

/// (l, delta) with [t^l d/dt, delta] = mu; l is the smallest positive integer
/// with l-1 and 2l-1 outside the set of t-exponents of mu (l = 0 for mu = 0).
TorusBracketSolution solve_bracket_torus(const VectorField& mu, std::string_view var);

/// Divergence-free eta with [d/dx1, eta] = mu for divergence-free mu on an
/// affine space of dimension >= 2.
VectorField solve_bracket_divfree(const VectorField& mu);

// ---------------------------------------------------------------------------
// Vector fields P d/dx on a punctured line.

struct RatCurveField {
  RatCurveElement coeff;

  std::string str() const;
  friend bool operator==(const RatCurveField& a, const RatCurveField& b) { return a.coeff == b.coeff; }
};

RatCurveField ratcurve_bracket(const RatCurveField& a, const RatCurveField& b);
RatCurveField operator+(const RatCurveField& a, const RatCurveField& b);

/// F with F' = f; throws NonIntegrable if f has a simple pole.
RatCurveElement ratcurve_antiderivative(const RatCurveElement& f);

struct RatCurveWidth2 {
  RatCurveField nu;
  RatCurveField delta;
};

/// (nu, delta) with mu = [d/dx, nu] + [x d/dx, delta].
RatCurveWidth2 solve_width2_ratcurve(const RatCurveField& mu);

}  // namespace liewidth

#endif  // LIEWIDTH_VFIELDS_HPP
