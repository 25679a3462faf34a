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

#include "liewidth/vfields.hpp"

#include <set>

#include "liewidth/parse.hpp"

namespace liewidth {

namespace {

std::string with_field(const std::string& coeff, std::size_t terms, std::string_view var) {
  const std::string d = "d/d" + std::string(var);
  if (coeff == "1") return d;
  if (coeff == "-1") return "-" + d;
  if (terms > 1) return "(" + coeff + ")*" + d;
  return coeff + "*" + d;
}

std::string join_signed(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += parts[i][0] == '-' ? " - " + parts[i].substr(1) : " + " + parts[i];
  return out;
}

// Polynomial builder over the field's space extended by one auxiliary affine
// variable "d/dv" per coordinate.
struct FieldBuilder {
  using Value = Polynomial;
  SpacePtr ext;

  Value constant(const Rational& c) const { return Polynomial::constant(ext, c); }
  Value variable(std::string_view name) const { return Polynomial::variable(ext, name); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long e) const {
    try {
      return a.pow(e);
    } catch (const Error& err) {
      if (err.code() == Errc::NonInvertibleSubstitution) throw Error(Errc::SyntaxError, err.what());
      throw;
    }
  }
  std::optional<Rational> as_constant(const Value& a) const { return a.as_constant(); }
};

}  // namespace

VectorField::VectorField(SpacePtr space) : space_(std::move(space)) {
  coeffs_.assign(space_->size(), Polynomial(space_));
}

VectorField::VectorField(SpacePtr space, std::vector<Polynomial> coeffs) : VectorField(std::move(space)) {
  if (coeffs.size() > coeffs_.size()) throw Error(Errc::InvalidArgument, "too many vector field components");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!(*coeffs[i].space() == *space_)) throw Error(Errc::MixedSpaces, "component " + std::to_string(i));
    coeffs_[i] = std::move(coeffs[i]);
  }
}

VectorField VectorField::coordinate(SpacePtr space, std::string_view var, const Polynomial& c) {
  VectorField out(space);
  const std::size_t i = space->require(var);
  if (!(*c.space() == *space)) throw Error(Errc::MixedSpaces, "coefficient of d/d" + std::string(var));
  out.coeffs_[i] = c;
  return out;
}

VectorField VectorField::parse(SpacePtr space, std::string_view text) {
  std::vector<Variable> vars = space->vars();
  const std::size_t n = vars.size();
  for (std::size_t i = 0; i < n; ++i) vars.push_back({"d/d" + space->vars()[i].name, VarKind::Affine});
  FieldBuilder b{VariableSpace::make(std::move(vars))};
  Polynomial raw = detail::parse_expression(text, b, true);

  VectorField out(space);
  for (const auto& [e, c] : raw.terms()) {
    std::optional<std::size_t> which;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[n + i] == 0) continue;
      if (e[n + i] != 1 || which) throw Error(Errc::SyntaxError, "each term needs exactly one d/dv factor");
      which = i;
    }
    if (!which) throw Error(Errc::SyntaxError, "term without a d/dv factor");
    out.coeffs_[*which].add_term(Exponents(e.begin(), e.begin() + n), c);
  }
  return out;
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Polynomial VectorField::apply(const Polynomial& f) const {
  if (!(*f.space() == *space_)) throw Error(Errc::MixedSpaces, "function and vector field");
  Polynomial out(space_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out += coeffs_[i] * partial(f, i);
  return out;
}

std::string VectorField::str() const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) parts.push_back(with_field(coeffs_[i].str(), coeffs_[i].size(), (*space_)[i].name));
  return join_signed(parts);
}

void VectorField::check_space(const VectorField& o) const {
  if (!(*space_ == *o.space_)) throw Error(Errc::MixedSpaces, space_->signature() + " vs " + o.space_->signature());
}

VectorField& VectorField::operator+=(const VectorField& o) {
  check_space(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  check_space(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

VectorField operator-(const VectorField& a) { return Rational(-1) * a; }

VectorField operator*(const Polynomial& f, const VectorField& a) {
  VectorField out(a.space_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = f * a.coeffs_[i];
  return out;
}

VectorField operator*(const Rational& c, const VectorField& a) {
  VectorField out(a);
  for (auto& p : out.coeffs_) p *= c;
  return out;
}

bool operator==(const VectorField& a, const VectorField& b) {
  a.check_space(b);
  return a.coeffs_ == b.coeffs_;
}

VectorField vf_bracket(const VectorField& xi, const VectorField& nu) {
  if (!(*xi.space() == *nu.space())) throw Error(Errc::MixedSpaces, xi.space()->signature() + " vs " + nu.space()->signature());
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < xi.size(); ++j) out.push_back(xi.apply(nu[j]) - nu.apply(xi[j]));
  return VectorField(xi.space(), std::move(out));
}

Polynomial vf_divergence(const VectorField& xi) {
  const SpacePtr& s = xi.space();
  Polynomial out(s);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    out += partial(xi[i], i);
    if ((*s)[i].kind == VarKind::Laurent) {
      Exponents e(s->size(), 0);
      e[i] = -1;
      out -= xi[i] * Polynomial::monomial(s, e);
    }
  }
  return out;
}

VectorField solve_bracket_affine(const VectorField& mu, std::string_view var) {
  const std::size_t v = mu.space()->require(var);
  if ((*mu.space())[v].kind != VarKind::Affine)
    throw Error(Errc::InvalidArgument, "'" + std::string(var) + "' is not an affine coordinate");
  std::vector<Polynomial> out;
  for (const auto& c : mu.coeffs()) out.push_back(antiderivative(c, v));
  return VectorField(mu.space(), std::move(out));
}

TorusBracketSolution solve_bracket_torus(const VectorField& mu, std::string_view var) {
  const SpacePtr& s = mu.space();
  const std::size_t t = s->require(var);
  if ((*s)[t].kind != VarKind::Laurent)
    throw Error(Errc::InvalidArgument, "'" + std::string(var) + "' is not a torus coordinate");
  if (mu.is_zero()) return {0, VectorField(s)};

  std::set<int> exps;
  for (const auto& c : mu.coeffs())
    for (const auto& [e, coef] : c.terms()) exps.insert(e[t]);
  int l = 1;
  while (exps.count(l - 1) || exps.count(2 * l - 1)) ++l;

  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < mu.size(); ++v) {
    Polynomial d(s);
    for (const auto& [e, coef] : mu[v].terms()) {
      const int m = e[t];
      Exponents shifted = e;
      shifted[t] = m - l + 1;
      const int denom = v == t ? m - 2 * l + 1 : m - l + 1;
      d.add_term(shifted, coef / Rational(denom));
    }
    out.push_back(std::move(d));
  }
  return {l, VectorField(s, std::move(out))};
}

VectorField solve_bracket_divfree(const VectorField& mu) {
  const SpacePtr& s = mu.space();
  if (s->size() < 2) throw Error(Errc::NeedTwoVariables, "space " + s->signature());
  for (const auto& v : s->vars())
    if (v.kind != VarKind::Affine) throw Error(Errc::InvalidArgument, "'" + v.name + "' is not an affine coordinate");
  if (!vf_divergence(mu).is_zero()) throw Error(Errc::NotDivergenceFree, "Div = " + vf_divergence(mu).str());

  VectorField delta = solve_bracket_affine(mu, (*s)[0].name);
  const Polynomial c = vf_divergence(delta);
  std::vector<Polynomial> correction(s->size(), Polynomial(s));
  correction[1] = -antiderivative(c, 1);
  return delta + VectorField(s, std::move(correction));
}

// ---------------------------------------------------------------------------

std::string RatCurveField::str() const {
  if (coeff.is_zero()) return "0";
  std::string c = coeff.str();
  if (c == "1") return "d/dx";
  if (c == "-1") return "-d/dx";
  return "(" + c + ")*d/dx";
}

RatCurveField ratcurve_bracket(const RatCurveField& a, const RatCurveField& b) {
  return {a.coeff * b.coeff.derivative() - b.coeff * a.coeff.derivative()};
}

RatCurveField operator+(const RatCurveField& a, const RatCurveField& b) { return {a.coeff + b.coeff}; }

RatCurveElement ratcurve_antiderivative(const RatCurveElement& f) {
  const RatCurveRingPtr& ring = f.ring();
  RatCurveElement out = RatCurveElement::from_poly(ring, antiderivative(f.poly(), 0));
  for (const auto& [key, c] : f.polar()) {
    const auto [i, j] = key;
    if (j == 1)
      throw Error(Errc::NonIntegrable, "simple pole at x = " + ring->poles()[i].str());
    out += RatCurveElement::pole_power(ring, i, j - 1, c / Rational(1 - j));
  }
  return out;
}

RatCurveWidth2 solve_width2_ratcurve(const RatCurveField& mu) {
  const RatCurveRingPtr& ring = mu.coeff.ring();
  RatCurveElement d(ring);
  for (std::size_t i = 0; i < ring->poles().size(); ++i) {
    const Rational c = mu.coeff.polar_coefficient(i, 1);
    if (!c.is_zero()) d += RatCurveElement::pole_power(ring, i, 1, c / Rational(-2));
  }
  RatCurveField delta{d};
  RatCurveField x_dx{RatCurveElement::x(ring)};
  RatCurveElement residual = mu.coeff - ratcurve_bracket(x_dx, delta).coeff;
  return {RatCurveField{ratcurve_antiderivative(residual)}, delta};
}

}  // namespace liewidth
