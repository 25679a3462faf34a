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

#include "liewidth/rings.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "liewidth/parse.hpp"

namespace liewidth {

namespace {

// Finds the single variable a univariate polynomial uses (0 if constant).
std::size_t sole_variable(const Polynomial& p) {
  std::optional<std::size_t> var;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        if (var && *var != i) throw Error(Errc::NotUnivariate, "'" + p.str() + "'");
        var = i;
      }
  return var.value_or(0);
}

SpacePtr affine_space(std::initializer_list<const char*> names) {
  std::vector<Variable> v;
  for (const char* n : names) v.push_back({n, VarKind::Affine});
  return VariableSpace::make(std::move(v));
}

}  // namespace

// ===========================================================================
// DanRing / DanElement

DanRing::DanRing(upoly::Coeffs p)
    : p_(std::move(p)),
      xyz_(affine_space({"x", "y", "z"})),
      xz_(affine_space({"x", "z"})),
      yz_(affine_space({"y", "z"})),
      z_(affine_space({"z"})),
      chart_(VariableSpace::make({{"x", VarKind::Laurent}, {"z", VarKind::Affine}})),
      p_z_(upoly::to_polynomial(p_, z_, 0)),
      dp_z_(upoly::to_polynomial(upoly::derivative(p_), z_, 0)) {}

std::shared_ptr<const DanRing> DanRing::make(const Polynomial& p) {
  upoly::Coeffs c = upoly::from_polynomial(p, sole_variable(p));
  if (upoly::degree(c) < 1) throw Error(Errc::InvalidRing, "p(z) = " + p.str() + " must have degree >= 1");
  if (upoly::degree(upoly::gcd(c, upoly::derivative(c))) != 0)
    throw Error(Errc::NotSquarefree, "p(z) = " + p.str() + " has a repeated root");
  return std::shared_ptr<const DanRing>(new DanRing(std::move(c)));
}

std::shared_ptr<const DanRing> DanRing::parse(std::string_view p_text) {
  static const SpacePtr z = affine_space({"z"});
  return make(Polynomial::parse(z, p_text));
}

DanElement::DanElement(DanRingPtr ring) : ring_(std::move(ring)), nf_(ring_->xyz()) {}

DanElement DanElement::normalize(DanRingPtr ring, const Polynomial& raw) {
  const Polynomial in = embed(raw, ring->xyz());
  Polynomial out(ring->xyz());
  std::vector<upoly::Coeffs> p_pow{{Rational(1)}};
  for (const auto& [e, c] : in.terms()) {
    const int m = std::min(e[0], e[1]);
    if (m == 0) {
      out.add_term(e, c);
      continue;
    }
    while (static_cast<int>(p_pow.size()) <= m) p_pow.push_back(upoly::mul(p_pow.back(), ring->p_coeffs()));
    const upoly::Coeffs& pm = p_pow[m];
    for (std::size_t k = 0; k < pm.size(); ++k)
      out.add_term({e[0] - m, e[1] - m, e[2] + static_cast<int>(k)}, c * pm[k]);
  }
  return DanElement(std::move(ring), std::move(out));
}

DanElement dan_normalize(const DanRingPtr& ring, const Polynomial& raw) { return DanElement::normalize(ring, raw); }

DanElement DanElement::parse(DanRingPtr ring, std::string_view text) {
  Polynomial raw = Polynomial::parse(ring->xyz(), text);
  return normalize(std::move(ring), raw);
}

DanElement DanElement::from_parts(DanRingPtr ring, const Polynomial& a_xz, const Polynomial& b_yz, const Polynomial& c_z) {
  const SpacePtr& s = ring->xyz();
  Polynomial nf = Polynomial::variable(s, "x") * embed(a_xz, s) + Polynomial::variable(s, "y") * embed(b_yz, s) + embed(c_z, s);
  return DanElement(std::move(ring), std::move(nf));
}

DanElement DanElement::constant(DanRingPtr ring, const Rational& c) {
  Polynomial nf = Polynomial::constant(ring->xyz(), c);
  return DanElement(std::move(ring), std::move(nf));
}

DanElement DanElement::x(DanRingPtr ring) {
  Polynomial nf = Polynomial::variable(ring->xyz(), "x");
  return DanElement(std::move(ring), std::move(nf));
}

DanElement DanElement::y(DanRingPtr ring) {
  Polynomial nf = Polynomial::variable(ring->xyz(), "y");
  return DanElement(std::move(ring), std::move(nf));
}

DanElement DanElement::z(DanRingPtr ring) {
  Polynomial nf = Polynomial::variable(ring->xyz(), "z");
  return DanElement(std::move(ring), std::move(nf));
}

DanElement DanElement::from_z(DanRingPtr ring, const Polynomial& c_z) {
  Polynomial nf = embed(c_z, ring->xyz());
  return DanElement(std::move(ring), std::move(nf));
}

Polynomial DanElement::a_part() const {
  Polynomial out(ring_->xz());
  for (const auto& [e, c] : nf_.terms())
    if (e[0] > 0) out.add_term({e[0] - 1, e[2]}, c);
  return out;
}

Polynomial DanElement::b_part() const {
  Polynomial out(ring_->yz());
  for (const auto& [e, c] : nf_.terms())
    if (e[1] > 0) out.add_term({e[1] - 1, e[2]}, c);
  return out;
}

Polynomial DanElement::c_part() const {
  Polynomial out(ring_->z());
  for (const auto& [e, c] : nf_.terms())
    if (e[0] == 0 && e[1] == 0) out.add_term({e[2]}, c);
  return out;
}

std::string DanElement::str() const {
  std::vector<std::string> parts;
  if (Polynomial a = a_part(); !a.is_zero()) parts.push_back("x*(" + a.str() + ")");
  if (Polynomial b = b_part(); !b.is_zero()) parts.push_back("y*(" + b.str() + ")");
  if (Polynomial c = c_part(); !c.is_zero()) parts.push_back("(" + c.str() + ")");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

void DanElement::check_ring(const DanElement& o) const {
  if (!ring_->same_as(*o.ring_))
    throw Error(Errc::MixedRings, "p = " + ring_->p().str() + " vs p = " + o.ring_->p().str());
}

DanElement& DanElement::operator+=(const DanElement& o) {
  check_ring(o);
  nf_ += o.nf_;
  return *this;
}

DanElement& DanElement::operator-=(const DanElement& o) {
  check_ring(o);
  nf_ -= o.nf_;
  return *this;
}

DanElement operator*(const DanElement& a, const DanElement& b) {
  a.check_ring(b);
  return DanElement::normalize(a.ring_, a.nf_ * b.nf_);
}

DanElement operator*(const Rational& c, const DanElement& a) { return DanElement(a.ring_, a.nf_ * c); }

DanElement operator-(const DanElement& a) { return DanElement(a.ring_, -a.nf_); }

bool operator==(const DanElement& a, const DanElement& b) {
  a.check_ring(b);
  return a.nf_ == b.nf_;
}

Polynomial dan_localize(const DanElement& e) {
  const DanRing& r = *e.ring();
  Polynomial y_image = embed(r.p(), r.chart()) * Polynomial::monomial(r.chart(), {-1, 0});
  return substitute(e.rep(), "y", y_image);
}

DanElement dan_delocalize(const DanRingPtr& ring, const Polynomial& q_in) {
  const Polynomial q = embed(q_in, ring->chart());
  std::map<int, upoly::Coeffs> by_power;
  for (const auto& [e, c] : q.terms()) {
    upoly::Coeffs& z = by_power[e[0]];
    if (z.size() <= static_cast<std::size_t>(e[1])) z.resize(e[1] + 1);
    z[e[1]] = c;
  }
  Polynomial nf(ring->xyz());
  for (auto& [j, zc] : by_power) {
    upoly::trim(zc);
    if (j >= 0) {
      for (std::size_t k = 0; k < zc.size(); ++k) nf.add_term({j, 0, static_cast<int>(k)}, zc[k]);
      continue;
    }
    auto [quot, rem] = upoly::divmod(zc, upoly::pow(ring->p_coeffs(), static_cast<unsigned>(-j)));
    if (!rem.empty())
      throw Error(Errc::NotInImage, "coefficient of x^" + std::to_string(j) + " is not divisible by p(z)^" +
                                        std::to_string(-j));
    for (std::size_t k = 0; k < quot.size(); ++k) nf.add_term({0, -j, static_cast<int>(k)}, quot[k]);
  }
  return DanElement::normalize(ring, nf);
}

// ===========================================================================
// CurveRing / CurveElement

CurveRing::CurveRing(Polynomial h, int genus, SpacePtr x, SpacePtr xy)
    : h_(std::move(h)), dh_(partial(h_, 0)), genus_(genus), x_(std::move(x)), xy_(std::move(xy)) {}

std::shared_ptr<const CurveRing> CurveRing::make(const Polynomial& h) {
  upoly::Coeffs c = upoly::from_polynomial(h, sole_variable(h));
  const int deg = upoly::degree(c);
  if (deg < 3 || deg % 2 == 0)
    throw Error(Errc::InvalidRing, "h(x) = " + h.str() + " must have odd degree >= 3");
  if (!upoly::leading(c).is_one()) throw Error(Errc::InvalidRing, "h(x) = " + h.str() + " must be monic");
  if (upoly::degree(upoly::gcd(c, upoly::derivative(c))) != 0)
    throw Error(Errc::NotSquarefree, "h(x) = " + h.str() + " has a repeated root");
  SpacePtr x = affine_space({"x"});
  SpacePtr xy = affine_space({"x", "y"});
  Polynomial hx = upoly::to_polynomial(c, x, 0);
  return std::shared_ptr<const CurveRing>(new CurveRing(std::move(hx), (deg - 1) / 2, std::move(x), std::move(xy)));
}

std::shared_ptr<const CurveRing> CurveRing::parse(std::string_view h_text) {
  static const SpacePtr x = affine_space({"x"});
  return make(Polynomial::parse(x, h_text));
}

CurveElement::CurveElement(CurveRingPtr ring) : ring_(std::move(ring)), a_(ring_->x_space()), b_(ring_->x_space()) {}

CurveElement::CurveElement(CurveRingPtr ring, Polynomial a, Polynomial b)
    : ring_(std::move(ring)), a_(embed(a, ring_->x_space())), b_(embed(b, ring_->x_space())) {}

CurveElement CurveElement::normalize(CurveRingPtr ring, const Polynomial& raw) {
  const Polynomial in = embed(raw, ring->xy_space());
  const SpacePtr& xs = ring->x_space();
  Polynomial a(xs), b(xs);
  std::vector<Polynomial> h_pow{Polynomial::constant(xs, Rational(1))};
  for (const auto& [e, c] : in.terms()) {
    const int k = e[1] / 2;
    while (static_cast<int>(h_pow.size()) <= k) h_pow.push_back(h_pow.back() * ring->h());
    Polynomial t = Polynomial::monomial(xs, {e[0]}, c) * h_pow[k];
    (e[1] % 2 == 0 ? a : b) += t;
  }
  return CurveElement(std::move(ring), std::move(a), std::move(b));
}

CurveElement curve_normalize(const CurveRingPtr& ring, const Polynomial& raw) { return CurveElement::normalize(ring, raw); }

CurveElement CurveElement::parse(CurveRingPtr ring, std::string_view text) {
  Polynomial raw = Polynomial::parse(ring->xy_space(), text);
  return normalize(std::move(ring), raw);
}

CurveElement CurveElement::constant(CurveRingPtr ring, const Rational& c) {
  Polynomial a = Polynomial::constant(ring->x_space(), c);
  Polynomial b(ring->x_space());
  return CurveElement(std::move(ring), std::move(a), std::move(b));
}

CurveElement CurveElement::x(CurveRingPtr ring) {
  Polynomial a = Polynomial::variable(ring->x_space(), "x");
  Polynomial b(ring->x_space());
  return CurveElement(std::move(ring), std::move(a), std::move(b));
}

CurveElement CurveElement::y(CurveRingPtr ring) {
  Polynomial a(ring->x_space());
  Polynomial b = Polynomial::constant(ring->x_space(), Rational(1));
  return CurveElement(std::move(ring), std::move(a), std::move(b));
}

std::string CurveElement::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!a_.is_zero()) out = a_.str();
  if (!b_.is_zero()) {
    std::string bpart = b_.is_constant() && b_.constant_term().is_one() ? std::string("y") : "(" + b_.str() + ")*y";
    out += out.empty() ? bpart : " + " + bpart;
  }
  return out;
}

void CurveElement::check_ring(const CurveElement& o) const {
  if (!ring_->same_as(*o.ring_))
    throw Error(Errc::MixedRings, "h = " + ring_->h().str() + " vs h = " + o.ring_->h().str());
}

CurveElement& CurveElement::operator+=(const CurveElement& o) {
  check_ring(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CurveElement& CurveElement::operator-=(const CurveElement& o) {
  check_ring(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

CurveElement operator*(const CurveElement& a, const CurveElement& b) {
  a.check_ring(b);
  return CurveElement(a.ring_, a.a_ * b.a_ + a.b_ * b.b_ * a.ring_->h(), a.a_ * b.b_ + a.b_ * b.a_);
}

CurveElement operator*(const Rational& c, const CurveElement& a) { return CurveElement(a.ring_, a.a_ * c, a.b_ * c); }

CurveElement operator-(const CurveElement& a) { return CurveElement(a.ring_, -a.a_, -a.b_); }

bool operator==(const CurveElement& a, const CurveElement& b) {
  a.check_ring(b);
  return a.a_ == b.a_ && a.b_ == b.b_;
}

// ===========================================================================
// RatCurveRing / RatCurveElement

RatCurveRing::RatCurveRing(std::vector<Rational> poles) : poles_(std::move(poles)), x_(affine_space({"x"})) {}

std::shared_ptr<const RatCurveRing> RatCurveRing::make(std::vector<Rational> poles) {
  std::set<Rational> seen;
  for (const auto& p : poles)
    if (!seen.insert(p).second) throw Error(Errc::InvalidRing, "pole " + p.str() + " listed twice");
  return std::shared_ptr<const RatCurveRing>(new RatCurveRing(std::move(poles)));
}

std::shared_ptr<const RatCurveRing> RatCurveRing::parse(std::string_view csv) {
  std::vector<Rational> poles;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    std::string item;
    for (char c : csv.substr(0, comma))
      if (!std::isspace(static_cast<unsigned char>(c))) item += c;
    if (!item.empty()) poles.push_back(Rational::parse(item));
    csv = comma == std::string_view::npos ? std::string_view{} : csv.substr(comma + 1);
  }
  return make(std::move(poles));
}

std::optional<std::size_t> RatCurveRing::pole_index(const Rational& p) const {
  for (std::size_t i = 0; i < poles_.size(); ++i)
    if (poles_[i] == p) return i;
  return std::nullopt;
}

RatCurveElement::RatCurveElement(RatCurveRingPtr ring) : ring_(std::move(ring)), poly_(ring_->x_space()) {}

RatCurveElement RatCurveElement::from_poly(RatCurveRingPtr ring, const Polynomial& poly) {
  RatCurveElement out(std::move(ring));
  out.poly_ = embed(poly, out.ring_->x_space());
  return out;
}

RatCurveElement RatCurveElement::constant(RatCurveRingPtr ring, const Rational& c) {
  RatCurveElement out(std::move(ring));
  out.poly_ = Polynomial::constant(out.ring_->x_space(), c);
  return out;
}

RatCurveElement RatCurveElement::x(RatCurveRingPtr ring) {
  RatCurveElement out(std::move(ring));
  out.poly_ = Polynomial::variable(out.ring_->x_space(), "x");
  return out;
}

RatCurveElement RatCurveElement::pole_power(RatCurveRingPtr ring, std::size_t i, int order, const Rational& c) {
  if (i >= ring->poles().size() || order < 1) throw Error(Errc::InvalidArgument, "bad pole power");
  RatCurveElement out(std::move(ring));
  out.add_polar({i, order}, c);
  return out;
}

void RatCurveElement::add_polar(const PolarKey& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = polar_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) polar_.erase(it);
  }
}

Rational RatCurveElement::polar_coefficient(std::size_t i, int order) const {
  auto it = polar_.find({i, order});
  return it == polar_.end() ? Rational(0) : it->second;
}

RatCurveElement ratcurve_normalize_dense(const RatCurveRingPtr& ring, const upoly::Coeffs& numerator,
                                         const std::vector<int>& exponents) {
  const std::size_t n = ring->poles().size();
  if (exponents.size() != n) throw Error(Errc::InvalidArgument, "exponent vector length mismatch");
  upoly::Coeffs num = numerator;
  upoly::trim(num);
  std::vector<int> exps = exponents;
  for (std::size_t i = 0; i < n; ++i)
    if (exps[i] < 0) {
      num = upoly::mul(num, upoly::pow(ring->linear_factor(i), static_cast<unsigned>(-exps[i])));
      exps[i] = 0;
    }

  upoly::Coeffs den{Rational(1)};
  for (std::size_t i = 0; i < n; ++i) den = upoly::mul(den, upoly::pow(ring->linear_factor(i), exps[i]));

  RatCurveElement out(ring);
  out.poly_ = upoly::to_polynomial(upoly::divmod(num, den).first, ring->x_space(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (exps[i] == 0) continue;
    upoly::Coeffs rest{Rational(1)};
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) rest = upoly::mul(rest, upoly::pow(ring->linear_factor(k), exps[k]));
    const Rational& p = ring->poles()[i];
    // Laurent expansion of num / den at p: t^{-e} * (num / rest)(p + t).
    upoly::Coeffs s = upoly::series_div(upoly::taylor_shift(num, p), upoly::taylor_shift(rest, p), exps[i]);
    for (int j = 1; j <= exps[i]; ++j) out.add_polar({i, j}, s[exps[i] - j]);
  }
  return out;
}

RatCurveElement ratcurve_normalize(const RatCurveRingPtr& ring, const Polynomial& numerator,
                                   const std::map<Rational, int>& denominator) {
  std::vector<int> exps(ring->poles().size(), 0);
  for (const auto& [pole, e] : denominator) {
    auto i = ring->pole_index(pole);
    if (!i) throw Error(Errc::UndeclaredPole, "pole " + pole.str() + " is not declared");
    exps[*i] += e;
  }
  const Polynomial num = embed(numerator, ring->x_space());
  return ratcurve_normalize_dense(ring, upoly::from_polynomial(num, 0), exps);
}

std::pair<upoly::Coeffs, std::vector<int>> RatCurveElement::to_fraction() const {
  const std::size_t n = ring_->poles().size();
  std::vector<int> exps(n, 0);
  for (const auto& [k, c] : polar_) exps[k.first] = std::max(exps[k.first], k.second);
  upoly::Coeffs den{Rational(1)};
  for (std::size_t i = 0; i < n; ++i) den = upoly::mul(den, upoly::pow(ring_->linear_factor(i), exps[i]));
  upoly::Coeffs num = upoly::mul(upoly::from_polynomial(poly_, 0), den);
  for (const auto& [k, c] : polar_) {
    upoly::Coeffs rest{c};
    for (std::size_t i = 0; i < n; ++i) {
      const int e = i == k.first ? exps[i] - k.second : exps[i];
      rest = upoly::mul(rest, upoly::pow(ring_->linear_factor(i), e));
    }
    num = upoly::add(num, rest);
  }
  return {num, exps};
}

RatCurveElement RatCurveElement::derivative() const {
  RatCurveElement out(ring_);
  out.poly_ = partial(poly_, 0);
  for (const auto& [k, c] : polar_) out.add_polar({k.first, k.second + 1}, c * Rational(-k.second));
  return out;
}

RatCurveElement RatCurveElement::inverse() const {
  auto [num, exps] = to_fraction();
  if (num.empty()) throw Error(Errc::NonInvertibleSubstitution, "inverse of zero");
  const std::size_t n = ring_->poles().size();
  std::vector<int> inv_exps(n);
  for (std::size_t i = 0; i < n; ++i) {
    int k = 0;
    while (upoly::degree(num) > 0 && upoly::eval(num, ring_->poles()[i]).is_zero()) {
      num = upoly::divmod(num, ring_->linear_factor(i)).first;
      ++k;
    }
    // inverse of num0 * prod (x-p)^{k - e} is prod (x-p)^{e - k} / num0
    inv_exps[i] = k - exps[i];
  }
  if (upoly::degree(num) != 0) throw Error(Errc::NonInvertibleSubstitution, "'" + str() + "' is not a unit");
  return ratcurve_normalize_dense(ring_, {num[0].inverse()}, inv_exps);
}

RatCurveElement RatCurveElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatCurveElement out = constant(ring_, Rational(1));
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string RatCurveElement::str() const {
  std::vector<std::pair<bool, std::string>> parts;  // (negative, body)
  if (!poly_.is_zero()) {
    std::string s = poly_.str();
    bool neg = s[0] == '-';
    parts.emplace_back(neg, neg ? s.substr(1) : s);
    if (poly_.size() > 1) parts.back() = {false, s};
  }
  for (const auto& [k, c] : polar_) {
    const Rational& p = ring_->poles()[k.first];
    std::string base = p.is_zero() ? "x" : (p.sign() > 0 ? "(x - " + p.str() + ")" : "(x + " + p.abs().str() + ")");
    std::string body = base + "^-" + std::to_string(k.second);
    if (!c.abs().is_one()) body = c.abs().str() + "*" + body;
    parts.emplace_back(c.sign() < 0, body);
  }
  if (parts.empty()) return "0";
  std::string out = (parts[0].first ? "-" : "") + parts[0].second;
  for (std::size_t i = 1; i < parts.size(); ++i) out += (parts[i].first ? " - " : " + ") + parts[i].second;
  return out;
}

namespace {

struct RatCurveBuilder {
  using Value = RatCurveElement;
  RatCurveRingPtr ring;

  Value constant(const Rational& c) const { return RatCurveElement::constant(ring, c); }
  Value variable(std::string_view name) const {
    if (name != "x") throw Error(Errc::UnknownVariable, "'" + std::string(name) + "' (punctured line uses x)");
    return RatCurveElement::x(ring);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long e) const { return a.pow(e); }
  std::optional<Rational> as_constant(const Value& a) const {
    if (!a.polar().empty()) return std::nullopt;
    return a.poly().as_constant();
  }
};

}  // namespace

RatCurveElement RatCurveElement::parse(RatCurveRingPtr ring, std::string_view text) {
  RatCurveBuilder b{std::move(ring)};
  return detail::parse_expression(text, b);
}

void RatCurveElement::check_ring(const RatCurveElement& o) const {
  if (!ring_->same_as(*o.ring_)) throw Error(Errc::MixedRings, "different pole sets");
}

RatCurveElement& RatCurveElement::operator+=(const RatCurveElement& o) {
  check_ring(o);
  poly_ += o.poly_;
  for (const auto& [k, c] : o.polar_) add_polar(k, c);
  return *this;
}

RatCurveElement& RatCurveElement::operator-=(const RatCurveElement& o) {
  check_ring(o);
  poly_ -= o.poly_;
  for (const auto& [k, c] : o.polar_) add_polar(k, -c);
  return *this;
}

RatCurveElement operator*(const RatCurveElement& a, const RatCurveElement& b) {
  a.check_ring(b);
  if (a.polar_.empty() && b.polar_.empty()) return RatCurveElement::from_poly(a.ring_, a.poly_ * b.poly_);
  auto [na, ea] = a.to_fraction();
  auto [nb, eb] = b.to_fraction();
  for (std::size_t i = 0; i < ea.size(); ++i) ea[i] += eb[i];
  return ratcurve_normalize_dense(a.ring_, upoly::mul(na, nb), ea);
}

RatCurveElement operator*(const Rational& c, const RatCurveElement& a) {
  RatCurveElement out(a.ring_);
  out.poly_ = a.poly_ * c;
  for (const auto& [k, v] : a.polar_) out.add_polar(k, v * c);
  return out;
}

RatCurveElement operator-(const RatCurveElement& a) { return Rational(-1) * a; }

bool operator==(const RatCurveElement& a, const RatCurveElement& b) {
  a.check_ring(b);
  return a.poly_ == b.poly_ && a.polar_ == b.polar_;
}

}  // namespace liewidth
