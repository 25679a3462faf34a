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

#include "liewidth/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>

#include "liewidth/parse.hpp"
#include "liewidth/upoly.hpp"

namespace liewidth {

// ---------------------------------------------------------------------------
// VariableSpace

VariableSpace::VariableSpace(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw Error(Errc::InvalidArgument, "empty variable name");
    if (!seen.insert(v.name).second) throw Error(Errc::InvalidArgument, "duplicate variable '" + v.name + "'");
  }
}

std::shared_ptr<const VariableSpace> VariableSpace::make(std::vector<Variable> vars) {
  return std::make_shared<const VariableSpace>(std::move(vars));
}

namespace {

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::shared_ptr<const VariableSpace> VariableSpace::parse_signature(std::string_view sig) {
  std::vector<std::pair<std::string, std::string>> items;
  while (!sig.empty()) {
    auto comma = sig.find(',');
    std::string_view item = trim_ws(sig.substr(0, comma));
    sig = comma == std::string_view::npos ? std::string_view{} : sig.substr(comma + 1);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::SyntaxError, "space entry needs ':' in '" + std::string(item) + "'");
    items.emplace_back(std::string(trim_ws(item.substr(0, colon))), std::string(trim_ws(item.substr(colon + 1))));
  }
  if (items.empty()) throw Error(Errc::SyntaxError, "empty space signature");

  bool counted = std::all_of(items.begin(), items.end(), [](const auto& kv) {
    return (kv.first == "a" || kv.first == "t") && !kv.second.empty() &&
           std::all_of(kv.second.begin(), kv.second.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  });

  std::vector<Variable> vars;
  if (counted) {
    int affine = 0, torus = 0;
    for (const auto& [k, n] : items) (k == "a" ? affine : torus) += std::stoi(n);
    for (int i = 1; i <= affine; ++i)
      vars.push_back({affine == 1 ? std::string("x") : "x" + std::to_string(i), VarKind::Affine});
    for (int i = 1; i <= torus; ++i)
      vars.push_back({torus == 1 ? std::string("t") : "t" + std::to_string(i), VarKind::Laurent});
  } else {
    for (const auto& [name, kind] : items) {
      if (kind == "a") vars.push_back({name, VarKind::Affine});
      else if (kind == "t" || kind == "l") vars.push_back({name, VarKind::Laurent});
      else throw Error(Errc::SyntaxError, "unknown variable kind '" + kind + "'");
    }
  }
  if (vars.empty()) throw Error(Errc::InvalidArgument, "space needs at least one variable");
  return make(std::move(vars));
}

std::optional<std::size_t> VariableSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VariableSpace::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(Errc::UnknownVariable, "'" + std::string(name) + "' not in space (" + signature() + ")");
}

std::string VariableSpace::signature() const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ',';
    out += vars_[i].name + (vars_[i].kind == VarKind::Affine ? ":a" : ":t");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw Error(Errc::InvalidArgument, "null variable space");
}

Polynomial Polynomial::constant(SpacePtr space, const Rational& c) {
  Polynomial p(std::move(space));
  p.add_term(Exponents(p.space_->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::string_view name) {
  Polynomial p(std::move(space));
  Exponents e(p.space_->size(), 0);
  e[p.space_->require(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(SpacePtr space, Exponents exps, const Rational& c) {
  Polynomial p(std::move(space));
  if (exps.size() != p.space_->size()) throw Error(Errc::InvalidArgument, "exponent vector length mismatch");
  p.add_term(exps, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && (*space_)[i].kind == VarKind::Affine)
      throw Error(Errc::NegativeExponentOnAffineVar, "variable '" + (*space_)[i].name + "'");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rational> Polynomial::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(space_->size(), 0)); }

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree(std::size_t i) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int Polynomial::min_degree(std::size_t i) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) d = std::min(d, e[i]);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::is_free_of(std::size_t i) const {
  return std::all_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] == 0; });
}

void Polynomial::check_same_space(const Polynomial& o) const {
  if (space_ != o.space_ && !(*space_ == *o.space_))
    throw Error(Errc::MixedSpaces, "(" + space_->signature() + ") vs (" + o.space_->signature() + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_space(b);
  Polynomial out(a.space_);
  const std::size_t n = a.space_->size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a);
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_same_space(b);
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) {
    if (!is_monomial())
      throw Error(Errc::NonInvertibleSubstitution, "negative power of a non-monomial '" + str() + "'");
    const auto& [ex, c] = *terms_.begin();
    Exponents inv(ex.size());
    for (std::size_t i = 0; i < ex.size(); ++i) inv[i] = -ex[i];
    // add_term rejects negative exponents on affine variables.
    return monomial(space_, inv, c.inverse()).pow(-e);
  }
  Polynomial result = constant(space_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += (*space_)[i].name;
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = c.abs();
    std::string body;
    if (mono.empty()) body = a.str();
    else if (a.is_one()) body = mono;
    else body = a.str() + "*" + mono;
    if (first) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

struct PolyBuilder {
  using Value = Polynomial;
  SpacePtr space;

  Value constant(const Rational& c) const { return Polynomial::constant(space, c); }
  Value variable(std::string_view name) const { return Polynomial::variable(space, name); }
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

Polynomial Polynomial::parse(SpacePtr space, std::string_view text) {
  PolyBuilder b{std::move(space)};
  return detail::parse_expression(text, b);
}

// ---------------------------------------------------------------------------
// Calculus and substitution

Polynomial partial(const Polynomial& p, std::size_t var) {
  Polynomial out(p.space());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * Rational(e[var]));
  }
  return out;
}

Polynomial partial(const Polynomial& p, std::string_view var) { return partial(p, p.space()->require(var)); }

Polynomial antiderivative(const Polynomial& p, std::size_t var) {
  Polynomial out(p.space());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == -1)
      throw Error(Errc::NonIntegrable, "term with " + (*p.space())[var].name + "^-1 in '" + p.str() + "'");
    Exponents d = e;
    d[var] += 1;
    out.add_term(d, c / Rational(d[var]));
  }
  return out;
}

Polynomial antiderivative(const Polynomial& p, std::string_view var) {
  return antiderivative(p, p.space()->require(var));
}

Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& q) {
  const std::size_t v = p.space()->require(var);
  const SpacePtr& target = q.space();
  const VariableSpace& src = *p.space();

  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (i == v) continue;
    map[i] = target->require(src[i].name);
  }

  const int lo = p.min_degree(v);
  std::optional<Polynomial> q_inv;
  if (lo < 0) {
    if (!q.is_monomial())
      throw Error(Errc::NonInvertibleSubstitution, "negative power of '" + std::string(var) + "' but '" + q.str() +
                                                       "' is not a monomial");
    try {
      q_inv = q.pow(-1);
    } catch (const Error&) {
      throw Error(Errc::NonInvertibleSubstitution, "'" + q.str() + "' is not invertible");
    }
  }

  std::map<int, Polynomial> powers;
  auto power = [&](int e) -> const Polynomial& {
    auto it = powers.find(e);
    if (it != powers.end()) return it->second;
    Polynomial val = e >= 0 ? q.pow(e) : q_inv->pow(-e);
    return powers.emplace(e, std::move(val)).first->second;
  };

  Polynomial out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents te(target->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (map[i]) te[*map[i]] += e[i];
    out += Polynomial::monomial(target, te, c) * power(e[v]);
  }
  return out;
}

Polynomial embed(const Polynomial& p, const SpacePtr& target) {
  const VariableSpace& src = *p.space();
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->require(src[i].name);
  Polynomial out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents te(target->size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) te[map[i]] += e[i];
    out.add_term(te, c);
  }
  return out;
}

Polynomial coefficient_of(const Polynomial& p, std::size_t var, int power) {
  Polynomial out(p.space());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != power) continue;
    Exponents d = e;
    d[var] = 0;
    out.add_term(d, c);
  }
  return out;
}

bool squarefree_check(const Polynomial& p) {
  std::optional<std::size_t> var;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        if (var && *var != i) throw Error(Errc::NotUnivariate, "'" + p.str() + "'");
        var = i;
      }
  if (p.is_zero()) return false;
  if (!var) return true;
  upoly::Coeffs a = upoly::from_polynomial(p, *var);
  return upoly::degree(upoly::gcd(a, upoly::derivative(a))) == 0;
}

}  // namespace liewidth
