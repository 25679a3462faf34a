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

#ifndef LIEWIDTH_POLY_HPP
#define LIEWIDTH_POLY_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liewidth/errors.hpp"
#include "liewidth/rational.hpp"

namespace liewidth {

enum class VarKind { Affine, Laurent };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Affine;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered list of coordinates. Affine variables only carry nonnegative
/// exponents; Laurent variables may carry any integer exponent.
class VariableSpace {
 public:
  explicit VariableSpace(std::vector<Variable> vars);

  /// Shared, immutable space.
  static std::shared_ptr<const VariableSpace> make(std::vector<Variable> vars);

  /// Parses a space signature. Two forms are accepted:
  ///   "a:2,t:1"       counts of affine / torus factors, auto-named
  ///                   (x or x1..xn for affine, t or t1..tn for torus)
  ///   "x:a,y:a,t:t"   explicit names with kind a(ffine) or t/l (laurent)
  static std::shared_ptr<const VariableSpace> parse_signature(std::string_view sig);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws UnknownVariable.
  std::size_t require(std::string_view name) const;

  std::string signature() const;

  friend bool operator==(const VariableSpace& a, const VariableSpace& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;
using Exponents = std::vector<int>;

/// Sparse Laurent polynomial with rational coefficients over a VariableSpace.
/// Terms are kept in descending lexicographic order of exponent vectors; no
/// zero coefficient is ever stored, so equality is term-by-term.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, std::greater<>>;

  explicit Polynomial(SpacePtr space);

  static Polynomial constant(SpacePtr space, const Rational& c);
  static Polynomial variable(SpacePtr space, std::string_view name);
  static Polynomial monomial(SpacePtr space, Exponents exps, const Rational& c = Rational(1));
  static Polynomial parse(SpacePtr space, std::string_view text);

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  /// Highest / lowest exponent of variable i over all terms (0 for the zero polynomial).
  int degree(std::size_t i) const;
  int min_degree(std::size_t i) const;
  int total_degree() const;
  /// True if no term involves variable i.
  bool is_free_of(std::size_t i) const;

  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a);

  /// Integer power; negative powers only for invertible monomials.
  Polynomial pow(long e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Adds c * x^e, dropping the term if it cancels. Validates exponent signs.
  void add_term(const Exponents& e, const Rational& c);

 private:
  void check_same_space(const Polynomial& o) const;

  SpacePtr space_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial partial(const Polynomial& p, std::size_t var);
Polynomial partial(const Polynomial& p, std::string_view var);

/// q with partial(q, v) == p and no v-free term of q beyond what p forces.
/// Throws NonIntegrable if some term carries v^-1.
Polynomial antiderivative(const Polynomial& p, std::size_t var);
Polynomial antiderivative(const Polynomial& p, std::string_view var);

/// Replaces variable `var` of p by q. The result lives in q's space; every
/// other variable of p is mapped by name into it.
Polynomial substitute(const Polynomial& p, std::string_view var, const Polynomial& q);

/// Re-expresses p in `target`, matching variables by name.
Polynomial embed(const Polynomial& p, const SpacePtr& target);

/// Terms of p whose exponent in `var` equals `power`, with that exponent cleared.
Polynomial coefficient_of(const Polynomial& p, std::size_t var, int power);

/// gcd(p, p') is a nonzero constant. p must involve at most one variable.
bool squarefree_check(const Polynomial& p);

}  // namespace liewidth

#endif  // LIEWIDTH_POLY_HPP
