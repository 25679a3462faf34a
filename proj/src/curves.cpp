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

#include "liewidth/curves.hpp"

#include <map>
#include <utility>
#include <vector>

#include "liewidth/linalg.hpp"

namespace liewidth {

long Valuation::value() const {
  if (!value_) throw Error(Errc::InvalidArgument, "order of the zero function is infinite");
  return *value_;
}

std::string Valuation::str() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

Valuation operator+(Valuation a, Valuation b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

Valuation operator+(Valuation a, long b) { return a + Valuation(b); }

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

Valuation ord_inf(const CurveElement& e) {
  if (e.is_zero()) return Valuation::infinity();
  const long g2 = e.ring()->h_degree();
  std::optional<long> v;
  if (!e.a().is_zero()) v = -2L * e.a().degree(0);
  if (!e.b().is_zero()) {
    const long vb = -2L * e.b().degree(0) - g2;
    v = v ? std::min(*v, vb) : vb;
  }
  return Valuation::finite(*v);
}

CurveElement tau_apply(const CurveElement& e) {
  const CurveRing& r = *e.ring();
  const Polynomial a = r.h() * partial(e.b(), 0) * Rational(2) + r.h_prime() * e.b();
  return CurveElement(e.ring(), a, partial(e.a(), 0) * Rational(2));
}

CurveElement field_bracket(const CurveElement& f, const CurveElement& g) {
  return f * tau_apply(g) - g * tau_apply(f);
}

Valuation ord_field(const CurveElement& f) { return ord_inf(f) + (2L - 2L * f.ring()->genus()); }

Rational leading_coefficient(const CurveElement& e) {
  const Valuation v = ord_inf(e);
  if (v.is_infinite()) throw Error(Errc::ZeroInput, "leading coefficient of 0");
  if (v.value() % 2 == 0) return e.a().coefficient({e.a().degree(0)});
  return e.b().coefficient({e.b().degree(0)});
}

ObstructionCertificate obstruction_certificate(const CurveElement& f_in, const CurveElement& g) {
  if (!f_in.ring()->same_as(*g.ring())) throw Error(Errc::MixedRings, "curve elements of different curves");
  const int genus = g.ring()->genus();
  ObstructionCertificate cert{.lambda_step = std::nullopt, .bracket = field_bracket(f_in, g)};
  cert.ord_tau = Valuation::finite(2 - 2 * genus);
  cert.bracket_is_tau = cert.bracket == CurveElement::constant(g.ring(), Rational(1));

  CurveElement f = f_in;
  if (!f.is_zero() && !g.is_zero() && ord_inf(f) == ord_inf(g)) {
    const Rational lambda = leading_coefficient(f) / leading_coefficient(g);
    f = f - lambda * g;
    cert.lambda_step = LambdaStep{lambda, f};
  }
  cert.ord_f = ord_inf(f);
  cert.ord_g = ord_inf(g);
  if (f.is_zero() || g.is_zero()) {
    cert.conclusion = Conclusion::BracketIsZero;
    cert.ord_bracket = Valuation::infinity();
    return cert;
  }
  if (cert.ord_f == cert.ord_g)
    throw Error(Errc::InvalidArgument, "order tie survived the reduction step");
  cert.conclusion = Conclusion::OrderMismatch;
  cert.ord_bracket = ord_field(cert.bracket);
  return cert;
}

bool certificate_consistent(const ObstructionCertificate& c, int genus) {
  if (c.bracket_is_tau) return false;
  if (c.conclusion == Conclusion::BracketIsZero) return c.bracket.is_zero();
  const long euler = 2 - 2L * genus;
  if (c.ord_f.is_infinite() || c.ord_g.is_infinite() || c.ord_bracket.is_infinite()) return false;
  return c.ord_bracket.value() == 2 * euler + c.ord_f.value() + c.ord_g.value() - 1 && c.ord_bracket < c.ord_tau &&
         c.ord_tau == Valuation::finite(euler);
}

CentralizerResult centralizer_check(const CurveElement& f, const CurveElement& g) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroInput, "centralizer check needs nonzero fields");
  const Rational lf = leading_coefficient(f);
  const Rational lg = leading_coefficient(g);
  if (lg * f == lf * g) return {.proportional = true, .lambda = lg / lf, .witness = CurveElement(f.ring())};
  return {.proportional = false, .lambda = Rational(0), .witness = field_bracket(f, g)};
}

NoEigenCertificate no_eigen_check(const CurveElement& f, const CurveElement& g, const Rational& lambda) {
  if (g.is_zero()) throw Error(Errc::ZeroInput, "g = 0");
  if (lambda.is_zero()) throw Error(Errc::InvalidArgument, "lambda = 0");
  NoEigenCertificate out{false, field_bracket(f, g), std::nullopt};
  out.holds = !(out.bracket == lambda * g);
  const Valuation of = ord_inf(f), og = ord_inf(g);
  if (!(of == og)) {
    const Valuation nf = ord_field(f);
    out.valuation_remark = "n_f = " + nf.str() + " <= 0, so ord of [f tau, g tau] is n_f + n_g - 1 = " +
                           (nf + ord_field(g) + (-1L)).str() + " != n_g = " + ord_field(g).str();
  }
  return out;
}

namespace {

// Coordinates of curve elements in the monomial basis {x^i, x^i y}.
class Coordinates {
 public:
  std::size_t index(int part, int deg) {
    auto [it, inserted] = idx_.try_emplace({part, deg}, idx_.size());
    return it->second;
  }
  std::vector<std::pair<std::size_t, Rational>> of(const CurveElement& e) {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (const auto& [ex, c] : e.a().terms()) out.emplace_back(index(0, ex[0]), c);
    for (const auto& [ex, c] : e.b().terms()) out.emplace_back(index(1, ex[0]), c);
    return out;
  }
  std::size_t size() const { return idx_.size(); }

 private:
  std::map<std::pair<int, int>, std::size_t> idx_;
};

// Nonconstant monomials x^i, x^i y with order >= min_ord.
std::vector<CurveElement> monomials_with_order_at_least(const CurveRingPtr& ring, long min_ord) {
  std::vector<CurveElement> out;
  const long hd = ring->h_degree();
  const SpacePtr& xs = ring->x_space();
  for (int i = 1; -2L * i >= min_ord; ++i)
    out.emplace_back(ring, Polynomial::monomial(xs, {i}), Polynomial(xs));
  for (int i = 0; -2L * i - hd >= min_ord; ++i)
    out.emplace_back(ring, Polynomial(xs), Polynomial::monomial(xs, {i}));
  return out;
}

}  // namespace

TauSolve solve_tau_equation(const CurveElement& f) {
  const CurveRingPtr& ring = f.ring();
  TauSolve out;
  if (f.is_zero()) {
    out.solution = CurveElement(ring);
    return out;
  }
  const long target = ord_inf(f).value() + 2L * ring->genus() - 1;
  const std::vector<CurveElement> basis = monomials_with_order_at_least(ring, target);
  out.basis_size = basis.size();

  Coordinates coords;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  for (const auto& m : basis) cols.push_back(coords.of(tau_apply(m)));
  const auto rhs_sparse = coords.of(f);

  Matrix a(coords.size(), basis.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) a(i, j) = c;
  std::vector<Rational> rhs(coords.size());
  for (const auto& [i, c] : rhs_sparse) rhs[i] = c;

  LinearSolve sol = solve(a, rhs);
  out.rank = sol.rank;
  out.augmented_rank = sol.augmented_rank;
  if (!sol.solution) return out;
  CurveElement F(ring);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!(*sol.solution)[j].is_zero()) F += (*sol.solution)[j] * basis[j];
  out.solution = F;
  return out;
}

int coker_dimension(const CurveRingPtr& ring, int max_pole) {
  if (max_pole < 0) throw Error(Errc::InvalidArgument, "max_pole must be >= 0");
  const long hd = ring->h_degree();
  const int dim_v = max_pole / 2 + 1 + (max_pole >= hd ? static_cast<int>((max_pole - hd) / 2 + 1) : 0);
  const std::vector<CurveElement> sources =
      monomials_with_order_at_least(ring, -static_cast<long>(max_pole) + 2L * ring->genus() - 1);
  Coordinates coords;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (const auto& m : sources) rows.push_back(coords.of(tau_apply(m)));
  Matrix a(rows.size(), coords.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) a(i, j) = c;
  return dim_v - static_cast<int>(rank(std::move(a)));
}

}  // namespace liewidth
