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

#include "liewidth/poisson.hpp"

#include <cstdlib>

#include "liewidth/linalg.hpp"
#include "liewidth/upoly.hpp"

namespace liewidth {

// ===========================================================================
// Torus

const SpacePtr& torus_space() {
  static const SpacePtr s = VariableSpace::make({{"x", VarKind::Laurent}, {"y", VarKind::Laurent}});
  return s;
}

Polynomial pb_torus(const Polynomial& f_in, const Polynomial& g_in) {
  const Polynomial f = embed(f_in, torus_space());
  const Polynomial g = embed(g_in, torus_space());
  Polynomial out(torus_space());
  for (const auto& [e1, c1] : f.terms())
    for (const auto& [e2, c2] : g.terms()) {
      const long w = static_cast<long>(e1[0]) * e2[1] - static_cast<long>(e1[1]) * e2[0];
      if (w != 0) out.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2 * Rational(w));
    }
  return out;
}

namespace {

Polynomial torus_monomial(int k, int l) { return Polynomial::monomial(torus_space(), {k, l}); }

Polynomial checked_torus_input(const Polynomial& f_in) {
  Polynomial f = embed(f_in, torus_space());
  if (f.is_zero()) throw Error(Errc::ZeroInput, "f = 0");
  if (!f.constant_term().is_zero()) throw Error(Errc::NonzeroConstantTerm, "f = " + f.str());
  return f;
}

}  // namespace

TorusWidth1 width1_torus(const Polynomial& f_in) {
  const Polynomial f = checked_torus_input(f_in);
  auto admissible = [&](int k, int l) {
    for (const auto& [e, c] : f.terms())
      if (static_cast<long>(k) * e[1] - static_cast<long>(l) * e[0] == 0) return false;
    return true;
  };
  for (int s = 1;; ++s) {
    for (int k = s; k >= -s; --k) {
      const int r = s - std::abs(k);
      for (int l : {r, -r}) {
        if (!admissible(k, l)) {
          if (r == 0) break;
          continue;
        }
        Polynomial g(torus_space());
        for (const auto& [e, c] : f.terms())
          g.add_term({e[0] - k, e[1] - l}, c / Rational(static_cast<long>(k) * e[1] - static_cast<long>(l) * e[0]));
        return {k, l, g};
      }
    }
  }
}

ReductionChain ideal_reduction_torus(const Polynomial& f_in) {
  ReductionChain chain{checked_torus_input(f_in), {}};
  const std::size_t cap = 10 * chain.start.size() + 20;
  Polynomial cur = chain.start;

  auto step = [&](const Polynomial& partner) {
    if (chain.steps.size() >= cap)
      throw Error(Errc::IncompleteReduction, "iteration cap " + std::to_string(cap) + " reached at " + cur.str());
    Polynomial res = pb_torus(partner, cur);
    if (res.is_zero())
      throw Error(Errc::IncompleteReduction, "bracket with " + partner.str() + " vanished at " + cur.str());
    chain.steps.push_back({partner, Rational(1), res});
    cur = std::move(res);
  };

  while (cur.size() > 1) {
    const Exponents lead = cur.terms().begin()->first;
    bool all_parallel = true;
    for (const auto& [e, c] : cur.terms())
      if (static_cast<long>(lead[0]) * e[1] - static_cast<long>(lead[1]) * e[0] != 0) all_parallel = false;
    if (!all_parallel) step(torus_monomial(lead[0], lead[1]));
    else step(lead[1] != 0 ? torus_monomial(1, 0) : torus_monomial(0, 1));
  }

  int m = cur.terms().begin()->first[0];
  int n = cur.terms().begin()->first[1];
  if (m == 1 && n == 0) return chain;
  if (m == 0) {
    step(torus_monomial(1, 0));
    m = 1;
  }
  if (n != 1) step(torus_monomial(0, 1 - n));
  if (m != 1) step(torus_monomial(1 - m, 0));
  step(torus_monomial(0, -1));
  return chain;
}

bool replay_chain(const ReductionChain& chain) {
  Polynomial cur = chain.start;
  for (const auto& s : chain.steps) {
    Polynomial res = s.scalar * pb_torus(s.partner, cur);
    if (!(res == s.result)) return false;
    cur = std::move(res);
  }
  return cur.is_monomial() && cur.terms().begin()->first == Exponents{1, 0};
}

// ===========================================================================
// Danielewski surfaces

Polynomial jac_localized(const DanElement& f, const DanElement& g) {
  if (!f.ring()->same_as(*g.ring())) throw Error(Errc::MixedRings, "jac of elements of different surfaces");
  const Polynomial fl = dan_localize(f);
  const Polynomial gl = dan_localize(g);
  return partial(fl, 0) * partial(gl, 1) - partial(fl, 1) * partial(gl, 0);
}

std::optional<Rational> is_constant_jac(const DanElement& f, const DanElement& g) {
  const Polynomial j = jac_localized(f, g);
  if (j.is_zero() || !j.is_constant()) return std::nullopt;
  return j.constant_term();
}

DanElement pb_dan(const DanElement& f, const DanElement& g) {
  const Polynomial x = Polynomial::monomial(f.ring()->chart(), {1, 0});
  return dan_delocalize(f.ring(), x * jac_localized(f, g));
}

DanVectorField::DanVectorField(DanRingPtr ring)
    : x_(DanElement(ring)), y_(DanElement(ring)), z_(DanElement(std::move(ring))) {}

DanVectorField::DanVectorField(DanElement x_img, DanElement y_img, DanElement z_img)
    : x_(std::move(x_img)), y_(std::move(y_img)), z_(std::move(z_img)) {
  const DanRingPtr& r = x_.ring();
  if (!r->same_as(*y_.ring()) || !r->same_as(*z_.ring())) throw Error(Errc::MixedRings, "images in different rings");
  const DanElement t = DanElement::y(r) * x_ + DanElement::x(r) * y_ - DanElement::from_z(r, r->p_prime()) * z_;
  if (!t.is_zero()) throw Error(Errc::NotTangent, "y*X + x*Y - p'(z)*Z = " + t.str());
}

DanElement DanVectorField::apply(const DanElement& f) const {
  const DanRingPtr& r = ring();
  const Polynomial& rep = f.rep();
  return DanElement::normalize(r, partial(rep, 0)) * x_ + DanElement::normalize(r, partial(rep, 1)) * y_ +
         DanElement::normalize(r, partial(rep, 2)) * z_;
}

std::string DanVectorField::str() const {
  return "[x -> " + x_.str() + ", y -> " + y_.str() + ", z -> " + z_.str() + "]";
}

DanVectorField operator+(const DanVectorField& a, const DanVectorField& b) {
  return DanVectorField(a.x_ + b.x_, a.y_ + b.y_, a.z_ + b.z_, true);
}

DanVectorField operator-(const DanVectorField& a, const DanVectorField& b) {
  return DanVectorField(a.x_ - b.x_, a.y_ - b.y_, a.z_ - b.z_, true);
}

DanVectorField operator*(const DanElement& f, const DanVectorField& a) {
  return DanVectorField(f * a.x_, f * a.y_, f * a.z_, true);
}

bool operator==(const DanVectorField& a, const DanVectorField& b) {
  return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
}

DanVectorField hamiltonian_dan(const DanElement& f) {
  const DanRingPtr& r = f.ring();
  return DanVectorField(pb_dan(f, DanElement::x(r)), pb_dan(f, DanElement::y(r)), pb_dan(f, DanElement::z(r)));
}

DanVectorField dan_vf_bracket(const DanVectorField& mu, const DanVectorField& nu) {
  if (!mu.ring()->same_as(*nu.ring())) throw Error(Errc::MixedRings, "fields on different surfaces");
  return DanVectorField(mu.apply(nu.x_img()) - nu.apply(mu.x_img()), mu.apply(nu.y_img()) - nu.apply(mu.y_img()),
                        mu.apply(nu.z_img()) - nu.apply(mu.z_img()));
}

DanVectorField dan_frame_field(const DanElement& f, const DanElement& g, const DanElement& h) {
  const DanRingPtr& r = f.ring();
  return f * hamiltonian_dan(DanElement::x(r)) + g * hamiltonian_dan(DanElement::y(r)) +
         h * hamiltonian_dan(DanElement::z(r));
}

DanElement div_dan(const DanVectorField& mu) {
  const DanRingPtr& r = mu.ring();
  const Polynomial u = dan_localize(mu.x_img());
  const Polynomial w = dan_localize(mu.z_img());
  const Polynomial x_inv = Polynomial::monomial(r->chart(), {-1, 0});
  return dan_delocalize(r, partial(u, 0) + partial(w, 1) - u * x_inv);
}

DanElement div_dan_basis(const DanElement& f, const DanElement& g, const DanElement& h) {
  const DanRingPtr& r = f.ring();
  if (!r->same_as(*g.ring()) || !r->same_as(*h.ring())) throw Error(Errc::MixedRings, "frame coefficients");
  auto d = [&](const DanElement& e, std::size_t v) { return DanElement::normalize(r, partial(e.rep(), v)); };
  const DanElement dp = DanElement::from_z(r, r->p_prime());
  return dp * (d(f, 1) - d(g, 0)) + DanElement::x(r) * (d(f, 2) - d(h, 0)) + DanElement::y(r) * (d(h, 1) - d(g, 2));
}

EOmegaResult e_omega_member(const DanElement& e) {
  const DanRingPtr& ring = e.ring();
  const upoly::Coeffs c = upoly::from_polynomial(e.c_part(), 0);
  const int deg_p = ring->degree();
  EOmegaResult out;

  upoly::Coeffs r;
  if (!c.empty()) {
    const int deg_c = upoly::degree(c);
    const int deg_r = deg_c + 1 - deg_p;
    out.equations = static_cast<std::size_t>(deg_c) + 1;
    if (deg_r < 0) {
      out.augmented_rank = 1;
      return out;
    }
    out.unknowns = static_cast<std::size_t>(deg_r) + 1;
    Matrix a(out.equations, out.unknowns);
    upoly::Coeffs zj_p = ring->p_coeffs();
    for (std::size_t j = 0; j < out.unknowns; ++j) {
      const upoly::Coeffs col = upoly::derivative(zj_p);
      for (std::size_t i = 0; i < col.size() && i < out.equations; ++i) a(i, j) = col[i];
      zj_p.insert(zj_p.begin(), Rational(0));
    }
    LinearSolve sol = solve(a, c);
    out.rank = sol.rank;
    out.augmented_rank = sol.augmented_rank;
    if (!sol.solution) return out;
    r = *sol.solution;
    upoly::trim(r);
  }

  const Polynomial r_z = upoly::to_polynomial(r, ring->z(), 0);
  const DanElement f = DanElement::normalize(ring, antiderivative(e.a_part(), "z"));
  const DanElement g =
      -DanElement::normalize(ring, antiderivative(e.b_part(), "z")) - DanElement::from_z(ring, r_z) * DanElement::x(ring);
  DanVectorField pre = dan_frame_field(f, g, DanElement(ring));
  out.witness = EOmegaWitness{r_z, f, g, std::move(pre)};
  return out;
}

int e_omega_codimension(const DanRingPtr& ring, int d) {
  if (d < 1) throw Error(Errc::InvalidArgument, "truncation degree must be positive");
  std::vector<DanElement> basis;
  for (int a = 0; a <= d; ++a) {
    const DanElement za = DanElement::from_z(ring, Polynomial::monomial(ring->z(), {a}));
    basis.push_back(za);
    for (int i = 1; i <= 2; ++i) {
      basis.push_back(DanElement::normalize(ring, Polynomial::monomial(ring->xyz(), {i, 0, a})));
      basis.push_back(DanElement::normalize(ring, Polynomial::monomial(ring->xyz(), {0, i, a})));
    }
  }
  std::vector<upoly::Coeffs> rows;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      upoly::Coeffs c = upoly::from_polynomial(pb_dan(basis[i], basis[j]).c_part(), 0);
      if (!c.empty() && upoly::degree(c) < d) rows.push_back(std::move(c));
    }
  Matrix m(rows.size(), static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) m(i, k) = rows[i][k];
  return d - static_cast<int>(rank(std::move(m)));
}

Width2Dan width2_dan_deg2(const DanElement& e) {
  const DanRingPtr& ring = e.ring();
  if (ring->degree() != 2) throw Error(Errc::WrongDegree, "deg p = " + std::to_string(ring->degree()) + ", expected 2");
  EOmegaResult mem = e_omega_member(e);
  if (!mem.witness) throw Error(Errc::NotInEOmega, e.str());

  Polynomial g(ring->xyz());
  for (const auto& [ex, c] : e.rep().terms()) {
    if (ex[0] > 0) g.add_term(ex, c / Rational(ex[0]));
    else if (ex[1] > 0) g.add_term(ex, -c / Rational(ex[1]));
  }
  const Rational lead = upoly::leading(ring->p_coeffs());
  const DanElement z_plus_a = DanElement::from_z(ring, ring->p_prime() * (Rational(1) / (Rational(2) * lead)));
  return {DanElement::normalize(ring, g), mem.witness->r, z_plus_a};
}

}  // namespace liewidth
