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

#ifndef LIEWIDTH_POISSON_HPP
#define LIEWIDTH_POISSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "liewidth/poly.hpp"
#include "liewidth/rings.hpp"

namespace liewidth {

// ===========================================================================
// Symplectic torus, {x^k y^l, x^m y^n} = (kn - lm) x^{k+m} y^{l+n}

/// The space (x, y), both Laurent.
const SpacePtr& torus_space();

Polynomial pb_torus(const Polynomial& f, const Polynomial& g);

struct TorusWidth1 {
  int k = 0;
  int l = 0;
  Polynomial g;
};

/// (k, l, g) with f = {x^k y^l, g}. f must be nonzero with zero constant term.
/// Pairs are searched by increasing |k| + |l|, then in decreasing lexicographic order.
TorusWidth1 width1_torus(const Polynomial& f);

struct ReductionStep {
  Polynomial partner;
  Rational scalar;
  Polynomial result;  // scalar * {partner, previous result}
};

struct ReductionChain {
  Polynomial start;
  std::vector<ReductionStep> steps;

  const Polynomial& final_result() const { return steps.empty() ? start : steps.back().result; }
};

/// Chain of brackets carrying f to a nonzero multiple of x.
ReductionChain ideal_reduction_torus(const Polynomial& f);

/// Recomputes every step; true if each stored result matches and the chain ends at c*x, c != 0.
bool replay_chain(const ReductionChain& chain);

// ===========================================================================
// Danielewski surfaces, {x, z} = x, {y, z} = -y, {x, y} = p'(z)

DanElement pb_dan(const DanElement& f, const DanElement& g);

/// Derivation of O(D_p) given by the images of x, y, z.
class DanVectorField {
 public:
  explicit DanVectorField(DanRingPtr ring);
  /// Throws NotTangent unless y*X + x*Y - p'(z)*Z = 0.
  DanVectorField(DanElement x_img, DanElement y_img, DanElement z_img);

  const DanRingPtr& ring() const { return x_.ring(); }
  const DanElement& x_img() const { return x_; }
  const DanElement& y_img() const { return y_; }
  const DanElement& z_img() const { return z_; }
  bool is_zero() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }

  DanElement apply(const DanElement& f) const;

  /// "[x -> X, y -> Y, z -> Z]"
  std::string str() const;

  friend DanVectorField operator+(const DanVectorField& a, const DanVectorField& b);
  friend DanVectorField operator-(const DanVectorField& a, const DanVectorField& b);
  friend DanVectorField operator*(const DanElement& f, const DanVectorField& a);
  friend bool operator==(const DanVectorField& a, const DanVectorField& b);

 private:
  DanVectorField(DanElement x, DanElement y, DanElement z, bool) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  DanElement x_, y_, z_;
};

/// theta_f = {f, .}
DanVectorField hamiltonian_dan(const DanElement& f);
DanVectorField dan_vf_bracket(const DanVectorField& mu, const DanVectorField& nu);

/// f*theta_x + g*theta_y + h*theta_z
DanVectorField dan_frame_field(const DanElement& f, const DanElement& g, const DanElement& h);

/// Divergence with respect to the volume form of D_p, computed on the chart
/// x != 0 as du/dx + dw/dz - u/x with u, w the images of x, z.
DanElement div_dan(const DanVectorField& mu);

/// Divergence of f*theta_x + g*theta_y + h*theta_z by the closed formula
/// p'(f_y - g_x) + x(f_z - h_x) + y(h_y - g_z).
DanElement div_dan_basis(const DanElement& f, const DanElement& g, const DanElement& h);

struct EOmegaWitness {
  Polynomial r;              // (r p)' is the k[z]-component
  DanElement theta_x_coeff;  // integral of A dz
  DanElement theta_y_coeff;  // -(integral of B dz) - r x
  DanVectorField preimage;   // div_dan(preimage) = e
};

struct EOmegaResult {
  std::optional<EOmegaWitness> witness;
  // Data of the linear system (r p)' = c.
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
};

EOmegaResult e_omega_member(const DanElement& e);

/// Codimension of the k[z]-components of brackets {f, g} of degree < d inside
/// k[z]_{<d}, by exact rank over brackets of basis monomials.
int e_omega_codimension(const DanRingPtr& ring, int d);

struct Width2Dan {
  DanElement g;
  Polynomial r;
  DanElement z_plus_a;  // p'/(2 lead p)
};

/// e = {g, z + a} + {x, y r} for deg p = 2 and e in E_omega.
Width2Dan width2_dan_deg2(const DanElement& e);

/// f_x g_z - f_z g_x on the chart (x Laurent, z), so that jac(x, z) = 1.
Polynomial jac_localized(const DanElement& f, const DanElement& g);
std::optional<Rational> is_constant_jac(const DanElement& f, const DanElement& g);

}  // namespace liewidth

#endif  // LIEWIDTH_POISSON_HPP
