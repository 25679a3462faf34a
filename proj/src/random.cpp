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

#include "liewidth/random.hpp"

namespace liewidth {

Rng Rng::derive(std::uint64_t seed, std::string_view stream) {
  // FNV-1a of the stream name, mixed into the seed with the splitmix64 finalizer.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) h = (h ^ c) * 0x100000001b3ULL;
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (h | 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational Rng::coefficient() {
  int num = uniform(1, 10);
  if (coin()) num = -num;
  return Rational(num, uniform(1, 10));
}

Polynomial random_polynomial(Rng& rng, const SpacePtr& space, int degree, int max_terms) {
  Polynomial out(space);
  const int terms = rng.uniform(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(space->size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = (*space)[i].kind == VarKind::Affine ? rng.uniform(0, degree) : rng.uniform(-degree, degree);
    out.add_term(e, rng.coefficient());
  }
  return out;
}

Polynomial random_nonzero_polynomial(Rng& rng, const SpacePtr& space, int degree, int max_terms) {
  for (;;) {
    Polynomial p = random_polynomial(rng, space, degree, std::max(max_terms, 1));
    if (!p.is_zero()) return p;
  }
}

DanElement random_dan_element(Rng& rng, const DanRingPtr& ring, int degree, int max_terms) {
  return DanElement::normalize(ring, random_polynomial(rng, ring->xyz(), degree, max_terms));
}

CurveElement random_curve_element(Rng& rng, const CurveRingPtr& ring, int degree, int max_terms) {
  return CurveElement(ring, random_polynomial(rng, ring->x_space(), degree, max_terms),
                      random_polynomial(rng, ring->x_space(), degree, max_terms));
}

RatCurveElement random_ratcurve_element(Rng& rng, const RatCurveRingPtr& ring, int degree, int max_order,
                                        int max_terms) {
  RatCurveElement out = RatCurveElement::from_poly(ring, random_polynomial(rng, ring->x_space(), degree, max_terms));
  const std::size_t n = ring->poles().size();
  if (n == 0) return out;
  const int polar_terms = rng.uniform(0, max_terms);
  for (int t = 0; t < polar_terms; ++t) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    out += RatCurveElement::pole_power(ring, i, rng.uniform(1, max_order), rng.coefficient());
  }
  return out;
}

VectorField random_vector_field(Rng& rng, const SpacePtr& space, int degree, int max_terms) {
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < space->size(); ++i) coeffs.push_back(random_polynomial(rng, space, degree, max_terms));
  return VectorField(space, std::move(coeffs));
}

}  // namespace liewidth
