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

#ifndef LIEWIDTH_RANDOM_HPP
#define LIEWIDTH_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "liewidth/poly.hpp"
#include "liewidth/rings.hpp"
#include "liewidth/vfields.hpp"

namespace liewidth {

/// Deterministic generator. Independent streams are derived from a base seed
/// and a stream name, so results do not depend on the order checks run in.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng derive(std::uint64_t seed, std::string_view stream);

  int uniform(int lo, int hi);
  /// Nonzero rational with |numerator| <= 10 and denominator in [1, 10].
  Rational coefficient();
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Up to `max_terms` random terms; affine exponents in [0, degree],
/// Laurent exponents in [-degree, degree]. May be zero.
Polynomial random_polynomial(Rng& rng, const SpacePtr& space, int degree, int max_terms);
/// Like random_polynomial but never zero.
Polynomial random_nonzero_polynomial(Rng& rng, const SpacePtr& space, int degree, int max_terms);

DanElement random_dan_element(Rng& rng, const DanRingPtr& ring, int degree, int max_terms);
/// a + b y with deg a, deg b <= degree.
CurveElement random_curve_element(Rng& rng, const CurveRingPtr& ring, int degree, int max_terms);
/// Polynomial part of degree <= degree plus polar terms of order <= max_order.
RatCurveElement random_ratcurve_element(Rng& rng, const RatCurveRingPtr& ring, int degree, int max_order,
                                        int max_terms);
VectorField random_vector_field(Rng& rng, const SpacePtr& space, int degree, int max_terms);

}  // namespace liewidth

#endif  // LIEWIDTH_RANDOM_HPP
