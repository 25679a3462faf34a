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

#ifndef LIEWIDTH_UPOLY_HPP
#define LIEWIDTH_UPOLY_HPP

#include <utility>
#include <vector>

#include "liewidth/poly.hpp"
#include "liewidth/rational.hpp"

// Dense univariate polynomials, c[i] is the coefficient of t^i. Results are
// trimmed (no trailing zeros); the zero polynomial is the empty vector.
namespace liewidth::upoly {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& a);
int degree(const Coeffs& a);
Rational leading(const Coeffs& a);

Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs sub(const Coeffs& a, const Coeffs& b);
Coeffs mul(const Coeffs& a, const Coeffs& b);
Coeffs scale(const Coeffs& a, const Rational& c);
Coeffs pow(const Coeffs& a, unsigned e);
Coeffs derivative(const Coeffs& a);
Rational eval(const Coeffs& a, const Rational& t);

/// Quotient and remainder; b must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b);
/// Monic gcd (empty if both are zero).
Coeffs gcd(Coeffs a, Coeffs b);

/// p(t + a).
Coeffs taylor_shift(const Coeffs& p, const Rational& a);
/// First `order` power-series coefficients of num/den; den[0] must be nonzero.
Coeffs series_div(const Coeffs& num, const Coeffs& den, std::size_t order);

/// Reads p as a polynomial in variable `var` (other variables must be absent,
/// exponents nonnegative). Throws NotUnivariate otherwise.
Coeffs from_polynomial(const Polynomial& p, std::size_t var);
Polynomial to_polynomial(const Coeffs& c, const SpacePtr& space, std::size_t var);

}  // namespace liewidth::upoly

#endif  // LIEWIDTH_UPOLY_HPP
