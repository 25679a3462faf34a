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

#include "liewidth/upoly.hpp"

#include <algorithm>

namespace liewidth::upoly {

void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

Rational leading(const Coeffs& a) { return a.empty() ? Rational(0) : a.back(); }

Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Coeffs sub(const Coeffs& a, const Coeffs& b) { return add(a, scale(b, Rational(-1))); }

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Coeffs scale(const Coeffs& a, const Rational& c) {
  if (c.is_zero()) return {};
  Coeffs out(a);
  for (auto& v : out) v *= c;
  return out;
}

Coeffs pow(const Coeffs& a, unsigned e) {
  Coeffs out{Rational(1)};
  for (unsigned i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

Coeffs derivative(const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
  trim(out);
  return out;
}

Rational eval(const Coeffs& a, const Rational& t) {
  Rational acc(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  Coeffs r(a);
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Coeffs q(r.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = r[k + b.size() - 1] * lead_inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= f * b[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

Coeffs gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

Coeffs taylor_shift(const Coeffs& p, const Rational& a) {
  // Horner in the ring Q[t]: acc = acc * (t + a) + c.
  Coeffs acc;
  const Coeffs lin{a, Rational(1)};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = add(mul(acc, lin), Coeffs{*it});
  return acc;
}

Coeffs series_div(const Coeffs& num, const Coeffs& den, std::size_t order) {
  if (den.empty() || den[0].is_zero()) throw Error(Errc::InvalidArgument, "series_div: den(0) == 0");
  Coeffs out(order);
  const Rational inv0 = den[0].inverse();
  for (std::size_t k = 0; k < order; ++k) {
    Rational s = k < num.size() ? num[k] : Rational(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) s -= den[j] * out[k - j];
    out[k] = s * inv0;
  }
  return out;
}

Coeffs from_polynomial(const Polynomial& p, std::size_t var) {
  Coeffs out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw Error(Errc::NotUnivariate, "'" + p.str() + "'");
    if (e[var] < 0) throw Error(Errc::NotUnivariate, "negative exponent in '" + p.str() + "'");
    if (out.size() <= static_cast<std::size_t>(e[var])) out.resize(e[var] + 1);
    out[e[var]] = c;
  }
  trim(out);
  return out;
}

Polynomial to_polynomial(const Coeffs& c, const SpacePtr& space, std::size_t var) {
  Polynomial out(space);
  Exponents e(space->size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    e[var] = static_cast<int>(i);
    out.add_term(e, c[i]);
  }
  return out;
}

}  // namespace liewidth::upoly
