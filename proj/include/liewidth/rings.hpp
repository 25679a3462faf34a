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

#ifndef LIEWIDTH_RINGS_HPP
#define LIEWIDTH_RINGS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liewidth/poly.hpp"
#include "liewidth/upoly.hpp"

namespace liewidth {

// ===========================================================================
// Danielewski surfaces  xy = p(z)

/// Coordinate ring O(D_p) of the surface xy = p(z), p squarefree of degree >= 1.
class DanRing {
 public:
  /// p must be univariate (any variable name; it is read as z).
  static std::shared_ptr<const DanRing> make(const Polynomial& p);
  static std::shared_ptr<const DanRing> parse(std::string_view p_text);

  int degree() const { return upoly::degree(p_); }
  const upoly::Coeffs& p_coeffs() const { return p_; }

  /// p and p' in the z-only space.
  const Polynomial& p() const { return p_z_; }
  const Polynomial& p_prime() const { return dp_z_; }

  /// Spaces: (x,y,z) affine; (x,z); (y,z); (z); and the localization chart
  /// (x Laurent, z affine).
  const SpacePtr& xyz() const { return xyz_; }
  const SpacePtr& xz() const { return xz_; }
  const SpacePtr& yz() const { return yz_; }
  const SpacePtr& z() const { return z_; }
  const SpacePtr& chart() const { return chart_; }

  bool same_as(const DanRing& o) const { return this == &o || p_ == o.p_; }

 private:
  explicit DanRing(upoly::Coeffs p);

  upoly::Coeffs p_;
  SpacePtr xyz_, xz_, yz_, z_, chart_;
  Polynomial p_z_, dp_z_;
};

using DanRingPtr = std::shared_ptr<const DanRing>;

/// Element xA(x,z) + yB(y,z) + c(z) of O(D_p). Stored as a single polynomial
/// over (x,y,z) free of mixed monomials x^i y^j (i, j >= 1).
class DanElement {
 public:
  explicit DanElement(DanRingPtr ring);

  static DanElement normalize(DanRingPtr ring, const Polynomial& raw);
  static DanElement parse(DanRingPtr ring, std::string_view text);
  static DanElement from_parts(DanRingPtr ring, const Polynomial& a_xz, const Polynomial& b_yz, const Polynomial& c_z);
  static DanElement constant(DanRingPtr ring, const Rational& c);
  static DanElement x(DanRingPtr ring);
  static DanElement y(DanRingPtr ring);
  static DanElement z(DanRingPtr ring);
  /// Embeds a polynomial in z alone.
  static DanElement from_z(DanRingPtr ring, const Polynomial& c_z);

  const DanRingPtr& ring() const { return ring_; }
  const Polynomial& rep() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }

  Polynomial a_part() const;  // A in (x,z)
  Polynomial b_part() const;  // B in (y,z)
  Polynomial c_part() const;  // c in (z)

  /// "x*(A) + y*(B) + (c)", zero parts omitted.
  std::string str() const;

  DanElement& operator+=(const DanElement& o);
  DanElement& operator-=(const DanElement& o);
  friend DanElement operator+(DanElement a, const DanElement& b) { return a += b; }
  friend DanElement operator-(DanElement a, const DanElement& b) { return a -= b; }
  friend DanElement operator*(const DanElement& a, const DanElement& b);
  friend DanElement operator*(const Rational& c, const DanElement& a);
  friend DanElement operator-(const DanElement& a);
  friend bool operator==(const DanElement& a, const DanElement& b);

 private:
  DanElement(DanRingPtr ring, Polynomial nf) : ring_(std::move(ring)), nf_(std::move(nf)) {}
  void check_ring(const DanElement& o) const;

  DanRingPtr ring_;
  Polynomial nf_;
};

DanElement dan_normalize(const DanRingPtr& ring, const Polynomial& raw);
inline DanElement dan_mul(const DanElement& a, const DanElement& b) { return a * b; }
inline DanElement dan_add(const DanElement& a, const DanElement& b) { return a + b; }

/// Image under y -> p(z)/x in k[x^{+-1}, z].
Polynomial dan_localize(const DanElement& e);
/// Inverse of dan_localize; throws NotInImage if q is outside k[x, z, p(z)/x].
DanElement dan_delocalize(const DanRingPtr& ring, const Polynomial& q);

// ===========================================================================
// Hyperelliptic curves  y^2 = h(x)

/// O(C) for y^2 = h(x), h monic squarefree of odd degree 2g+1 >= 3.
class CurveRing {
 public:
  static std::shared_ptr<const CurveRing> make(const Polynomial& h);
  static std::shared_ptr<const CurveRing> parse(std::string_view h_text);

  int genus() const { return genus_; }
  int h_degree() const { return 2 * genus_ + 1; }
  const Polynomial& h() const { return h_; }
  const Polynomial& h_prime() const { return dh_; }
  const SpacePtr& x_space() const { return x_; }
  const SpacePtr& xy_space() const { return xy_; }

  bool same_as(const CurveRing& o) const { return this == &o || h_ == o.h_; }

 private:
  CurveRing(Polynomial h, int genus, SpacePtr x, SpacePtr xy);

  Polynomial h_;
  Polynomial dh_;
  int genus_;
  SpacePtr x_, xy_;
};

using CurveRingPtr = std::shared_ptr<const CurveRing>;

/// a(x) + b(x) y in O(C).
class CurveElement {
 public:
  explicit CurveElement(CurveRingPtr ring);
  CurveElement(CurveRingPtr ring, Polynomial a, Polynomial b);

  static CurveElement normalize(CurveRingPtr ring, const Polynomial& raw);
  static CurveElement parse(CurveRingPtr ring, std::string_view text);
  static CurveElement constant(CurveRingPtr ring, const Rational& c);
  static CurveElement x(CurveRingPtr ring);
  static CurveElement y(CurveRingPtr ring);

  const CurveRingPtr& ring() const { return ring_; }
  const Polynomial& a() const { return a_; }
  const Polynomial& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return b_.is_zero() && a_.is_constant(); }

  /// "(a) + (b)*y", zero parts omitted.
  std::string str() const;

  CurveElement& operator+=(const CurveElement& o);
  CurveElement& operator-=(const CurveElement& o);
  friend CurveElement operator+(CurveElement a, const CurveElement& b) { return a += b; }
  friend CurveElement operator-(CurveElement a, const CurveElement& b) { return a -= b; }
  friend CurveElement operator*(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator*(const Rational& c, const CurveElement& a);
  friend CurveElement operator-(const CurveElement& a);
  friend bool operator==(const CurveElement& a, const CurveElement& b);

 private:
  void check_ring(const CurveElement& o) const;

  CurveRingPtr ring_;
  Polynomial a_;
  Polynomial b_;
};

CurveElement curve_normalize(const CurveRingPtr& ring, const Polynomial& raw);

// ===========================================================================
// Punctured lines  A^1 minus {p_1, ..., p_n}

class RatCurveRing {
 public:
  static std::shared_ptr<const RatCurveRing> make(std::vector<Rational> poles);
  /// Comma-separated rationals, e.g. "0,1,-1".
  static std::shared_ptr<const RatCurveRing> parse(std::string_view poles_csv);

  const std::vector<Rational>& poles() const { return poles_; }
  std::optional<std::size_t> pole_index(const Rational& p) const;
  const SpacePtr& x_space() const { return x_; }
  /// x - p_i as a dense polynomial.
  upoly::Coeffs linear_factor(std::size_t i) const { return {-poles_[i], Rational(1)}; }

  bool same_as(const RatCurveRing& o) const { return this == &o || poles_ == o.poles_; }

 private:
  explicit RatCurveRing(std::vector<Rational> poles);

  std::vector<Rational> poles_;
  SpacePtr x_;
};

using RatCurveRingPtr = std::shared_ptr<const RatCurveRing>;

/// poly(x) + sum c_{ij} (x - p_i)^{-j}, the partial-fraction normal form.
class RatCurveElement {
 public:
  using PolarKey = std::pair<std::size_t, int>;  // (pole index, order >= 1)
  using Polar = std::map<PolarKey, Rational>;

  explicit RatCurveElement(RatCurveRingPtr ring);

  static RatCurveElement from_poly(RatCurveRingPtr ring, const Polynomial& poly);
  static RatCurveElement constant(RatCurveRingPtr ring, const Rational& c);
  static RatCurveElement x(RatCurveRingPtr ring);
  /// (x - p_i)^{-order}
  static RatCurveElement pole_power(RatCurveRingPtr ring, std::size_t i, int order, const Rational& c = Rational(1));
  static RatCurveElement parse(RatCurveRingPtr ring, std::string_view text);

  const RatCurveRingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return poly_; }
  const Polar& polar() const { return polar_; }
  bool is_zero() const { return poly_.is_zero() && polar_.empty(); }
  Rational polar_coefficient(std::size_t i, int order) const;

  /// Common-denominator form numerator / prod (x - p_i)^{e_i}.
  std::pair<upoly::Coeffs, std::vector<int>> to_fraction() const;

  RatCurveElement derivative() const;
  /// Inverse of a unit c * prod (x - p_i)^{k_i}; throws NonInvertibleSubstitution otherwise.
  RatCurveElement inverse() const;
  RatCurveElement pow(long e) const;

  std::string str() const;

  RatCurveElement& operator+=(const RatCurveElement& o);
  RatCurveElement& operator-=(const RatCurveElement& o);
  friend RatCurveElement operator+(RatCurveElement a, const RatCurveElement& b) { return a += b; }
  friend RatCurveElement operator-(RatCurveElement a, const RatCurveElement& b) { return a -= b; }
  friend RatCurveElement operator*(const RatCurveElement& a, const RatCurveElement& b);
  friend RatCurveElement operator*(const Rational& c, const RatCurveElement& a);
  friend RatCurveElement operator-(const RatCurveElement& a);
  friend bool operator==(const RatCurveElement& a, const RatCurveElement& b);

 private:
  friend RatCurveElement ratcurve_normalize_dense(const RatCurveRingPtr&, const upoly::Coeffs&, const std::vector<int>&);
  void check_ring(const RatCurveElement& o) const;
  void add_polar(const PolarKey& k, const Rational& c);

  RatCurveRingPtr ring_;
  Polynomial poly_;
  Polar polar_;
};

/// Partial-fraction decomposition of numerator / prod (x - pole)^{e}.
/// Keys of `denominator` must be declared poles (UndeclaredPole otherwise).
RatCurveElement ratcurve_normalize(const RatCurveRingPtr& ring, const Polynomial& numerator,
                                   const std::map<Rational, int>& denominator);
RatCurveElement ratcurve_normalize_dense(const RatCurveRingPtr& ring, const upoly::Coeffs& numerator,
                                         const std::vector<int>& exponents);

}  // namespace liewidth

#endif  // LIEWIDTH_RINGS_HPP
