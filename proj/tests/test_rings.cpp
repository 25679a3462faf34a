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

#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "liewidth/random.hpp"
#include "liewidth/rings.hpp"

namespace liewidth {
namespace {

template <class F>
void expect_errc(Errc code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Evaluates p at a point given by variable name.
Rational eval(const Polynomial& p, const std::map<std::string, Rational>& at) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Rational& v = at.at((*p.space())[i].name);
      for (int k = 0; k < std::abs(e[i]); ++k) term = e[i] > 0 ? term * v : term / v;
    }
    sum += term;
  }
  return sum;
}

class Dan : public ::testing::Test {
 protected:
  DanRingPtr ring = DanRing::parse("z^2 - 1");
  DanElement N(const char* text) { return DanElement::parse(ring, text); }
  Polynomial Z(const char* text) { return Polynomial::parse(ring->z(), text); }
};

TEST_F(Dan, RingValidation) {
  expect_errc(Errc::NotSquarefree, [] { DanRing::parse("z^2"); });
  expect_errc(Errc::InvalidRing, [] { DanRing::parse("3"); });
  EXPECT_EQ(DanRing::parse("z^3 - z")->degree(), 3);
}

TEST_F(Dan, NormalizeExamples) {
  EXPECT_EQ(N("x*y").c_part(), ring->p());
  EXPECT_TRUE(N("x*y").a_part().is_zero());
  EXPECT_EQ(N("x^2*y").a_part(), embed(ring->p(), ring->xz()));
  EXPECT_EQ(N("x^2*y^2").c_part(), ring->p() * ring->p());
  EXPECT_EQ(N("x") * N("y"), DanElement::from_z(ring, ring->p()));
  DanElement e = (N("x") + N("y")) * N("z");
  EXPECT_EQ(e.a_part(), Polynomial::parse(ring->xz(), "z"));
  EXPECT_EQ(e.b_part(), Polynomial::parse(ring->yz(), "z"));
  EXPECT_TRUE(e.c_part().is_zero());
  EXPECT_EQ((N("y") * N("y")).b_part(), Polynomial::parse(ring->yz(), "y"));
}

TEST_F(Dan, Format) {
  EXPECT_EQ(N("x^2*z + y + 3").str(), "x*(x*z) + y*(1) + (3)");
  EXPECT_EQ(N("0").str(), "0");
  DanElement e = N("x^3*z - 2*y^2 + z^2 - x*y");
  EXPECT_EQ(N(e.str().c_str()), e);
}

TEST_F(Dan, Localize) {
  const SpacePtr& c = ring->chart();
  EXPECT_EQ(dan_localize(N("y")), Polynomial::parse(c, "(z^2-1)*x^-1"));
  EXPECT_EQ(dan_localize(N("x*y")), Polynomial::parse(c, "z^2-1"));
  EXPECT_EQ(dan_localize(N("x^2+z")), Polynomial::parse(c, "x^2+z"));
  EXPECT_EQ(dan_delocalize(ring, Polynomial::parse(c, "(z^2-1)*x^-1")), N("y"));
  EXPECT_EQ(dan_delocalize(ring, Polynomial::parse(c, "x^3")), N("x^3"));
  expect_errc(Errc::NotInImage, [&] { dan_delocalize(ring, Polynomial::parse(c, "x^-1*z")); });
}

TEST_F(Dan, MixedRings) {
  DanRingPtr other = DanRing::parse("z^3 - z");
  expect_errc(Errc::MixedRings, [&] { (void)(N("x") + DanElement::x(other)); });
}

TEST(DanProperties, NormalFormAgreesWithPointEvaluation) {
  Rng rng(99);
  for (const char* p : {"z^2 - 1", "z^3 - z", "z^4 - 1"}) {
    DanRingPtr ring = DanRing::parse(p);
    for (int i = 0; i < 100; ++i) {
      Polynomial raw = random_polynomial(rng, ring->xyz(), 4, 5);
      DanElement e = DanElement::normalize(ring, raw);
      // A point of the surface with x != 0.
      Rational x = rng.coefficient(), z = rng.coefficient();
      Rational y = eval(ring->p(), {{"z", z}}) / x;
      std::map<std::string, Rational> pt{{"x", x}, {"y", y}, {"z", z}};
      ASSERT_EQ(eval(raw, pt), eval(e.rep(), pt)) << raw.str();
      for (const auto& [ex, c] : e.rep().terms()) ASSERT_TRUE(ex[0] == 0 || ex[1] == 0);
      ASSERT_EQ(DanElement::normalize(ring, e.rep()), e);
    }
  }
}

TEST(DanProperties, LocalizationIsAnInjectiveHomomorphism) {
  Rng rng(5);
  for (const char* p : {"z^2 - 1", "z^3 - z"}) {
    DanRingPtr ring = DanRing::parse(p);
    for (int i = 0; i < 200; ++i) {
      DanElement a = random_dan_element(rng, ring, 4, 4);
      DanElement b = random_dan_element(rng, ring, 4, 4);
      ASSERT_EQ(dan_localize(a * b), dan_localize(a) * dan_localize(b));
      ASSERT_EQ(dan_localize(a + b), dan_localize(a) + dan_localize(b));
      ASSERT_EQ(dan_delocalize(ring, dan_localize(a)), a);
    }
  }
}

class Curve : public ::testing::Test {
 protected:
  CurveRingPtr ring = CurveRing::parse("x^3 - 1");
  CurveElement C(const char* text) { return CurveElement::parse(ring, text); }
  Polynomial X(const char* text) { return Polynomial::parse(ring->x_space(), text); }
};

TEST_F(Curve, RingValidation) {
  expect_errc(Errc::InvalidRing, [] { CurveRing::parse("x^2"); });
  expect_errc(Errc::InvalidRing, [] { CurveRing::parse("x^4 - 1"); });
  expect_errc(Errc::InvalidRing, [] { CurveRing::parse("2*x^3 - 1"); });
  expect_errc(Errc::NotSquarefree, [] { CurveRing::parse("x^3 - x^2"); });
  EXPECT_EQ(CurveRing::parse("x^5 - x + 1")->genus(), 2);
}

TEST_F(Curve, Normalize) {
  EXPECT_EQ(C("y^2"), CurveElement(ring, ring->h(), Polynomial(ring->x_space())));
  EXPECT_EQ(C("y^3"), CurveElement(ring, Polynomial(ring->x_space()), ring->h()));
  EXPECT_EQ(C("x^2 + 3*x*y").str(), "x^2 + (3*x)*y");
  EXPECT_EQ(C("y").str(), "y");
  EXPECT_EQ(C(C("x*y^5 - 2*x + y").str().c_str()), C("x*y^5 - 2*x + y"));
}

TEST_F(Curve, ProductFormula) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Polynomial a1 = random_polynomial(rng, ring->x_space(), 4, 3), b1 = random_polynomial(rng, ring->x_space(), 4, 3);
    Polynomial a2 = random_polynomial(rng, ring->x_space(), 4, 3), b2 = random_polynomial(rng, ring->x_space(), 4, 3);
    CurveElement prod = CurveElement(ring, a1, b1) * CurveElement(ring, a2, b2);
    ASSERT_EQ(prod.a(), a1 * a2 + b1 * b2 * ring->h());
    ASSERT_EQ(prod.b(), a1 * b2 + a2 * b1);

    Polynomial r1 = random_polynomial(rng, ring->xy_space(), 4, 4), r2 = random_polynomial(rng, ring->xy_space(), 4, 4);
    ASSERT_EQ(curve_normalize(ring, r1 * r2), curve_normalize(ring, r1) * curve_normalize(ring, r2));
  }
}

class RatCurve : public ::testing::Test {
 protected:
  RatCurveRingPtr ring = RatCurveRing::parse("0, 1");
  RatCurveElement R(const char* text) { return RatCurveElement::parse(ring, text); }
  Polynomial X(const char* text) { return Polynomial::parse(ring->x_space(), text); }
};

TEST_F(RatCurve, PartialFractions) {
  RatCurveElement e = ratcurve_normalize(ring, X("1"), {{Rational(0), 1}, {Rational(1), 1}});
  EXPECT_EQ(e, R("-x^-1 + (x-1)^-1"));
  EXPECT_EQ(e.polar_coefficient(0, 1), Rational(-1));
  EXPECT_EQ(e.polar_coefficient(1, 1), Rational(1));

  RatCurveElement f = ratcurve_normalize(ring, X("x^2"), {{Rational(1), 1}});
  EXPECT_EQ(f.poly(), X("x + 1"));
  EXPECT_EQ(f.polar_coefficient(1, 1), Rational(1));
  EXPECT_EQ(ratcurve_normalize(ring, X("x^3"), {}).poly(), X("x^3"));
  expect_errc(Errc::UndeclaredPole, [&] { ratcurve_normalize(ring, X("1"), {{Rational(2), 1}}); });
}

TEST_F(RatCurve, Format) {
  EXPECT_EQ(R("x^2*(x-1)^-1").str(), "x + 1 + (x - 1)^-1");
  EXPECT_EQ(R("-2*x^-3").str(), "-2*x^-3");
  EXPECT_EQ(RatCurveElement::parse(RatCurveRing::parse("-1/2"), "(x + 1/2)^-2").str(), "(x + 1/2)^-2");
  RatCurveElement e = R("3*x - 1/2*x^-2 + 5*(x-1)^-3");
  EXPECT_EQ(R(e.str().c_str()), e);
}

TEST_F(RatCurve, Units) {
  EXPECT_EQ(R("x").inverse(), R("x^-1"));
  EXPECT_EQ(R("2*x^2*(x-1)^-1").inverse(), R("1/2*(x-1)*x^-2"));
  expect_errc(Errc::NonInvertibleSubstitution, [&] { R("x + 1").inverse(); });
  expect_errc(Errc::UndeclaredPole, [&] { (void)ratcurve_normalize(ring, X("1"), {{Rational(-1), 2}}); });
}

TEST(RatCurveProperties, PartialFractionsAgreeWithEvaluation) {
  Rng rng(23);
  for (const char* poles : {"0,1", "0,1,-1", "1/2,-3"}) {
    RatCurveRingPtr ring = RatCurveRing::parse(poles);
    for (int i = 0; i < 100; ++i) {
      Polynomial num = random_polynomial(rng, ring->x_space(), 5, 4);
      std::map<Rational, int> den;
      for (const Rational& p : ring->poles()) den[p] = rng.uniform(0, 3);
      RatCurveElement e = ratcurve_normalize(ring, num, den);
      for (int k = 0; k < 3; ++k) {
        Rational x = Rational(rng.uniform(2, 40), rng.uniform(3, 7)) + Rational(1, 13);
        Rational expect = eval(num, {{"x", x}});
        for (const auto& [p, m] : den)
          for (int j = 0; j < m; ++j) expect /= x - p;
        Rational got = eval(e.poly(), {{"x", x}});
        for (const auto& [key, c] : e.polar()) {
          Rational t = c;
          for (int j = 0; j < key.second; ++j) t /= x - ring->poles()[key.first];
          got += t;
        }
        ASSERT_EQ(got, expect) << num.str();
      }
    }
  }
}

TEST(RatCurveProperties, RingAxioms) {
  Rng rng(29);
  for (const char* poles : {"0,1", "0,1,-1"}) {
    RatCurveRingPtr ring = RatCurveRing::parse(poles);
    for (int i = 0; i < 100; ++i) {
      auto a = random_ratcurve_element(rng, ring, 4, 3, 3);
      auto b = random_ratcurve_element(rng, ring, 4, 3, 3);
      auto c = random_ratcurve_element(rng, ring, 4, 3, 3);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    }
  }
}

}  // namespace
}  // namespace liewidth
