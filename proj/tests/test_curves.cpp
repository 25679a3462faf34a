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

#include "liewidth/curves.hpp"
#include "liewidth/random.hpp"

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

// ord(e) from the norm: conjugation y -> -y fixes the single place at
// infinity, so 2 ord(e) = ord(a^2 - b^2 h) = -2 deg(a^2 - b^2 h).
Valuation norm_ord(const CurveElement& e) {
  if (e.is_zero()) return Valuation::infinity();
  const Polynomial n = e.a() * e.a() - e.b() * e.b() * e.ring()->h();
  return Valuation::finite(-n.degree(0));
}

class CurveG : public ::testing::TestWithParam<const char*> {
 protected:
  CurveRingPtr ring = CurveRing::parse(GetParam());
  CurveElement C(const char* text) { return CurveElement::parse(ring, text); }
  CurveElement H(const Polynomial& p) { return CurveElement(ring, p, Polynomial(ring->x_space())); }
  int g() const { return ring->genus(); }
};

TEST_P(CurveG, Orders) {
  EXPECT_EQ(ord_inf(C("x")), Valuation::finite(-2));
  EXPECT_EQ(ord_inf(C("y")), Valuation::finite(-(2 * g() + 1)));
  EXPECT_EQ(ord_inf(C("7")), Valuation::finite(0));
  EXPECT_TRUE(ord_inf(C("0")).is_infinite());
  EXPECT_EQ(ord_field(C("1")), Valuation::finite(2 - 2 * g()));
  EXPECT_EQ(ord_field(C("x")), Valuation::finite(-2 * g()));
  EXPECT_TRUE(ord_field(C("0")).is_infinite());
}

TEST_P(CurveG, Tau) {
  EXPECT_EQ(tau_apply(C("x")), C("2*y"));
  EXPECT_EQ(tau_apply(C("y")), H(ring->h_prime()));
  EXPECT_TRUE(tau_apply(C("5")).is_zero());
  // Chain rule on the defining equation y^2 - h(x).
  const SpacePtr& s = ring->xy_space();
  Polynomial rel = Polynomial::parse(s, "y^2") - embed(ring->h(), s);
  Polynomial formal = Polynomial::parse(s, "2*y") * partial(rel, 0) + embed(ring->h_prime(), s) * partial(rel, 1);
  EXPECT_TRUE(curve_normalize(ring, formal).is_zero());
}

TEST_P(CurveG, ValuationProperties) {
  Rng rng = Rng::derive(83, GetParam());
  for (int i = 0; i < 200; ++i) {
    CurveElement a = random_curve_element(rng, ring, 5, 3), b = random_curve_element(rng, ring, 5, 3);
    ASSERT_EQ(ord_inf(a), norm_ord(a));
    ASSERT_EQ(ord_inf(a * b), ord_inf(a) + ord_inf(b));
    ASSERT_FALSE(ord_inf(a + b) < std::min(ord_inf(a), ord_inf(b), [](auto& u, auto& v) { return u < v; }));
    ASSERT_EQ(tau_apply(a * b), tau_apply(a) * b + a * tau_apply(b));
    if (!a.is_zero() && !(ord_inf(a) == Valuation::finite(0)))
      ASSERT_EQ(ord_inf(tau_apply(a)), ord_inf(a) + (1L - 2 * g()));
  }
}

TEST_P(CurveG, BracketProperties) {
  Rng rng = Rng::derive(89, GetParam());
  int mismatched = 0;
  for (int i = 0; i < 200; ++i) {
    CurveElement a = random_curve_element(rng, ring, 4, 3), b = random_curve_element(rng, ring, 4, 3);
    CurveElement c = random_curve_element(rng, ring, 3, 2);
    ASSERT_EQ(field_bracket(a, b), -field_bracket(b, a));
    ASSERT_TRUE((field_bracket(a, field_bracket(b, c)) + field_bracket(b, field_bracket(c, a)) +
                 field_bracket(c, field_bracket(a, b))).is_zero());
    if (!a.is_zero() && !b.is_zero() && !(ord_inf(a) == ord_inf(b))) {
      ++mismatched;
      ASSERT_EQ(ord_field(field_bracket(a, b)), ord_field(a) + ord_field(b) + (-1L));
    }
  }
  EXPECT_GT(mismatched, 100);
}

TEST_P(CurveG, Certificates) {
  Rng rng = Rng::derive(97, GetParam());
  for (int i = 0; i < 300; ++i) {
    CurveElement f = random_curve_element(rng, ring, 5, 3), g2 = random_curve_element(rng, ring, 5, 3);
    if (rng.coin() && !g2.is_zero()) f = f + rng.coefficient() * g2;  // exercise the reduction step
    ObstructionCertificate c = obstruction_certificate(f, g2);
    ASSERT_TRUE(certificate_consistent(c, g())) << f.str() << " | " << g2.str();
    ASSERT_FALSE(field_bracket(f, g2) == C("1"));
  }
}

TEST_P(CurveG, TauEquation) {
  auto F = solve_tau_equation(C("2*y"));
  ASSERT_TRUE(F.solution);
  EXPECT_EQ(*F.solution, C("x"));
  auto G = solve_tau_equation(H(ring->h_prime()));
  ASSERT_TRUE(G.solution);
  EXPECT_EQ(*G.solution, C("y"));
  auto one = solve_tau_equation(C("1"));
  EXPECT_FALSE(one.solution);
  EXPECT_LT(one.rank, one.augmented_rank);

  Rng rng = Rng::derive(101, GetParam());
  for (int i = 0; i < 100; ++i) {
    CurveElement src = random_curve_element(rng, ring, 5, 3);
    CurveElement img = tau_apply(src);
    auto s = solve_tau_equation(img);
    ASSERT_TRUE(s.solution);
    ASSERT_EQ(tau_apply(*s.solution), img);
    // Adding a non-image element of low pole order breaks solvability.
    auto bad = solve_tau_equation(img + C("1"));
    ASSERT_FALSE(bad.solution);
    ASSERT_LT(bad.rank, bad.augmented_rank);
  }
}

TEST_P(CurveG, Cokernel) {
  EXPECT_EQ(coker_dimension(ring, 0), 1);
  for (int P = 4 * g() + 2; P <= 4 * g() + 8; ++P) EXPECT_EQ(coker_dimension(ring, P), 2 * g()) << P;
}

INSTANTIATE_TEST_SUITE_P(Curves, CurveG, ::testing::Values("x^3 - 1", "x^5 - x + 1", "x^7 + 2*x - 3"));

class Elliptic : public ::testing::Test {
 protected:
  CurveRingPtr ring = CurveRing::parse("x^3 - 1");
  CurveElement C(const char* text) { return CurveElement::parse(ring, text); }
};

TEST_F(Elliptic, Examples) {
  EXPECT_EQ(ord_inf(C("x^2 + y")), Valuation::finite(-4));
  EXPECT_TRUE(field_bracket(C("1"), C("1")).is_zero());
  EXPECT_EQ(field_bracket(C("x"), C("y")), C("x^3 + 2"));
  EXPECT_EQ(field_bracket(C("1"), C("x")), C("2*y"));
  EXPECT_EQ(ord_field(C("x")), Valuation::finite(-2));
  EXPECT_EQ(ord_field(C("1")), Valuation::finite(0));
  EXPECT_EQ(coker_dimension(ring, 10), 2);
}

TEST_F(Elliptic, Obstruction) {
  ObstructionCertificate a = obstruction_certificate(C("x"), C("y"));
  EXPECT_EQ(a.conclusion, Conclusion::OrderMismatch);
  EXPECT_FALSE(a.lambda_step);
  EXPECT_EQ(a.ord_f, Valuation::finite(-2));
  EXPECT_EQ(a.ord_g, Valuation::finite(-3));
  EXPECT_EQ(a.ord_bracket, Valuation::finite(-6));
  EXPECT_EQ(a.bracket, C("x^3 + 2"));
  EXPECT_FALSE(a.bracket_is_tau);

  ObstructionCertificate b = obstruction_certificate(C("x"), C("x"));
  EXPECT_EQ(b.conclusion, Conclusion::BracketIsZero);
  ASSERT_TRUE(b.lambda_step);
  EXPECT_EQ(b.lambda_step->lambda, Rational(1));
  EXPECT_TRUE(b.lambda_step->reduced_f.is_zero());

  EXPECT_EQ(obstruction_certificate(C("1"), C("1")).conclusion, Conclusion::BracketIsZero);

  ObstructionCertificate c = obstruction_certificate(C("3*x^2 + y"), C("x^2 - x"));
  ASSERT_TRUE(c.lambda_step);
  EXPECT_EQ(c.lambda_step->lambda, Rational(3));
  EXPECT_EQ(c.lambda_step->reduced_f, C("3*x + y"));
  EXPECT_TRUE(certificate_consistent(c, 1));
}

TEST_F(Elliptic, Centralizer) {
  CentralizerResult a = centralizer_check(C("1"), C("1"));
  EXPECT_TRUE(a.proportional);
  EXPECT_EQ(a.lambda, Rational(1));
  CentralizerResult b = centralizer_check(C("x"), C("2*x"));
  EXPECT_TRUE(b.proportional);
  EXPECT_EQ(b.lambda, Rational(2));
  CentralizerResult c = centralizer_check(C("x"), C("y"));
  EXPECT_FALSE(c.proportional);
  EXPECT_EQ(c.witness, C("x^3 + 2"));
  EXPECT_FALSE(centralizer_check(C("x + y"), C("x")).proportional);
  expect_errc(Errc::ZeroInput, [&] { centralizer_check(C("0"), C("x")); });
}

TEST_F(Elliptic, NoEigen) {
  EXPECT_TRUE(no_eigen_check(C("1"), C("1"), Rational(1)).holds);
  NoEigenCertificate b = no_eigen_check(C("x"), C("y"), Rational(5));
  EXPECT_TRUE(b.holds);
  EXPECT_TRUE(b.valuation_remark);
  EXPECT_TRUE(no_eigen_check(C("y"), C("x"), Rational(-1)).holds);
  EXPECT_FALSE(no_eigen_check(C("x"), C("x"), Rational(2)).valuation_remark);
}

TEST(CurveProperties, CentralizerOnRandomPairs) {
  Rng rng(103);
  for (const char* h : {"x^3 - 1", "x^5 - x + 1"}) {
    CurveRingPtr ring = CurveRing::parse(h);
    for (int i = 0; i < 200; ++i) {
      CurveElement f = random_curve_element(rng, ring, 4, 3), g = random_curve_element(rng, ring, 4, 3);
      if (f.is_zero() || g.is_zero()) continue;
      CentralizerResult r = centralizer_check(f, g);
      if (r.proportional) {
        ASSERT_EQ(g, r.lambda * f);
      } else {
        ASSERT_FALSE(r.witness.is_zero());
      }
      Rational lambda = rng.coefficient();
      ASSERT_TRUE(centralizer_check(f, lambda * f).proportional);
      ASSERT_TRUE(no_eigen_check(f, g, lambda).holds);
    }
  }
}

}  // namespace
}  // namespace liewidth
