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

#include "liewidth/random.hpp"
#include "liewidth/vfields.hpp"

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

SpacePtr sp(const char* sig) { return VariableSpace::parse_signature(sig); }
VectorField F(const SpacePtr& s, const char* text) { return VectorField::parse(s, text); }

TEST(VectorField, ParseFormat) {
  auto s = sp("x:a,t:t");
  VectorField v = F(s, "x^2*d/dx + (1/2)*t^-1*d/dt");
  EXPECT_EQ(v.coeff("x"), Polynomial::parse(s, "x^2"));
  EXPECT_EQ(v.coeff("t"), Polynomial::parse(s, "1/2*t^-1"));
  EXPECT_EQ(v.str(), "x^2*d/dx + 1/2*t^-1*d/dt");
  EXPECT_EQ(F(s, "(x + t)*d/dx - d/dt").str(), "(x + t)*d/dx - d/dt");
  EXPECT_EQ(F(s, "x*d/dx + x*d/dx - 2*x*d/dx").str(), "0");
  expect_errc(Errc::SyntaxError, [&] { F(s, "x^2"); });
  expect_errc(Errc::SyntaxError, [&] { F(s, "d/dx*d/dt"); });
  expect_errc(Errc::UnknownVariable, [&] { F(s, "d/dq"); });
}

TEST(VectorField, BracketExamples) {
  auto s = sp("x:a,y:a");
  EXPECT_EQ(vf_bracket(F(s, "d/dx"), F(s, "x*d/dx")), F(s, "d/dx"));
  EXPECT_TRUE(vf_bracket(F(s, "x*d/dx"), F(s, "y*d/dy")).is_zero());
  EXPECT_EQ(vf_bracket(F(s, "d/dx"), F(s, "x^2*d/dy")), F(s, "2*x*d/dy"));
  expect_errc(Errc::MixedSpaces, [&] { vf_bracket(F(s, "d/dx"), F(sp("x:a"), "d/dx")); });
}

TEST(VectorField, DivergenceExamples) {
  EXPECT_EQ(vf_divergence(F(sp("x:a"), "x*d/dx")), Polynomial::constant(sp("x:a"), 1));
  EXPECT_TRUE(vf_divergence(F(sp("t:t"), "t*d/dt")).is_zero());
  auto s = sp("x:a,y:a");
  EXPECT_EQ(vf_divergence(F(s, "x^2*d/dx + x*y*d/dy")), Polynomial::parse(s, "3*x"));
}

TEST(Solvers, AffineExamples) {
  auto x = sp("x:a");
  EXPECT_EQ(solve_bracket_affine(F(x, "x^2*d/dx"), "x"), F(x, "1/3*x^3*d/dx"));
  EXPECT_EQ(solve_bracket_affine(F(x, "d/dx"), "x"), F(x, "x*d/dx"));
  auto xt = sp("x:a,t:t");
  VectorField mu = F(xt, "x*t^-1*d/dt");
  VectorField delta = solve_bracket_affine(mu, "x");
  EXPECT_EQ(delta, F(xt, "1/2*x^2*t^-1*d/dt"));
  EXPECT_EQ(vf_bracket(F(xt, "d/dx"), delta), mu);
  expect_errc(Errc::UnknownVariable, [&] { solve_bracket_affine(mu, "w"); });
}

TEST(Solvers, TorusExamples) {
  auto t = sp("t:t");
  auto s1 = solve_bracket_torus(F(t, "t^-1*d/dt"), "t");
  EXPECT_EQ(s1.l, 1);
  EXPECT_EQ(s1.delta, F(t, "-1/2*t^-1*d/dt"));
  auto s2 = solve_bracket_torus(F(t, "d/dt"), "t");
  EXPECT_EQ(s2.l, 2);
  EXPECT_EQ(s2.delta, F(t, "-1/3*t^-1*d/dt"));
  EXPECT_EQ(vf_bracket(F(t, "t^2*d/dt"), s2.delta), F(t, "d/dt"));
  auto s3 = solve_bracket_torus(VectorField(t), "t");
  EXPECT_EQ(s3.l, 0);
  EXPECT_TRUE(s3.delta.is_zero());
}

TEST(Solvers, DivergenceFreeExamples) {
  auto s = sp("a:2");
  EXPECT_EQ(solve_bracket_divfree(F(s, "x2*d/dx1")), F(s, "x1*x2*d/dx1 - 1/2*x2^2*d/dx2"));
  EXPECT_EQ(solve_bracket_divfree(F(s, "d/dx1")), F(s, "x1*d/dx1 - x2*d/dx2"));
  EXPECT_EQ(solve_bracket_divfree(F(s, "x1*d/dx2")), F(s, "1/2*x1^2*d/dx2"));
  expect_errc(Errc::NotDivergenceFree, [&] { solve_bracket_divfree(F(s, "x1*d/dx1")); });
  expect_errc(Errc::NeedTwoVariables, [&] { solve_bracket_divfree(F(sp("a:1"), "d/dx")); });
}

TEST(Solvers, RationalCurveExamples) {
  auto r01 = RatCurveRing::parse("0,1");
  auto R = [&](const char* t) { return RatCurveField{RatCurveElement::parse(r01, t)}; };
  RatCurveWidth2 w = solve_width2_ratcurve(R("(x-1)^-1"));
  EXPECT_EQ(w.delta, R("-1/2*(x-1)^-1"));
  EXPECT_EQ(w.nu, R("1/2*(x-1)^-1"));

  RatCurveWidth2 w2 = solve_width2_ratcurve(R("x^2"));
  EXPECT_TRUE(w2.delta.coeff.is_zero());
  EXPECT_EQ(w2.nu, R("1/3*x^3"));

  auto r0 = RatCurveRing::parse("0");
  RatCurveWidth2 w3 = solve_width2_ratcurve(RatCurveField{RatCurveElement::parse(r0, "x^-1")});
  EXPECT_EQ(w3.delta.coeff, RatCurveElement::parse(r0, "-1/2*x^-1"));
  EXPECT_TRUE(w3.nu.coeff.is_zero());

  // [x d/dx, (x-p)^-1 d/dx] = -2 (x-p)^-1 d/dx - p (x-p)^-2 d/dx
  auto rp = RatCurveRing::parse("3");
  RatCurveField b = ratcurve_bracket(RatCurveField{RatCurveElement::x(rp)}, RatCurveField{RatCurveElement::parse(rp, "(x-3)^-1")});
  EXPECT_EQ(b.coeff, RatCurveElement::parse(rp, "-2*(x-3)^-1 - 3*(x-3)^-2"));
}

class FieldProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldProperties, BracketAxiomsAndDivergenceIdentity) {
  auto s = sp(GetParam());
  Rng rng = Rng::derive(41, GetParam());
  for (int i = 0; i < 200; ++i) {
    VectorField a = random_vector_field(rng, s, 4, 3);
    VectorField b = random_vector_field(rng, s, 4, 3);
    VectorField c = random_vector_field(rng, s, 4, 3);
    Polynomial f = random_polynomial(rng, s, 3, 3);
    ASSERT_EQ(vf_bracket(a, b), -vf_bracket(b, a));
    ASSERT_TRUE((vf_bracket(a, vf_bracket(b, c)) + vf_bracket(b, vf_bracket(c, a)) + vf_bracket(c, vf_bracket(a, b))).is_zero());
    // Commutator of the derivations acting on a test function.
    ASSERT_EQ(vf_bracket(a, b).apply(f), a.apply(b.apply(f)) - b.apply(a.apply(f)));
    ASSERT_EQ(vf_divergence(vf_bracket(a, b)), a.apply(vf_divergence(b)) - b.apply(vf_divergence(a)));
    ASSERT_EQ(vf_divergence(f * a), f * vf_divergence(a) + a.apply(f));
  }
}

TEST_P(FieldProperties, SolversReplay) {
  auto s = sp(GetParam());
  Rng rng = Rng::derive(43, GetParam());
  for (int i = 0; i < 100; ++i) {
    VectorField mu = random_vector_field(rng, s, 6, 4);
    for (const auto& v : s->vars()) {
      std::vector<Polynomial> unit(s->size(), Polynomial(s));
      if (v.kind == VarKind::Affine) {
        unit[s->require(v.name)] = Polynomial::constant(s, 1);
        ASSERT_EQ(vf_bracket(VectorField(s, unit), solve_bracket_affine(mu, v.name)), mu);
      } else {
        auto sol = solve_bracket_torus(mu, v.name);
        Exponents e(s->size(), 0);
        e[s->require(v.name)] = sol.l;
        unit[s->require(v.name)] = Polynomial::monomial(s, e);
        ASSERT_EQ(vf_bracket(VectorField(s, unit), sol.delta), mu) << mu.str();
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Spaces, FieldProperties, ::testing::Values("a:2", "t:1", "a:1,t:1", "a:2,t:2"));

TEST(DivergenceFree, RandomHamiltonianFields) {
  auto s = sp("a:3");
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    // Divergence-free fields as sums of H_x2 d/dx1 - H_x1 d/dx2 style rotations.
    Polynomial h1 = random_polynomial(rng, s, 5, 4), h2 = random_polynomial(rng, s, 5, 4);
    VectorField mu(s, {partial(h1, 1), -partial(h1, 0) + partial(h2, 2), -partial(h2, 1)});
    ASSERT_TRUE(vf_divergence(mu).is_zero());
    VectorField eta = solve_bracket_divfree(mu);
    ASSERT_TRUE(vf_divergence(eta).is_zero());
    ASSERT_EQ(vf_bracket(VectorField::coordinate(s, "x1", Polynomial::constant(s, 1)), eta), mu);
  }
}

TEST(RatCurveFields, Width2Replay) {
  Rng rng(53);
  for (const char* poles : {"0,1", "0,1,-1", "2/3"}) {
    auto ring = RatCurveRing::parse(poles);
    RatCurveField dx{RatCurveElement::constant(ring, 1)}, xdx{RatCurveElement::x(ring)};
    for (int i = 0; i < 100; ++i) {
      RatCurveField mu{random_ratcurve_element(rng, ring, 4, 3, 4)};
      RatCurveWidth2 w = solve_width2_ratcurve(mu);
      ASSERT_EQ(ratcurve_bracket(dx, w.nu) + ratcurve_bracket(xdx, w.delta), mu) << mu.str();
    }
  }
}

}  // namespace
}  // namespace liewidth
