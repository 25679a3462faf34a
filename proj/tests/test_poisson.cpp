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

#include "liewidth/linalg.hpp"
#include "liewidth/poisson.hpp"
#include "liewidth/random.hpp"
#include "liewidth/upoly.hpp"

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

Polynomial T(const char* text) { return Polynomial::parse(torus_space(), text); }

// {f, g} = xy (f_x g_y - f_y g_x), the bracket of dx/x ^ dy/y in coordinates.
Polynomial torus_oracle(const Polynomial& f, const Polynomial& g) {
  return T("x*y") * (partial(f, 0) * partial(g, 1) - partial(f, 1) * partial(g, 0));
}

// Leibniz extension of {x,y} = p', {x,z} = x, {y,z} = -y to k[x,y,z].
DanElement dan_oracle(const DanElement& f, const DanElement& g) {
  const DanRingPtr& r = f.ring();
  const SpacePtr& s = r->xyz();
  const Polynomial dp = embed(r->p_prime(), s);
  const Polynomial x = Polynomial::variable(s, "x"), y = Polynomial::variable(s, "y");
  const Polynomial gens[3][3] = {{Polynomial(s), dp, x}, {-dp, Polynomial(s), -y}, {-x, y, Polynomial(s)}};
  Polynomial out(s);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out += partial(f.rep(), i) * partial(g.rep(), j) * gens[i][j];
  return DanElement::normalize(r, out);
}

TEST(TorusBracket, Examples) {
  EXPECT_EQ(pb_torus(T("x"), T("y")), T("x*y"));
  EXPECT_EQ(pb_torus(T("x^2*y"), T("x*y^3")), T("5*x^3*y^4"));
  EXPECT_TRUE(pb_torus(T("x + y^-2"), T("x + y^-2")).is_zero());
}

TEST(TorusBracket, MatchesCoordinateFormula) {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_polynomial(rng, torus_space(), 4, 4), g = random_polynomial(rng, torus_space(), 4, 4);
    ASSERT_EQ(pb_torus(f, g), torus_oracle(f, g));
  }
}

TEST(Width1Torus, Examples) {
  TorusWidth1 a = width1_torus(T("x*y"));
  EXPECT_EQ(std::make_pair(a.k, a.l), std::make_pair(1, 0));
  EXPECT_EQ(a.g, T("y"));
  TorusWidth1 b = width1_torus(T("x"));
  EXPECT_EQ(std::make_pair(b.k, b.l), std::make_pair(0, 1));
  EXPECT_EQ(b.g, T("-x*y^-1"));
  TorusWidth1 c = width1_torus(T("x + y"));
  EXPECT_EQ(std::make_pair(c.k, c.l), std::make_pair(1, 1));
  EXPECT_EQ(c.g, T("x^-1 - y^-1"));
  expect_errc(Errc::NonzeroConstantTerm, [] { width1_torus(T("x + 1")); });
  expect_errc(Errc::ZeroInput, [] { width1_torus(T("0")); });
}

TEST(ReductionChain, Examples) {
  ReductionChain a = ideal_reduction_torus(T("x^2*y"));
  ASSERT_EQ(a.steps.size(), 2u);
  EXPECT_EQ(a.steps[0].partner, T("x^-1"));
  EXPECT_EQ(a.steps[0].result, T("-x*y"));
  EXPECT_EQ(a.steps[1].partner, T("y^-1"));
  EXPECT_EQ(a.steps[1].result, T("-x"));
  EXPECT_TRUE(replay_chain(a));

  EXPECT_TRUE(ideal_reduction_torus(T("x")).steps.empty());

  ReductionChain c = ideal_reduction_torus(T("x + y"));
  ASSERT_FALSE(c.steps.empty());
  EXPECT_EQ(c.steps[0].partner, T("x"));
  EXPECT_EQ(c.steps[0].result, T("x*y"));
  EXPECT_TRUE(replay_chain(c));
}

TEST(TorusProperties, DecompositionsReplay) {
  Rng rng(67);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_nonzero_polynomial(rng, torus_space(), 4, 5);
    f -= Polynomial::constant(torus_space(), f.constant_term());
    if (f.is_zero()) continue;
    TorusWidth1 w = width1_torus(f);
    ASSERT_EQ(pb_torus(Polynomial::monomial(torus_space(), {w.k, w.l}), w.g), f);
    ReductionChain ch = ideal_reduction_torus(f);
    ASSERT_TRUE(replay_chain(ch)) << f.str();
    ASSERT_LE(ch.steps.size(), 10 * f.size() + 20);
  }
}

class DanP : public ::testing::TestWithParam<const char*> {
 protected:
  DanRingPtr ring = DanRing::parse(GetParam());
  DanElement N(const char* text) { return DanElement::parse(ring, text); }
  DanElement Zp(const Polynomial& p) { return DanElement::from_z(ring, p); }
};

TEST_P(DanP, GeneratorBrackets) {
  EXPECT_EQ(pb_dan(N("x"), N("z")), N("x"));
  EXPECT_EQ(pb_dan(N("y"), N("z")), N("-y"));
  EXPECT_EQ(pb_dan(N("x"), N("y")), Zp(ring->p_prime()));
}

TEST_P(DanP, HamiltonianFrame) {
  DanVectorField tx = hamiltonian_dan(N("x"));
  EXPECT_TRUE(tx.x_img().is_zero());
  EXPECT_EQ(tx.y_img(), Zp(ring->p_prime()));
  EXPECT_EQ(tx.z_img(), N("x"));
  DanVectorField tz = hamiltonian_dan(N("z"));
  EXPECT_EQ(tz.x_img(), N("-x"));
  EXPECT_EQ(tz.y_img(), N("y"));
  EXPECT_TRUE(tz.z_img().is_zero());
  EXPECT_TRUE(hamiltonian_dan(N("7")).is_zero());
  // x theta_y + y theta_x = p' theta_z
  EXPECT_EQ(N("x") * hamiltonian_dan(N("y")) + N("y") * tx, Zp(ring->p_prime()) * tz);
  expect_errc(Errc::NotTangent, [&] { DanVectorField(N("1"), N("0"), N("0")); });
}

TEST_P(DanP, FieldBrackets) {
  DanVectorField tx = hamiltonian_dan(N("x")), ty = hamiltonian_dan(N("y")), tz = hamiltonian_dan(N("z"));
  EXPECT_EQ(dan_vf_bracket(tx, ty), hamiltonian_dan(Zp(ring->p_prime())));
  EXPECT_EQ(dan_vf_bracket(tx, tz), tx);
  EXPECT_TRUE(dan_vf_bracket(ty, ty).is_zero());
}

TEST_P(DanP, Divergence) {
  const Polynomial r = Polynomial::parse(ring->z(), "z + 2");
  const DanElement rp_prime = Zp(partial(r * ring->p(), 0));
  const DanElement zero(ring);
  EXPECT_EQ(div_dan_basis(zero, N("x") * Zp(r), zero), -rp_prime);
  EXPECT_EQ(div_dan_basis(N("-1/2*z^2"), zero, zero), N("-x*z"));
  EXPECT_EQ(div_dan(hamiltonian_dan(N("x^2*z + y^3"))), zero);
  // Chart formula on theta_x: u = 0, w = x.
  EXPECT_EQ(div_dan(N("z") * hamiltonian_dan(N("x"))), N("x"));
}

TEST_P(DanP, EOmegaWitnesses) {
  EOmegaResult a = e_omega_member(Zp(ring->p_prime()));
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(a.witness->r, Polynomial::constant(ring->z(), 1));
  EXPECT_EQ(a.witness->preimage, N("-x") * hamiltonian_dan(N("y")));
  EXPECT_EQ(div_dan(a.witness->preimage), Zp(ring->p_prime()));

  EOmegaResult b = e_omega_member(N("1"));
  if (ring->degree() >= 2) {
    EXPECT_FALSE(b.witness);
    EXPECT_LT(b.rank, b.augmented_rank);
  } else {
    EXPECT_TRUE(b.witness);
  }

  EOmegaResult c = e_omega_member(N("x*z"));
  ASSERT_TRUE(c.witness);
  EXPECT_TRUE(c.witness->r.is_zero());
  EXPECT_EQ(c.witness->preimage, N("1/2*z^2") * hamiltonian_dan(N("x")));
  EXPECT_EQ(div_dan(c.witness->preimage), N("x*z"));
}

TEST_P(DanP, Jacobian) {
  EXPECT_EQ(jac_localized(N("x"), N("z")), Polynomial::constant(ring->chart(), 1));
  EXPECT_EQ(jac_localized(N("x"), N("y")),
            embed(ring->p_prime(), ring->chart()) * Polynomial::monomial(ring->chart(), {-1, 0}));
  EXPECT_EQ(jac_localized(N("z"), N("x")), Polynomial::constant(ring->chart(), -1));
  EXPECT_EQ(is_constant_jac(N("x"), N("z")), Rational(1));
  EXPECT_FALSE(is_constant_jac(N("x"), N("y")));
  EXPECT_EQ(is_constant_jac(N("2*x"), N("1/2*z")), Rational(1));
}

TEST_P(DanP, Codimension) {
  const int deg = ring->degree();
  // Independent count: span of (z^i p)' for i >= 0 inside k[z]_{<d}.
  for (int d = 2 * deg; d <= 2 * deg + 2; ++d) {
    std::vector<upoly::Coeffs> rows;
    for (int i = 0; i + deg <= d; ++i) {
      upoly::Coeffs zp(i, Rational(0));
      zp.insert(zp.end(), ring->p_coeffs().begin(), ring->p_coeffs().end());
      upoly::Coeffs row = upoly::derivative(zp);
      if (upoly::degree(row) < d) rows.push_back(row);
    }
    Matrix m(rows.size(), d);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < rows[r].size(); ++k) m(r, k) = rows[r][k];
    const int oracle = d - static_cast<int>(rank(m));
    EXPECT_EQ(oracle, deg - 1);
    EXPECT_EQ(e_omega_codimension(ring, d), oracle);
  }
}

TEST_P(DanP, BracketProperties) {
  Rng rng = Rng::derive(71, GetParam());
  for (int i = 0; i < 60; ++i) {
    DanElement f = random_dan_element(rng, ring, 3, 3), g = random_dan_element(rng, ring, 3, 3);
    DanElement h = random_dan_element(rng, ring, 3, 3);
    const DanElement fg = pb_dan(f, g);
    ASSERT_EQ(fg, dan_oracle(f, g));
    ASSERT_EQ(fg, -pb_dan(g, f));
    ASSERT_TRUE((pb_dan(f, pb_dan(g, h)) + pb_dan(g, pb_dan(h, f)) + pb_dan(h, fg)).is_zero());
    ASSERT_EQ(pb_dan(f, g * h), fg * h + g * pb_dan(f, h));
    ASSERT_EQ(dan_vf_bracket(hamiltonian_dan(f), hamiltonian_dan(g)), hamiltonian_dan(fg));
    ASSERT_EQ(dan_localize(fg), Polynomial::monomial(ring->chart(), {1, 0}) * jac_localized(f, g));

    EOmegaResult mem = e_omega_member(fg);
    ASSERT_TRUE(mem.witness);
    ASSERT_EQ(div_dan(mem.witness->preimage), fg);
  }
}

TEST_P(DanP, DivergenceProperties) {
  Rng rng = Rng::derive(73, GetParam());
  const DanElement dp = Zp(ring->p_prime());
  for (int i = 0; i < 60; ++i) {
    DanElement f = random_dan_element(rng, ring, 3, 3), g = random_dan_element(rng, ring, 3, 3);
    DanElement h = random_dan_element(rng, ring, 3, 3), s = random_dan_element(rng, ring, 2, 2);
    DanVectorField mu = dan_frame_field(f, g, h);
    ASSERT_EQ(div_dan(mu), div_dan_basis(f, g, h));
    // Same field, shifted frame coefficients.
    ASSERT_EQ(dan_frame_field(f + s * N("y"), g + s * N("x"), h - s * dp), mu);
    ASSERT_EQ(div_dan_basis(f + s * N("y"), g + s * N("x"), h - s * dp), div_dan(mu));

    DanVectorField nu = dan_frame_field(g, h, f);
    ASSERT_EQ(div_dan(dan_vf_bracket(mu, nu)), mu.apply(div_dan(nu)) - nu.apply(div_dan(mu)));
    ASSERT_EQ(div_dan(s * mu), s * div_dan(mu) + mu.apply(s));
  }
}

INSTANTIATE_TEST_SUITE_P(Surfaces, DanP, ::testing::Values("z^2 - 1", "z^3 - z", "z^4 - 1", "2*z^2 + 3*z - 1"));

class Deg2 : public ::testing::Test {
 protected:
  DanRingPtr ring = DanRing::parse("z^2 - 1");
  DanElement N(const char* text) { return DanElement::parse(ring, text); }
  void expect_replay(const DanElement& e, const Width2Dan& w) {
    EXPECT_EQ(pb_dan(w.g, w.z_plus_a) + pb_dan(N("x"), N("y") * DanElement::from_z(ring, w.r)), e);
  }
};

TEST_F(Deg2, Examples) {
  Width2Dan a = width2_dan_deg2(N("x"));
  EXPECT_EQ(a.g, N("x"));
  EXPECT_TRUE(a.r.is_zero());
  EXPECT_EQ(a.z_plus_a, N("z"));
  expect_replay(N("x"), a);

  Width2Dan b = width2_dan_deg2(N("2*z"));
  EXPECT_TRUE(b.g.is_zero());
  EXPECT_EQ(b.r, Polynomial::constant(ring->z(), 1));
  expect_replay(N("2*z"), b);

  Width2Dan c = width2_dan_deg2(N("x^2*z + y"));
  EXPECT_EQ(c.g, N("1/2*z*x^2 - y"));
  EXPECT_TRUE(c.r.is_zero());
  expect_replay(N("x^2*z + y"), c);

  expect_errc(Errc::NotInEOmega, [&] { width2_dan_deg2(N("1")); });
  expect_errc(Errc::WrongDegree, [] { width2_dan_deg2(DanElement::x(DanRing::parse("z^3 - z"))); });
}

TEST(Deg2Properties, RandomMembersReplay) {
  Rng rng(79);
  for (const char* p : {"z^2 - 1", "3*z^2 + z", "z^2 + 1"}) {
    DanRingPtr ring = DanRing::parse(p);
    for (int i = 0; i < 100; ++i) {
      DanElement e = pb_dan(random_dan_element(rng, ring, 3, 3), random_dan_element(rng, ring, 3, 3));
      Width2Dan w = width2_dan_deg2(e);
      ASSERT_EQ(pb_dan(w.g, w.z_plus_a) + pb_dan(DanElement::x(ring), DanElement::y(ring) * DanElement::from_z(ring, w.r)), e);
    }
  }
}

}  // namespace
}  // namespace liewidth
