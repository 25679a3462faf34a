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

#include "liewidth/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "liewidth/curves.hpp"
#include "liewidth/errors.hpp"
#include "liewidth/poisson.hpp"
#include "liewidth/random.hpp"
#include "liewidth/upoly.hpp"
#include "liewidth/vfields.hpp"

namespace liewidth {

using nlohmann::json;

namespace {

const std::vector<std::string> kDefaultP = {"z^2 - 1", "z^3 - z", "z^4 - 1"};
const std::vector<std::string> kDefaultH = {"x^3 - 1", "x^5 - x + 1"};
const std::vector<std::string> kDefaultPoles = {"0,1", "0,1,-1"};
const std::vector<std::string> kDefaultSpaces = {"a:2", "t:1", "a:1,t:1"};

struct Sample {
  Rng rng;
  std::size_t index;
  json inputs = json::object();
};

// A failed sample returns its reason; passing samples return nullopt.
using Body = std::function<std::optional<std::string>(Sample&)>;

class SuiteRunner {
 public:
  SuiteRunner(const VerifyConfig& cfg, SuiteReport& report) : cfg_(cfg), report_(report) {}

  std::size_t n(std::size_t def) const { return cfg_.samples.value_or(def); }
  int deg(int def) const { return cfg_.degree_bound.value_or(def); }

  void check(const std::string& id, const std::string& description, int criterion, std::size_t samples,
             const Body& body, const std::function<std::string()>& summary = {}) {
    CheckResult res;
    res.id = id;
    res.description = description;
    res.criterion = criterion;
    res.passed = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < samples; ++i) {
      Sample s{Rng::derive(cfg_.seed, id + "#" + std::to_string(i)), i};
      std::optional<std::string> failure;
      try {
        failure = body(s);
      } catch (const Error& e) {
        failure = std::string("raised ") + e.what();
      }
      if (failure) {
        res.passed = false;
        res.details = "sample " + std::to_string(i) + ": " + *failure;
        res.counterexample = {{"check", id}, {"seed", cfg_.seed}, {"sample", i}, {"inputs", s.inputs}};
        break;
      }
    }
    if (res.passed) {
      res.details = std::to_string(samples) + (samples == 1 ? " case" : " samples");
      if (summary) res.details += "; " + summary();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(res));
  }

 private:
  const VerifyConfig& cfg_;
  SuiteReport& report_;
};

std::optional<std::string> unless(bool ok, const std::string& why) {
  if (ok) return std::nullopt;
  return why;
}

// ---------------------------------------------------------------------------
// width1: vector fields on products of affine lines and tori

VectorField unit_field(const SpacePtr& s, std::size_t v, int power) {
  Exponents e(s->size(), 0);
  e[v] = power;
  std::vector<Polynomial> c(s->size(), Polynomial(s));
  c[v] = Polynomial::monomial(s, e);
  return VectorField(s, std::move(c));
}

void width1_suite(const std::string& sig, const VerifyConfig& cfg, SuiteReport& rep) {
  const SpacePtr s = VariableSpace::parse_signature(sig);
  rep.name = "width1";
  rep.params = {{"space", s->signature()}};
  SuiteRunner run(cfg, rep);
  const std::string tag = "[" + s->signature() + "]";

  const int d_solve = run.deg(6);
  run.check("width1.solver_replay" + tag, "[d/dv, delta] = mu (affine v) and [t^l d/dt, delta] = mu (torus t)", 1,
            run.n(100), [&](Sample& x) -> std::optional<std::string> {
              VectorField mu = random_vector_field(x.rng, s, d_solve, 4);
              x.inputs["mu"] = mu.str();
              for (std::size_t v = 0; v < s->size(); ++v) {
                const std::string& name = (*s)[v].name;
                if ((*s)[v].kind == VarKind::Affine) {
                  VectorField delta = solve_bracket_affine(mu, name);
                  if (!(vf_bracket(unit_field(s, v, 0), delta) == mu)) return "affine solver on " + name + " gave " + delta.str();
                } else {
                  TorusBracketSolution sol = solve_bracket_torus(mu, name);
                  if (!(vf_bracket(unit_field(s, v, sol.l), sol.delta) == mu))
                    return "torus solver on " + name + " gave l = " + std::to_string(sol.l) + ", " + sol.delta.str();
                }
              }
              return std::nullopt;
            });

  const int d = run.deg(4);
  run.check("width1.bracket_axioms" + tag, "antisymmetry and Jacobi identity of the Lie bracket", 0, run.n(200),
            [&](Sample& x) -> std::optional<std::string> {
              VectorField a = random_vector_field(x.rng, s, d, 3), b = random_vector_field(x.rng, s, d, 3);
              VectorField c = random_vector_field(x.rng, s, d, 3);
              x.inputs = {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}};
              if (!(vf_bracket(a, b) == -vf_bracket(b, a))) return std::string("[a,b] != -[b,a]");
              VectorField jac = vf_bracket(a, vf_bracket(b, c)) + vf_bracket(b, vf_bracket(c, a)) + vf_bracket(c, vf_bracket(a, b));
              return unless(jac.is_zero(), "Jacobi residual " + jac.str());
            });

  run.check("width1.divergence_identity" + tag, "Div[a,b] = a(Div b) - b(Div a) and Div(f a) = f Div a + a(f)", 0,
            run.n(200), [&](Sample& x) -> std::optional<std::string> {
              VectorField a = random_vector_field(x.rng, s, d, 3), b = random_vector_field(x.rng, s, d, 3);
              Polynomial f = random_polynomial(x.rng, s, d, 3);
              x.inputs = {{"a", a.str()}, {"b", b.str()}, {"f", f.str()}};
              Polynomial lhs = vf_divergence(vf_bracket(a, b));
              Polynomial rhs = a.apply(vf_divergence(b)) - b.apply(vf_divergence(a));
              if (!(lhs == rhs)) return "Div[a,b] = " + lhs.str() + " but expected " + rhs.str();
              return unless(vf_divergence(f * a) == f * vf_divergence(a) + a.apply(f), "Leibniz rule for Div fails");
            });

  bool all_affine = s->size() >= 2;
  for (const auto& v : s->vars()) all_affine = all_affine && v.kind == VarKind::Affine;
  if (!all_affine) return;
  run.check("width1.divfree_replay" + tag, "divergence-free mu = [d/dx1, eta] with Div eta = 0", 2, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              // Sums of rotations H_{x_{i+1}} d/dx_i - H_{x_i} d/dx_{i+1} are divergence-free.
              VectorField mu(s);
              for (std::size_t i = 0; i + 1 < s->size(); ++i) {
                Polynomial h = random_polynomial(x.rng, s, d_solve + 1, 4);
                std::vector<Polynomial> c(s->size(), Polynomial(s));
                c[i] = partial(h, i + 1);
                c[i + 1] = -partial(h, i);
                mu += VectorField(s, std::move(c));
              }
              x.inputs["mu"] = mu.str();
              VectorField eta = solve_bracket_divfree(mu);
              if (!(vf_bracket(unit_field(s, 0, 0), eta) == mu)) return "bracket replay fails for eta = " + eta.str();
              return unless(vf_divergence(eta).is_zero(), "Div eta = " + vf_divergence(eta).str());
            });
}

// ---------------------------------------------------------------------------
// ratcurve: punctured lines

void ratcurve_suite(const std::string& poles, const VerifyConfig& cfg, SuiteReport& rep) {
  const RatCurveRingPtr ring = RatCurveRing::parse(poles);
  std::string plist;
  for (const auto& p : ring->poles()) plist += (plist.empty() ? "" : ",") + p.str();
  rep.name = "ratcurve";
  rep.params = {{"poles", plist}};
  SuiteRunner run(cfg, rep);
  const std::string tag = "[" + plist + "]";
  const int d = run.deg(4);
  const RatCurveField dx{RatCurveElement::constant(ring, 1)}, xdx{RatCurveElement::x(ring)};

  run.check("ratcurve.width2_replay" + tag, "mu = [d/dx, nu] + [x d/dx, delta]", 3, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              RatCurveField mu{random_ratcurve_element(x.rng, ring, d, 3, 4)};
              x.inputs["mu"] = mu.str();
              RatCurveWidth2 w = solve_width2_ratcurve(mu);
              RatCurveField back = ratcurve_bracket(dx, w.nu) + ratcurve_bracket(xdx, w.delta);
              return unless(back == mu, "replay gives " + back.str() + " for nu = " + w.nu.str() + ", delta = " + w.delta.str());
            });

  run.check("ratcurve.ring_axioms" + tag, "associativity, commutativity, distributivity, Leibniz rule", 0, run.n(50),
            [&](Sample& x) -> std::optional<std::string> {
              auto a = random_ratcurve_element(x.rng, ring, d, 3, 3), b = random_ratcurve_element(x.rng, ring, d, 3, 3);
              auto c = random_ratcurve_element(x.rng, ring, d, 3, 3);
              x.inputs = {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}};
              if (!((a * b) * c == a * (b * c))) return std::string("associativity");
              if (!(a * b == b * a)) return std::string("commutativity");
              if (!(a * (b + c) == a * b + a * c)) return std::string("distributivity");
              return unless((a * b).derivative() == a.derivative() * b + a * b.derivative(), "derivative Leibniz rule");
            });
}

// ---------------------------------------------------------------------------
// torus-poisson

Polynomial torus_zero_constant(Rng& rng, int d) {
  for (;;) {
    Polynomial f = random_nonzero_polynomial(rng, torus_space(), d, 5);
    f -= Polynomial::constant(torus_space(), f.constant_term());
    if (!f.is_zero()) return f;
  }
}

void torus_suite(const VerifyConfig& cfg, SuiteReport& rep) {
  rep.name = "torus-poisson";
  rep.params = json::object();
  SuiteRunner run(cfg, rep);
  const int d = run.deg(4);
  const Polynomial xy = Polynomial::parse(torus_space(), "x*y");

  run.check("torus.bracket_axioms", "antisymmetry, Jacobi, Leibniz, and agreement with xy(f_x g_y - f_y g_x)", 4,
            run.n(200), [&](Sample& x) -> std::optional<std::string> {
              Polynomial f = random_polynomial(x.rng, torus_space(), d, 4), g = random_polynomial(x.rng, torus_space(), d, 4);
              Polynomial h = random_polynomial(x.rng, torus_space(), d, 4);
              x.inputs = {{"f", f.str()}, {"g", g.str()}, {"h", h.str()}};
              const Polynomial fg = pb_torus(f, g);
              if (!(fg == -pb_torus(g, f))) return std::string("antisymmetry");
              if (!(pb_torus(f, pb_torus(g, h)) + pb_torus(g, pb_torus(h, f)) + pb_torus(h, fg)).is_zero())
                return std::string("Jacobi identity");
              if (!(pb_torus(f, g * h) == fg * h + g * pb_torus(f, h))) return std::string("Leibniz rule");
              return unless(fg == xy * (partial(f, 0) * partial(g, 1) - partial(f, 1) * partial(g, 0)),
                            "closed form disagrees with the coordinate formula");
            });

  run.check("torus.width1_replay", "f = {x^k y^l, g} for zero-constant-term f", 8, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              Polynomial f = torus_zero_constant(x.rng, d);
              x.inputs["f"] = f.str();
              TorusWidth1 w = width1_torus(f);
              Polynomial back = pb_torus(Polynomial::monomial(torus_space(), {w.k, w.l}), w.g);
              return unless(back == f, "(k,l) = (" + std::to_string(w.k) + "," + std::to_string(w.l) + "), g = " + w.g.str());
            });

  std::size_t longest = 0, total = 0;
  run.check(
      "torus.reduction_chain", "bracket chain from f to a nonzero multiple of x, replayed", 8, run.n(100),
      [&](Sample& x) -> std::optional<std::string> {
        Polynomial f = torus_zero_constant(x.rng, d);
        x.inputs["f"] = f.str();
        ReductionChain ch = ideal_reduction_torus(f);
        longest = std::max(longest, ch.steps.size());
        total += ch.steps.size();
        if (ch.steps.size() > 10 * f.size() + 20) return std::string("iteration cap exceeded");
        return unless(replay_chain(ch), "chain does not replay");
      },
      [&] { return std::to_string(total) + " steps in total, longest chain " + std::to_string(longest); });
}

// ---------------------------------------------------------------------------
// danielewski

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

void danielewski_suite(const std::string& p_text, const VerifyConfig& cfg, SuiteReport& rep) {
  const DanRingPtr ring = DanRing::parse(p_text);
  rep.name = "danielewski";
  rep.params = {{"p", ring->p().str()}};
  SuiteRunner run(cfg, rep);
  const std::string tag = "[" + ring->p().str() + "]";
  const int d = run.deg(4);
  const int deg_p = ring->degree();
  auto rnd = [&](Rng& rng, int dd = -1) { return random_dan_element(rng, ring, dd < 0 ? d : dd, 4); };

  run.check("dan.bracket_axioms" + tag, "antisymmetry, Jacobi, Leibniz of the bracket on O(D_p)", 4, run.n(200),
            [&](Sample& x) -> std::optional<std::string> {
              DanElement f = rnd(x.rng), g = rnd(x.rng), h = rnd(x.rng);
              x.inputs = {{"f", f.str()}, {"g", g.str()}, {"h", h.str()}};
              const DanElement fg = pb_dan(f, g);
              if (!(fg == -pb_dan(g, f))) return std::string("antisymmetry");
              if (!(pb_dan(f, pb_dan(g, h)) + pb_dan(g, pb_dan(h, f)) + pb_dan(h, fg)).is_zero())
                return std::string("Jacobi identity");
              return unless(pb_dan(f, g * h) == fg * h + g * pb_dan(f, h), "Leibniz rule");
            });

  run.check("dan.leibniz_oracle" + tag, "localized bracket equals the Leibniz extension of the generator brackets", 0,
            run.n(100), [&](Sample& x) -> std::optional<std::string> {
              DanElement f = rnd(x.rng), g = rnd(x.rng);
              x.inputs = {{"f", f.str()}, {"g", g.str()}};
              DanElement a = pb_dan(f, g), b = dan_oracle(f, g);
              return unless(a == b, a.str() + " vs " + b.str());
            });

  run.check("dan.hamiltonian_homomorphism" + tag, "[theta_f, theta_g] = theta_{f,g}", 0, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              DanElement f = rnd(x.rng, 3), g = rnd(x.rng, 3);
              x.inputs = {{"f", f.str()}, {"g", g.str()}};
              return unless(dan_vf_bracket(hamiltonian_dan(f), hamiltonian_dan(g)) == hamiltonian_dan(pb_dan(f, g)),
                            "commutator differs");
            });

  run.check("dan.jacobian_identity" + tag, "localize({f,g}) = x * jac(f,g)", 9, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              DanElement f = rnd(x.rng), g = rnd(x.rng);
              x.inputs = {{"f", f.str()}, {"g", g.str()}};
              return unless(dan_localize(pb_dan(f, g)) == Polynomial::monomial(ring->chart(), {1, 0}) * jac_localized(f, g),
                            "identity fails");
            });

  run.check("dan.e_omega_brackets" + tag, "brackets lie in E_omega with witnesses satisfying Div(preimage) = e", 5,
            run.n(100), [&](Sample& x) -> std::optional<std::string> {
              DanElement f = rnd(x.rng), g = rnd(x.rng);
              x.inputs = {{"f", f.str()}, {"g", g.str()}};
              DanElement e = pb_dan(f, g);
              EOmegaResult m = e_omega_member(e);
              if (!m.witness) return "bracket " + e.str() + " rejected";
              if (!(partial(m.witness->r * ring->p(), 0) == e.c_part())) return std::string("(r p)' differs from c");
              return unless(div_dan(m.witness->preimage) == e, "Div(preimage) = " + div_dan(m.witness->preimage).str());
            });

  if (deg_p >= 2)
    run.check("dan.e_omega_rejects_one" + tag, "the constant 1 is not in E_omega", 5, 1,
              [&](Sample& x) -> std::optional<std::string> {
                x.inputs["e"] = "1";
                EOmegaResult m = e_omega_member(DanElement::constant(ring, 1));
                if (m.witness) return std::string("1 accepted");
                return unless(m.rank < m.augmented_rank, "rank data does not certify infeasibility");
              });

  run.check("dan.codimension" + tag, "codimension of E_omega's k[z]-part equals deg p - 1", 6, 1,
            [&](Sample& x) -> std::optional<std::string> {
              const int trunc = 2 * deg_p;
              x.inputs["d"] = trunc;
              const int codim = e_omega_codimension(ring, trunc);
              return unless(codim == deg_p - 1, "codimension " + std::to_string(codim));
            });

  run.check("dan.divergence_frames" + tag, "div on the chart equals the frame formula, for shifted frames too", 0,
            run.n(100), [&](Sample& x) -> std::optional<std::string> {
              DanElement f = rnd(x.rng, 3), g = rnd(x.rng, 3), h = rnd(x.rng, 3), s = rnd(x.rng, 2);
              x.inputs = {{"f", f.str()}, {"g", g.str()}, {"h", h.str()}, {"s", s.str()}};
              const DanElement dv = div_dan(dan_frame_field(f, g, h));
              if (!(dv == div_dan_basis(f, g, h))) return std::string("frame formula differs");
              const DanElement dp = DanElement::from_z(ring, ring->p_prime());
              return unless(div_dan_basis(f + s * DanElement::y(ring), g + s * DanElement::x(ring), h - s * dp) == dv,
                            "shifted frame gives a different divergence");
            });

  run.check("dan.divergence_identity" + tag, "Div[mu,nu] = mu(Div nu) - nu(Div mu); Hamiltonian fields are divergence-free",
            0, run.n(50), [&](Sample& x) -> std::optional<std::string> {
              DanElement a = rnd(x.rng, 3), b = rnd(x.rng, 3), c = rnd(x.rng, 3);
              x.inputs = {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}};
              DanVectorField mu = dan_frame_field(a, b, c), nu = dan_frame_field(c, a, b);
              if (!div_dan(hamiltonian_dan(a)).is_zero()) return std::string("Div theta_a != 0");
              return unless(div_dan(dan_vf_bracket(mu, nu)) == mu.apply(div_dan(nu)) - nu.apply(div_dan(mu)),
                            "divergence identity fails");
            });

  if (deg_p == 2)
    run.check("dan.width2" + tag, "e = {g, z + a} + {x, y r} for e in E_omega", 7, run.n(100),
              [&](Sample& x) -> std::optional<std::string> {
                DanElement raw = rnd(x.rng);
                Polynomial r = random_polynomial(x.rng, ring->z(), std::max(d - 1, 0), 3);
                DanElement e = DanElement::from_parts(ring, raw.a_part(), raw.b_part(), partial(r * ring->p(), 0));
                x.inputs["e"] = e.str();
                Width2Dan w = width2_dan_deg2(e);
                DanElement back = pb_dan(w.g, w.z_plus_a) + pb_dan(DanElement::x(ring), DanElement::y(ring) * DanElement::from_z(ring, w.r));
                return unless(back == e, "g = " + w.g.str() + ", r = " + w.r.str() + " replays to " + back.str());
              });
}

// ---------------------------------------------------------------------------
// curve

void curve_suite(const std::string& h_text, const VerifyConfig& cfg, SuiteReport& rep) {
  const CurveRingPtr ring = CurveRing::parse(h_text);
  const int genus = ring->genus();
  rep.name = "curve";
  rep.params = {{"h", ring->h().str()}, {"genus", genus}};
  SuiteRunner run(cfg, rep);
  const std::string tag = "[" + ring->h().str() + "]";
  const int d = run.deg(5);
  auto rnd = [&](Rng& rng) { return random_curve_element(rng, ring, d, 3); };
  auto nonzero = [&](Rng& rng) {
    for (;;) {
      CurveElement e = rnd(rng);
      if (!e.is_zero()) return e;
    }
  };

  run.check("curve.valuation" + tag, "ord is multiplicative and tau is a derivation", 0, run.n(200),
            [&](Sample& x) -> std::optional<std::string> {
              CurveElement a = rnd(x.rng), b = rnd(x.rng);
              x.inputs = {{"a", a.str()}, {"b", b.str()}};
              if (!(ord_inf(a * b) == ord_inf(a) + ord_inf(b))) return std::string("ord(ab) != ord a + ord b");
              return unless(tau_apply(a * b) == tau_apply(a) * b + a * tau_apply(b), "tau is not a derivation");
            });

  run.check("curve.tau_tangency" + tag, "tau(y^2 - h) = 0 and ord tau(F) = ord F - (2g - 1) on monomials", 0, 1,
            [&](Sample&) -> std::optional<std::string> {
              const SpacePtr& s = ring->xy_space();
              Polynomial rel = Polynomial::parse(s, "y^2") - embed(ring->h(), s);
              Polynomial formal = Polynomial::parse(s, "2*y") * partial(rel, 0) + embed(ring->h_prime(), s) * partial(rel, 1);
              if (!curve_normalize(ring, formal).is_zero()) return std::string("tau is not tangent");
              const SpacePtr& xs = ring->x_space();
              for (int i = 0; i <= 12; ++i)
                for (int part = 0; part < 2; ++part) {
                  if (i == 0 && part == 0) continue;
                  Polynomial m = Polynomial::monomial(xs, {i});
                  CurveElement F = part == 0 ? CurveElement(ring, m, Polynomial(xs)) : CurveElement(ring, Polynomial(xs), m);
                  if (!(ord_inf(tau_apply(F)) == ord_inf(F) + (1L - 2 * genus))) return "order drop fails on " + F.str();
                }
              return std::nullopt;
            });

  run.check("curve.obstruction" + tag, "certificate concludes, valuations consistent, [f tau, g tau] != tau", 10,
            run.n(500), [&](Sample& x) -> std::optional<std::string> {
              CurveElement f = rnd(x.rng), g = rnd(x.rng);
              if (x.rng.coin() && !g.is_zero()) f = f + x.rng.coefficient() * g;
              x.inputs = {{"f", f.str()}, {"g", g.str()}};
              ObstructionCertificate c = obstruction_certificate(f, g);
              if (!certificate_consistent(c, genus)) return "inconsistent certificate, ord_bracket = " + c.ord_bracket.str();
              return unless(!(field_bracket(f, g) == CurveElement::constant(ring, 1)), "bracket equals tau");
            });

  run.check("curve.valuation_law" + tag, "ord of [f tau, g tau] = n_f + n_g - 1 when ord f != ord g", 11, run.n(200),
            [&](Sample& x) -> std::optional<std::string> {
              CurveElement f = nonzero(x.rng), g = nonzero(x.rng);
              while (ord_inf(f) == ord_inf(g)) g = nonzero(x.rng);
              x.inputs = {{"f", f.str()}, {"g", g.str()}};
              Valuation lhs = ord_field(field_bracket(f, g)), rhs = ord_field(f) + ord_field(g) + (-1L);
              return unless(lhs == rhs, lhs.str() + " != " + rhs.str());
            });

  run.check("curve.bracket_axioms" + tag, "antisymmetry and Jacobi identity of [f tau, g tau]", 0, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              CurveElement a = random_curve_element(x.rng, ring, 4, 3), b = random_curve_element(x.rng, ring, 4, 3);
              CurveElement c = random_curve_element(x.rng, ring, 3, 2);
              x.inputs = {{"a", a.str()}, {"b", b.str()}, {"c", c.str()}};
              if (!(field_bracket(a, b) == -field_bracket(b, a))) return std::string("antisymmetry");
              return unless((field_bracket(a, field_bracket(b, c)) + field_bracket(b, field_bracket(c, a)) +
                             field_bracket(c, field_bracket(a, b))).is_zero(),
                            "Jacobi identity");
            });

  std::size_t crafted = cfg.samples ? std::min<std::size_t>(*cfg.samples, 20) : 20;
  std::size_t random_pairs = run.n(200);
  std::size_t proportional_hits = 0;
  run.check(
      "curve.centralizer" + tag, "Proportional exactly for scalar pairs, otherwise a nonzero bracket witness", 12,
      random_pairs + crafted,
      [&](Sample& x) -> std::optional<std::string> {
        CurveElement f = nonzero(x.rng);
        const bool craft = x.index >= random_pairs;
        CurveElement g = craft ? x.rng.coefficient() * f : nonzero(x.rng);
        x.inputs = {{"f", f.str()}, {"g", g.str()}, {"crafted", craft}};
        CentralizerResult r = centralizer_check(f, g);
        if (r.proportional) {
          ++proportional_hits;
          return unless(g == r.lambda * f, "Proportional(" + r.lambda.str() + ") but g != lambda f");
        }
        if (craft) return std::string("scalar pair reported Independent");
        return unless(!r.witness.is_zero(), "Independent with zero witness");
      },
      [&] { return std::to_string(proportional_hits) + " proportional"; });

  run.check("curve.no_eigen" + tag, "[f tau, g tau] != lambda g tau for lambda != 0", 12, run.n(200),
            [&](Sample& x) -> std::optional<std::string> {
              CurveElement f = rnd(x.rng), g = nonzero(x.rng);
              Rational lambda = x.rng.coefficient();
              x.inputs = {{"f", f.str()}, {"g", g.str()}, {"lambda", lambda.str()}};
              return unless(no_eigen_check(f, g, lambda).holds, "eigenvector found");
            });

  run.check("curve.cokernel" + tag, "coker of tau on pole-bounded functions has dimension 2g once max_pole >= 4g+2", 13,
            1, [&](Sample& x) -> std::optional<std::string> {
              x.inputs["genus"] = genus;
              if (coker_dimension(ring, 0) != 1) return std::string("max_pole 0 does not give 1");
              for (int P = 4 * genus + 2; P <= 4 * genus + 6; ++P) {
                const int c = coker_dimension(ring, P);
                if (c != 2 * genus) return "max_pole " + std::to_string(P) + " gives " + std::to_string(c);
              }
              return std::nullopt;
            });

  run.check("curve.tau_roundtrip" + tag, "solve_tau_equation inverts tau on random images", 13, run.n(100),
            [&](Sample& x) -> std::optional<std::string> {
              CurveElement F = rnd(x.rng);
              CurveElement img = tau_apply(F);
              x.inputs = {{"F", F.str()}};
              TauSolve s = solve_tau_equation(img);
              if (!s.solution) return "no solution found for " + img.str();
              if (!(tau_apply(*s.solution) == img)) return std::string("tau(solution) differs");
              TauSolve bad = solve_tau_equation(img + CurveElement::constant(ring, 1));
              return unless(!bad.solution && bad.rank < bad.augmented_rank, "tau(F) + 1 reported solvable");
            });
}

const std::vector<std::string>& or_default(const std::vector<std::string>& v, const std::vector<std::string>& def) {
  return v.empty() ? def : v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "torus-poisson", "danielewski", "curve", "width1", "ratcurve"};
  return names;
}

Report run_verify(std::string_view suite, const VerifyConfig& cfg) {
  const bool all = suite == "all";
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(suite) + "'");

  const auto& ps = or_default(cfg.p, kDefaultP);
  const auto& hs = or_default(cfg.h, kDefaultH);
  const auto& poles = or_default(cfg.poles, kDefaultPoles);
  const auto& spaces = or_default(cfg.spaces, kDefaultSpaces);
  // Validate every parameter before running anything.
  if (all || suite == "danielewski")
    for (const auto& p : ps) DanRing::parse(p);
  if (all || suite == "curve")
    for (const auto& h : hs) CurveRing::parse(h);
  if (all || suite == "ratcurve")
    for (const auto& p : poles) RatCurveRing::parse(p);
  if (all || suite == "width1")
    for (const auto& s : spaces) VariableSpace::parse_signature(s);

  Report rep;
  rep.seed = cfg.seed;
  auto add = [&](auto&& fill) {
    rep.suites.emplace_back();
    fill(rep.suites.back());
  };
  if (all || suite == "width1")
    for (const auto& s : spaces) add([&](SuiteReport& r) { width1_suite(s, cfg, r); });
  if (all || suite == "ratcurve")
    for (const auto& p : poles) add([&](SuiteReport& r) { ratcurve_suite(p, cfg, r); });
  if (all || suite == "torus-poisson") add([&](SuiteReport& r) { torus_suite(cfg, r); });
  if (all || suite == "danielewski")
    for (const auto& p : ps) add([&](SuiteReport& r) { danielewski_suite(p, cfg, r); });
  if (all || suite == "curve")
    for (const auto& h : hs) add([&](SuiteReport& r) { curve_suite(h, cfg, r); });
  return rep;
}

bool Report::all_passed() const { return failed_count() == 0; }

std::size_t Report::check_count() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks.size();
  return n;
}

std::size_t Report::failed_count() const {
  std::size_t n = 0;
  for (const auto& s : suites)
    for (const auto& c : s.checks) n += c.passed ? 0 : 1;
  return n;
}

json Report::to_json() const {
  json out = {{"version", version}, {"seed", seed}, {"suites", json::array()}};
  for (const auto& s : suites) {
    json checks = json::array();
    for (const auto& c : s.checks)
      checks.push_back({{"id", c.id},
                        {"description", c.description},
                        {"status", c.passed ? "pass" : "fail"},
                        {"details", c.details},
                        {"counterexample", c.counterexample}});
    out["suites"].push_back({{"name", s.name}, {"params", s.params}, {"checks", std::move(checks)}});
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "liewidth " << version << ", seed " << seed << "\n";
  for (const auto& s : suites) {
    os << "\n" << s.name;
    if (!s.params.empty()) os << " " << s.params.dump();
    os << "\n";
    for (const auto& c : s.checks) {
      os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.id << "  (" << c.details << ")\n";
      if (!c.passed) os << "        counterexample: " << c.counterexample.dump() << "\n";
    }
  }
  os << "\n" << check_count() - failed_count() << "/" << check_count() << " checks passed\n";
  return os.str();
}

}  // namespace liewidth
