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

#include "liewidth/demo.hpp"

#include <sstream>

#include "liewidth/errors.hpp"
#include "liewidth/poisson.hpp"
#include "liewidth/vfields.hpp"

namespace liewidth {

namespace {

std::string verdict(bool ok) { return ok ? "OK" : "MISMATCH"; }

DemoOutput torus(std::string_view text) {
  const Polynomial f = Polynomial::parse(torus_space(), text);
  const TorusWidth1 w = width1_torus(f);
  const Polynomial m = Polynomial::monomial(torus_space(), {w.k, w.l});
  const bool ok = pb_torus(m, w.g) == f;
  std::ostringstream os;
  os << "input: " << f.str() << "\n"
     << "k = " << w.k << ", l = " << w.l << "\n"
     << "g = " << w.g.str() << "\n"
     << "{" << m.str() << ", g} = input: " << verdict(ok) << "\n";
  return {os.str(), ok};
}

DemoOutput dan(std::string_view text, const DemoParams& params) {
  const DanRingPtr ring = DanRing::parse(params.p);
  const DanElement e = DanElement::parse(ring, text);
  const Width2Dan w = width2_dan_deg2(e);
  const DanElement back =
      pb_dan(w.g, w.z_plus_a) + pb_dan(DanElement::x(ring), DanElement::y(ring) * DanElement::from_z(ring, w.r));
  const bool ok = back == e;
  std::ostringstream os;
  os << "input: " << e.str() << "\n"
     << "g = " << w.g.str() << "\n"
     << "r = " << w.r.str() << "\n"
     << "z + a = " << w.z_plus_a.str() << "\n"
     << "{g, z + a} + {x, y*r} = input: " << verdict(ok) << "\n";
  return {os.str(), ok};
}

DemoOutput eomega(std::string_view text, const DemoParams& params) {
  const DanRingPtr ring = DanRing::parse(params.p);
  const DanElement e = DanElement::parse(ring, text);
  const EOmegaResult res = e_omega_member(e);
  if (!res.witness)
    throw Error(Errc::NotInEOmega, e.str() + " (rank " + std::to_string(res.rank) + ", augmented rank " +
                                       std::to_string(res.augmented_rank) + ")");
  const EOmegaWitness& w = *res.witness;
  const bool ok = div_dan(w.preimage) == e;
  std::ostringstream os;
  os << "input: " << e.str() << "\n"
     << "r = " << w.r.str() << "\n"
     << "theta_x coefficient = " << w.theta_x_coeff.str() << "\n"
     << "theta_y coefficient = " << w.theta_y_coeff.str() << "\n"
     << "preimage = " << w.preimage.str() << "\n"
     << "Div(preimage) = input: " << verdict(ok) << "\n";
  return {os.str(), ok};
}

DemoOutput ratcurve(std::string_view text, const DemoParams& params) {
  const RatCurveRingPtr ring = RatCurveRing::parse(params.poles);
  const RatCurveField mu{RatCurveElement::parse(ring, text)};
  const RatCurveWidth2 w = solve_width2_ratcurve(mu);
  const RatCurveField dx{RatCurveElement::constant(ring, 1)}, xdx{RatCurveElement::x(ring)};
  const bool ok = ratcurve_bracket(dx, w.nu) + ratcurve_bracket(xdx, w.delta) == mu;
  std::ostringstream os;
  os << "input: " << mu.str() << "\n"
     << "nu = " << w.nu.str() << "\n"
     << "delta = " << w.delta.str() << "\n"
     << "[d/dx, nu] + [x*d/dx, delta] = input: " << verdict(ok) << "\n";
  return {os.str(), ok};
}

}  // namespace

DemoOutput demo_decompose(std::string_view context, std::string_view element, const DemoParams& params) {
  if (context == "torus") return torus(element);
  if (context == "dan") return dan(element, params);
  if (context == "eomega") return eomega(element, params);
  if (context == "ratcurve") return ratcurve(element, params);
  throw Error(Errc::InvalidArgument, "unknown context '" + std::string(context) + "'");
}

}  // namespace liewidth
