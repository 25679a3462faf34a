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

#include "liewidth/liewidth.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "liewidth/curves.hpp"
#include "liewidth/demo.hpp"
#include "liewidth/errors.hpp"
#include "liewidth/poisson.hpp"
#include "liewidth/verify.hpp"
#include "liewidth/vfields.hpp"

struct lw_space {
  liewidth::SpacePtr space;
};

struct lw_poly {
  liewidth::Polynomial poly;
};

namespace {

thread_local std::string last_error;

lw_status fail(lw_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <typename F>
lw_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LW_OK;
  } catch (const liewidth::Error& e) {
    return fail(static_cast<lw_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LW_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw liewidth::Error(liewidth::Errc::InvalidArgument, std::string(what) + " is null");
}

template <typename Op>
lw_status binary(const lw_poly* a, const lw_poly* b, lw_poly** out, Op op) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new lw_poly{op(a->poly, b->poly)};
  });
}

std::vector<std::string> string_list(const nlohmann::json& cfg, const char* key) {
  if (!cfg.contains(key)) return {};
  const auto& v = cfg.at(key);
  if (v.is_string()) return {v.get<std::string>()};
  return v.get<std::vector<std::string>>();
}

}  // namespace

extern "C" {

const char* lw_version(void) { return liewidth::kVersion; }

const char* lw_status_name(lw_status status) {
  if (status == LW_OK) return "Ok";
  if (status == LW_ERR_INTERNAL) return "Internal";
  if (status < LW_ERR_MIXED_SPACES || status > LW_ERR_INVALID_ARGUMENT) return "Unknown";
  return liewidth::errc_name(static_cast<liewidth::Errc>(status)).data();
}

const char* lw_last_error(void) { return last_error.c_str(); }

void lw_string_free(char* s) { std::free(s); }

lw_status lw_space_parse(const char* signature, lw_space** out) {
  return guarded([&] {
    require(signature, "signature");
    require(out, "out");
    *out = new lw_space{liewidth::VariableSpace::parse_signature(signature)};
  });
}

void lw_space_free(lw_space* space) { delete space; }

lw_status lw_space_signature(const lw_space* space, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = dup(space->space->signature());
  });
}

lw_status lw_poly_parse(const lw_space* space, const char* text, lw_poly** out) {
  return guarded([&] {
    require(space, "space");
    require(text, "text");
    require(out, "out");
    *out = new lw_poly{liewidth::Polynomial::parse(space->space, text)};
  });
}

void lw_poly_free(lw_poly* p) { delete p; }

lw_status lw_poly_to_string(const lw_poly* p, char** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = dup(p->poly.str());
  });
}

lw_status lw_poly_add(const lw_poly* a, const lw_poly* b, lw_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

lw_status lw_poly_sub(const lw_poly* a, const lw_poly* b, lw_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x - y; });
}

lw_status lw_poly_mul(const lw_poly* a, const lw_poly* b, lw_poly** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

lw_status lw_poly_pow(const lw_poly* a, int64_t e, lw_poly** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = new lw_poly{a->poly.pow(e)};
  });
}

lw_status lw_poly_derivative(const lw_poly* a, const char* var, lw_poly** out) {
  return guarded([&] {
    require(a, "a");
    require(var, "var");
    require(out, "out");
    *out = new lw_poly{liewidth::partial(a->poly, std::string_view(var))};
  });
}

lw_status lw_poly_antiderivative(const lw_poly* a, const char* var, lw_poly** out) {
  return guarded([&] {
    require(a, "a");
    require(var, "var");
    require(out, "out");
    *out = new lw_poly{liewidth::antiderivative(a->poly, std::string_view(var))};
  });
}

lw_status lw_poly_equal(const lw_poly* a, const lw_poly* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->poly == b->poly;
  });
}

lw_status lw_poly_is_squarefree(const lw_poly* a, int* out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = liewidth::squarefree_check(a->poly);
  });
}

lw_status lw_vf_bracket(const char* signature, const char* a, const char* b, char** out) {
  return guarded([&] {
    require(signature, "signature");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const auto space = liewidth::VariableSpace::parse_signature(signature);
    *out = dup(liewidth::vf_bracket(liewidth::VectorField::parse(space, a), liewidth::VectorField::parse(space, b)).str());
  });
}

lw_status lw_pb_torus(const char* f, const char* g, char** out) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(out, "out");
    const auto& s = liewidth::torus_space();
    *out = dup(liewidth::pb_torus(liewidth::Polynomial::parse(s, f), liewidth::Polynomial::parse(s, g)).str());
  });
}

lw_status lw_pb_dan(const char* p, const char* f, const char* g, char** out) {
  return guarded([&] {
    require(p, "p");
    require(f, "f");
    require(g, "g");
    require(out, "out");
    const auto ring = liewidth::DanRing::parse(p);
    *out = dup(liewidth::pb_dan(liewidth::DanElement::parse(ring, f), liewidth::DanElement::parse(ring, g)).str());
  });
}

lw_status lw_curve_field_bracket(const char* h, const char* f, const char* g, char** out) {
  return guarded([&] {
    require(h, "h");
    require(f, "f");
    require(g, "g");
    require(out, "out");
    const auto ring = liewidth::CurveRing::parse(h);
    *out = dup(
        liewidth::field_bracket(liewidth::CurveElement::parse(ring, f), liewidth::CurveElement::parse(ring, g)).str());
  });
}

lw_status lw_verify(const char* suite, const char* config_json, char** text_report, char** json_report,
                    int* all_passed) {
  return guarded([&] {
    require(suite, "suite");
    liewidth::VerifyConfig cfg;
    if (config_json && *config_json) {
      const auto j = nlohmann::json::parse(config_json);
      if (!j.is_object()) throw liewidth::Error(liewidth::Errc::InvalidArgument, "config must be a JSON object");
      for (const auto& [key, value] : j.items())
        if (key != "seed" && key != "samples" && key != "degree_bound" && key != "p" && key != "h" &&
            key != "poles" && key != "space")
          throw liewidth::Error(liewidth::Errc::InvalidArgument, "unknown config key '" + key + "'");
      if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("samples")) cfg.samples = j.at("samples").get<std::size_t>();
      if (j.contains("degree_bound")) {
        const int d = j.at("degree_bound").get<int>();
        if (d < 0) throw liewidth::Error(liewidth::Errc::InvalidArgument, "degree_bound must be nonnegative");
        cfg.degree_bound = d;
      }
      cfg.p = string_list(j, "p");
      cfg.h = string_list(j, "h");
      cfg.poles = string_list(j, "poles");
      cfg.spaces = string_list(j, "space");
    }
    const liewidth::Report rep = liewidth::run_verify(suite, cfg);
    if (text_report) *text_report = dup(rep.to_text());
    if (json_report) {
      try {
        *json_report = dup(rep.to_json().dump(2) + "\n");
      } catch (...) {
        if (text_report) lw_string_free(*text_report);
        throw;
      }
    }
    if (all_passed) *all_passed = rep.all_passed();
  });
}

lw_status lw_demo_decompose(const char* context, const char* element, const char* p, const char* poles, char** out,
                            int* replay_ok) {
  return guarded([&] {
    require(context, "context");
    require(element, "element");
    require(out, "out");
    liewidth::DemoParams params;
    if (p) params.p = p;
    if (poles) params.poles = poles;
    const liewidth::DemoOutput res = liewidth::demo_decompose(context, element, params);
    *out = dup(res.text);
    if (replay_ok) *replay_ok = res.replay_ok;
  });
}

}  // extern "C"
