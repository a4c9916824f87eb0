#include "hecke/io/json.hpp"

#include <cstdio>
#include <stdexcept>

namespace hecke::io {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const cubic::MPoly& f) {
  Json j = Json::object();
  for (const auto& [e, c] : f.terms())
    j[std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2])] = to_string(c);
  return j;
}

Json to_json(const daha::ParamTuple& t) {
  return {{"k0", to_json(t.k0)}, {"k1", to_json(t.k1)}, {"u0", to_json(t.u0)}, {"u1", to_json(t.u1)}};
}

Json to_json(const weyl::TorusPointS& s) {
  Json arr = Json::array();
  for (const auto& x : s.s) arr.push_back(to_json(x));
  return {{"s", arr}, {"delta", to_json(s.delta)}};
}

Json to_json(const cubic::CubicSurface& S) {
  return {{"p1", to_json(S.p1)}, {"p2", to_json(S.p2)}, {"p3", to_json(S.p3)}, {"p0", to_json(S.p0)},
          {"R", to_json(S.R())}, {"R_text", S.R().str()}};
}

Json to_json(const Check& c) {
  Json j{{"name", c.name}, {"pass", c.pass}, {"residue_support", c.residue_support}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const weyl::Prediction& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) {
    Json roots = Json::array();
    for (const auto& r : c.roots) roots.push_back(r.str());
    comps.push_back({{"type", weyl::ade_name(c.type)}, {"roots", roots}});
  }
  return {{"stratum", p.stratum}, {"components", comps}, {"total_milnor", p.total_milnor}};
}

Json to_json(const cubic::SingularityReport& r) {
  Json j{{"surface", to_json(r.surface)}};
  if (r.prediction) j["prediction"] = to_json(*r.prediction);
  Json pts = Json::array();
  for (const auto& p : r.points) {
    Json q{{"exact", p.exact}};
    if (p.exact) q["point"] = {to_json(p.point[0]), to_json(p.point[1]), to_json(p.point[2])};
    q["approx"] = {p.approx[0], p.approx[1], p.approx[2]};
    q["ade"] = p.ade;
    q["milnor"] = p.milnor;
    q["hessian_rank"] = p.hessian_rank;
    q["stratum"] = p.witness_stratum;
    pts.push_back(q);
  }
  j["singular_points"] = pts;
  j["total_milnor"] = r.total_milnor();
  j["elimination_count"] = r.elimination ? Json(*r.elimination) : Json(nullptr);
  j["completeness"] = r.completeness;
  return j;
}

Json to_json(const hochschild::Dims& d) { return Json::array({d.h0, d.h1, d.h2}); }

Json to_json(const hochschild::HomologyReport& h) {
  return {{"twist", hochschild::twist_name(h.twist)},
          {"q", to_json(h.q)},
          {"N", h.N},
          {"dims", to_json(h.dims)},
          {"dims_at_N_minus_2", to_json(h.dims_smaller)},
          {"stabilized", h.stabilized}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string \"a/b\"");
  return parse_rational(j.get<std::string>());
}

cubic::MPoly mpoly_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be an object");
  cubic::MPoly f;
  for (const auto& [key, val] : j.items()) {
    cubic::Exponent e{};
    if (std::sscanf(key.c_str(), "%d,%d,%d", &e[0], &e[1], &e[2]) != 3 || e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw std::invalid_argument("bad exponent key: " + key);
    f += cubic::MPoly::monomial(rational_from_json(val), e);
  }
  return f;
}

}  // namespace hecke::io
