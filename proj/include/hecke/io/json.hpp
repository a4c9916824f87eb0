#pragma once
// JSON forms: rationals as "a/b", polynomials as {"i,j,k": "a/b"} maps.
#include <json.hpp>

#include "hecke/core/report.hpp"
#include "hecke/cubic/singular.hpp"
#include "hecke/daha/params.hpp"
#include "hecke/hochschild/homology.hpp"

namespace hecke::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const cubic::MPoly& f);
Json to_json(const daha::ParamTuple& t);
Json to_json(const weyl::TorusPointS& s);
Json to_json(const cubic::CubicSurface& S);
Json to_json(const Check& c);
Json to_json(const Report& r);
Json to_json(const weyl::Prediction& p);
Json to_json(const cubic::SingularityReport& r);
Json to_json(const hochschild::Dims& d);
Json to_json(const hochschild::HomologyReport& h);

Rational rational_from_json(const Json& j);
cubic::MPoly mpoly_from_json(const Json& j);

}  // namespace hecke::io
