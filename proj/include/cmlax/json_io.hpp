#pragma once

#include <json.hpp>

#include "cmlax/ratfunc.hpp"

namespace cmlax {

/// Exact JSON encodings; rationals are carried as "num/den" strings so
/// round-trips are bit-exact.
nlohmann::json to_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParamScalar& s);
ParamScalar param_scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

} // namespace cmlax
