#pragma once

#include <json.hpp>

#include "zpdlab/constructions.hpp"

namespace zpdlab {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Rationals travel as strings "p" or "p/q"; plain JSON integers are accepted
// on input.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

// {rows, cols, entries} with entries row-major.
json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

json subspace_to_json(const Subspace& s);

// {name, ambient_n, basis: [matrix...], unital_hint}.  Throws ParseError on
// malformed input and ValidationError when the basis is not an algebra or
// unital_hint is true for a non-unital algebra.
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

// {seed, saturation_rounds, max_samples (null = 64 d), coefficient_height}.
json sampler_to_json(const SamplerConfig& c);
SamplerConfig sampler_from_json(const json& j);

json certificate_to_json(const Certificate& c);

// {dim, left_action: [matrix...], right_action: [matrix...]}.
json bimodule_to_json(const Bimodule& m);
Bimodule bimodule_from_json(const Algebra& a, const json& j);

json map_to_json(const LinearMap& m);
LinearMap map_from_json(const json& j);

}  // namespace zpdlab
