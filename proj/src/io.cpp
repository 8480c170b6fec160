#include "zpdlab/io.hpp"

#include <string>

#include "zpdlab/errors.hpp"

namespace zpdlab {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError("scalar must be an integer or a \"p/q\" string, got " + j.dump());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be a JSON array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

json matrix_to_json(const RatMatrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", vector_to_json(m.entries())}};
}

RatMatrix matrix_from_json(const json& j) {
  const std::size_t r = count_field(j, "rows"), c = count_field(j, "cols");
  Vector e = vector_from_json(field(j, "entries"));
  if (e.size() != r * c)
    throw ParseError("matrix has " + std::to_string(e.size()) + " entries, expected " + std::to_string(r * c));
  return RatMatrix(r, c, std::move(e));
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

json algebra_to_json(const Algebra& a) {
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back(matrix_to_json(b));
  return json{{"name", a.name()}, {"ambient_n", a.ambient_n()}, {"basis", basis}, {"unital_hint", a.is_unital()}};
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra must be a JSON object");
  const std::string name = j.value("name", std::string("algebra"));
  Algebra a;
  if (j.contains("structure_constants")) {
    a = Algebra::from_structure_constants(name, count_field(j, "dim"), vector_from_json(j.at("structure_constants")));
  } else {
    const json& basis = field(j, "basis");
    if (!basis.is_array()) throw ParseError("'basis' must be an array of matrices");
    std::vector<RatMatrix> mats;
    for (const auto& m : basis) mats.push_back(matrix_from_json(m));
    const std::size_t n = j.contains("ambient_n") ? count_field(j, "ambient_n") : (mats.empty() ? 1 : mats.front().rows());
    for (const auto& m : mats)
      if (m.rows() != n || m.cols() != n)
        throw ValidationError("basis matrix is not " + std::to_string(n) + "x" + std::to_string(n));
    a = Algebra::from_basis(name, std::move(mats), n);
  }
  if (j.value("unital_hint", false) && !a.is_unital())
    throw ValidationError("unital_hint is set but '" + name + "' has no unit");
  return a;
}

json sampler_to_json(const SamplerConfig& c) {
  json out{{"seed", c.seed}, {"saturation_rounds", c.saturation_rounds}, {"max_samples", nullptr},
           {"coefficient_height", c.coefficient_height}};
  if (c.max_samples) out["max_samples"] = *c.max_samples;
  return out;
}

SamplerConfig sampler_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("sampler config must be a JSON object");
  SamplerConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("saturation_rounds")) c.saturation_rounds = count_field(j, "saturation_rounds");
  if (j.contains("max_samples") && !j.at("max_samples").is_null()) c.max_samples = count_field(j, "max_samples");
  if (j.contains("coefficient_height")) c.coefficient_height = j.at("coefficient_height").get<long>();
  if (c.coefficient_height < 1) throw ParseError("coefficient_height must be >= 1");
  return c;
}

json certificate_to_json(const Certificate& c) {
  json out{{"schema_version", kSchemaVersion},
           {"property", to_string(c.property)},
           {"verdict", to_string(c.verdict)},
           {"dims", {{"ker", c.ker_dim()}, {"span", c.span_dim()}}},
           {"field_note", to_string(c.field_note)}};
  if (c.witness)
    out["witness"] = {{"phi", matrix_to_json(c.witness->phi.matrix)}, {"kernel_tensor", vector_to_json(c.witness->kernel_tensor)}};
  out["span_report"] = {{"method", to_string(c.span_report.method)},
                        {"samples_used", c.span_report.samples_used},
                        {"rounds_stable", c.span_report.rounds_stable},
                        {"seed", c.span_report.seed}};
  return out;
}

json bimodule_to_json(const Bimodule& m) {
  json l = json::array(), r = json::array();
  for (const auto& x : m.left_action()) l.push_back(matrix_to_json(x));
  for (const auto& x : m.right_action()) r.push_back(matrix_to_json(x));
  return json{{"dim", m.dim()}, {"left_action", l}, {"right_action", r}};
}

Bimodule bimodule_from_json(const Algebra& a, const json& j) {
  const std::size_t m = count_field(j, "dim");
  std::vector<RatMatrix> l, r;
  for (const auto& x : field(j, "left_action")) l.push_back(matrix_from_json(x));
  for (const auto& x : field(j, "right_action")) r.push_back(matrix_from_json(x));
  for (const auto& x : l)
    if (x.rows() != m || x.cols() != m) throw ValidationError("left action matrix is not " + std::to_string(m) + "x" + std::to_string(m));
  return Bimodule::make(a, std::move(l), std::move(r));
}

json map_to_json(const LinearMap& m) { return matrix_to_json(m.matrix); }

LinearMap map_from_json(const json& j) { return {matrix_from_json(j)}; }

}  // namespace zpdlab
