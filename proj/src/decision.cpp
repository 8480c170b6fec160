#include "zpdlab/decision.hpp"

#include "zpdlab/errors.hpp"

namespace zpdlab {

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw AmbientMismatch("bilinear form: argument length mismatch");
  return dot(x, matrix.apply(y));
}

Scalar BilinearForm::on_tensor(const Vector& w) const {
  if (w.size() != dim() * dim()) throw AmbientMismatch("bilinear form: tensor length mismatch");
  return dot(matrix.entries(), w);
}

BilinearForm BilinearForm::from_covector(std::size_t d, const Vector& f) {
  if (f.size() != d * d) throw AmbientMismatch("bilinear form: covector length mismatch");
  return {RatMatrix(d, d, f)};
}

std::string to_string(Property p) {
  switch (p) {
    case Property::zpd: return "zpd";
    case Property::zlpd: return "zlpd";
    default: return "two_sided_zpd";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "no_uncertified";
  }
}

std::string to_string(FieldNote f) {
  return f == FieldNote::rational_certified_for_C ? "rational_certified_for_C" : "rational_only";
}

std::string to_string(FactorMode m) {
  switch (m) {
    case FactorMode::product: return "product";
    case FactorMode::bracket: return "bracket";
    default: return "two_sided";
  }
}

namespace {

enum class Shape { mult, lie, op };

RatMatrix product_matrix(const Algebra& a, Shape s) {
  const std::size_t d = a.dim();
  RatMatrix m(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Scalar v;
        if (s == Shape::mult) v = a.c(i, j, k);
        else if (s == Shape::op) v = a.c(j, i, k);
        else v = a.c(i, j, k) - a.c(j, i, k);
        m(k, tensor_index(d, i, j)) = v;
      }
  return m;
}

// A kernel tensor outside span and a covector in span^perp that detects it.
std::optional<Witness> find_witness(std::size_t d, const Subspace& kernel, const Subspace& span) {
  const Subspace perp = span.annihilator();
  for (const auto& w : kernel.basis()) {
    if (span.contains(w)) continue;
    for (const auto& f : perp.basis())
      if (!is_zero(dot(f, w))) return Witness{BilinearForm::from_covector(d, f), w};
  }
  return std::nullopt;
}

Certificate finish(Property p, Subspace kernel, SpanReport rep, std::size_t d) {
  Certificate c;
  c.property = p;
  c.kernel = std::move(kernel);
  c.span_report = std::move(rep);
  const bool structural = c.span_report.method == SpanMethod::structural;
  if (c.kernel.is_subset_of(c.span_report.span)) {
    c.verdict = Verdict::yes;
    c.field_note = FieldNote::rational_certified_for_C;
    return c;
  }
  c.witness = find_witness(d, c.kernel, c.span_report.span);
  c.verdict = structural ? Verdict::no : Verdict::no_uncertified;
  c.field_note = structural ? FieldNote::rational_certified_for_C : FieldNote::rational_only;
  return c;
}

SpanReport structural_report(Subspace span, std::uint64_t seed) {
  SpanReport rep;
  rep.span = std::move(span);
  rep.method = SpanMethod::structural;
  rep.seed = seed;
  return rep;
}

}  // namespace

RatMatrix mult_matrix(const Algebra& a) { return product_matrix(a, Shape::mult); }
RatMatrix lie_matrix(const Algebra& a) { return product_matrix(a, Shape::lie); }
RatMatrix op_mult_matrix(const Algebra& a) { return product_matrix(a, Shape::op); }

Subspace mult_kernel(const Algebra& a) { return kernel(mult_matrix(a)); }
Subspace lie_kernel(const Algebra& a) { return kernel(lie_matrix(a)); }
Subspace op_mult_kernel(const Algebra& a) { return kernel(op_mult_matrix(a)); }

Subspace two_sided_kernel(const Algebra& a) { return kernel(stack(mult_matrix(a), op_mult_matrix(a))); }

Certificate decide_zpd(const Algebra& a, const SamplerConfig& cfg) {
  Subspace k = mult_kernel(a);
  if (auto z = structural_zero_span(a)) return finish(Property::zpd, std::move(k), structural_report(*z, cfg.seed), a.dim());
  SpanReport rep = zero_product_span(a, cfg, k);
  return finish(Property::zpd, std::move(k), std::move(rep), a.dim());
}

Certificate decide_zlpd(const Algebra& a, const SamplerConfig& cfg) {
  Subspace k = lie_kernel(a);
  SpanReport rep = commuting_span(a, cfg, k);
  Certificate c = finish(Property::zlpd, std::move(k), std::move(rep), a.dim());
  // No structural description of Z_Lie short of the commutative case.
  if (c.verdict == Verdict::no) {
    c.verdict = Verdict::no_uncertified;
    c.field_note = FieldNote::rational_only;
  }
  return c;
}

Certificate decide_two_sided_zpd(const Algebra& a, const SamplerConfig& cfg) {
  Subspace k = two_sided_kernel(a);
  // For commutative A, xy = 0 iff yx = 0, so Z_2 = Z.
  if (a.is_commutative())
    if (auto z = structural_zero_span(a))
      return finish(Property::two_sided_zpd, std::move(k), structural_report(*z, cfg.seed), a.dim());
  SpanReport rep = two_sided_zero_span(a, cfg, k);
  return finish(Property::two_sided_zpd, std::move(k), std::move(rep), a.dim());
}

bool verify_certificate(const Certificate& c) {
  const Subspace& span = c.span_report.span;
  if (span.ambient_dim() != c.kernel.ambient_dim()) return false;
  switch (c.verdict) {
    case Verdict::yes:
      return c.kernel.is_subset_of(span);
    case Verdict::no: {
      if (c.span_report.method != SpanMethod::structural || !c.witness) return false;
      const Witness& w = *c.witness;
      if (w.kernel_tensor.size() != span.ambient_dim() || w.phi.dim() * w.phi.dim() != span.ambient_dim())
        return false;
      for (const auto& b : span.basis())
        if (!is_zero(w.phi.on_tensor(b))) return false;
      return c.kernel.contains(w.kernel_tensor) && !is_zero(w.phi.on_tensor(w.kernel_tensor));
    }
    default:
      return !c.kernel.is_subset_of(span);
  }
}

Factorization factor_bilinear(const Algebra& a, const BilinearForm& phi, FactorMode mode) {
  const std::size_t d = a.dim();
  if (phi.dim() != d || phi.matrix.cols() != d) throw AmbientMismatch("factor_bilinear: form size differs from dim A");
  RatMatrix system;
  switch (mode) {
    case FactorMode::product:
      system = mult_matrix(a);
      break;
    case FactorMode::bracket:
      system = lie_matrix(a);
      break;
    case FactorMode::two_sided:
      system = stack(mult_matrix(a), op_mult_matrix(a));
      break;
  }
  // tau^T system = phi  <=>  system^T tau = phi.
  Factorization out;
  auto tau = solve(system.transpose(), phi.as_covector());
  if (!tau) {
    const Subspace ker = kernel(system);
    for (const auto& w : ker.basis())
      if (!is_zero(phi.on_tensor(w))) {
        out.failure_tensor = w;
        break;
      }
    return out;
  }
  out.ok = true;
  if (mode == FactorMode::two_sided) {
    out.taus.push_back({Vector(tau->begin(), tau->begin() + d)});
    out.taus.push_back({Vector(tau->begin() + d, tau->end())});
  } else {
    out.taus.push_back({*tau});
  }
  if (mode == FactorMode::bracket) out.domain = commutator_span(a);
  return out;
}

Eq3Check verify_eq3(const Algebra& a, const BilinearForm& phi) {
  const std::size_t d = a.dim();
  if (phi.dim() != d || phi.matrix.cols() != d) throw AmbientMismatch("verify_eq3: form size differs from dim A");
  Eq3Check out;
  if (!a.is_unital()) out.warning = "algebra is not unital; the identity need not imply factorization";
  std::vector<Vector> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = a.basis_product(i, j);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (phi(prod[i * d + j], unit_vector(d, k)) != phi(unit_vector(d, i), prod[j * d + k])) return out;
  out.holds = true;
  return out;
}

}  // namespace zpdlab
