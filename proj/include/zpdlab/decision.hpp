#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zpdlab/span.hpp"

namespace zpdlab {

// phi(x, y) = x^T M y in basis coordinates.
struct BilinearForm {
  RatMatrix matrix;

  std::size_t dim() const { return matrix.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const;
  // Value on a tensor of A (x) A (index i*d + j).
  Scalar on_tensor(const Vector& w) const;
  // The length-d^2 covector of the form.
  Vector as_covector() const { return matrix.entries(); }
  static BilinearForm from_covector(std::size_t d, const Vector& f);
};

struct LinearFunctional {
  Vector covector;

  std::size_t dim() const { return covector.size(); }
  Scalar operator()(const Vector& x) const { return dot(covector, x); }
};

enum class Property { zpd, zlpd, two_sided_zpd };
enum class Verdict { yes, no, no_uncertified };
enum class FieldNote { rational_certified_for_C, rational_only };

std::string to_string(Property p);
std::string to_string(Verdict v);
std::string to_string(FieldNote f);

struct Witness {
  BilinearForm phi;
  Vector kernel_tensor;  // lies in the kernel, phi is nonzero on it
};

struct Certificate {
  Property property = Property::zpd;
  Verdict verdict = Verdict::no_uncertified;
  Subspace kernel;  // ker mu, ker beta, or ker mu /\ ker mu^op
  SpanReport span_report;
  std::optional<Witness> witness;
  FieldNote field_note = FieldNote::rational_only;

  std::size_t ker_dim() const { return kernel.dim(); }
  std::size_t span_dim() const { return span_report.span.dim(); }
};

// d x d^2 matrices of x (x) y -> xy, [x, y] and yx.
RatMatrix mult_matrix(const Algebra& a);
RatMatrix lie_matrix(const Algebra& a);
RatMatrix op_mult_matrix(const Algebra& a);

Subspace mult_kernel(const Algebra& a);
Subspace lie_kernel(const Algebra& a);
Subspace op_mult_kernel(const Algebra& a);
Subspace two_sided_kernel(const Algebra& a);

Certificate decide_zpd(const Algebra& a, const SamplerConfig& cfg = {});
Certificate decide_zlpd(const Algebra& a, const SamplerConfig& cfg = {});
Certificate decide_two_sided_zpd(const Algebra& a, const SamplerConfig& cfg = {});

// Re-checks the stored data: yes needs kernel inside span; no needs a witness
// that kills the (structural) span and is nonzero on a kernel tensor.
bool verify_certificate(const Certificate& c);

enum class FactorMode { product, bracket, two_sided };
std::string to_string(FactorMode m);

struct Factorization {
  bool ok = false;
  // product and bracket: one functional; two_sided: tau1 (on xy), tau2 (on yx).
  std::vector<LinearFunctional> taus;
  // bracket mode: tau is meaningful on [A, A] only.
  std::optional<Subspace> domain;
  // On failure: a tensor in the relevant kernel where phi does not vanish.
  std::optional<Vector> failure_tensor;
};

Factorization factor_bilinear(const Algebra& a, const BilinearForm& phi, FactorMode mode);

struct Eq3Check {
  bool holds = false;
  std::optional<std::string> warning;  // set when A is not unital
  explicit operator bool() const { return holds; }
};

// phi(b_i b_j, b_k) == phi(b_i, b_j b_k) on all basis triples.
Eq3Check verify_eq3(const Algebra& a, const BilinearForm& phi);

}  // namespace zpdlab
