#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "zpdlab/algebra.hpp"

namespace zpdlab {

// Tensor space A (x) A uses the index convention b_i (x) b_j  ->  i*d + j.
inline std::size_t tensor_index(std::size_t d, std::size_t i, std::size_t j) { return i * d + j; }

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t saturation_rounds = 8;
  std::optional<std::size_t> max_samples;  // default 64*d
  long coefficient_height = 10;

  std::size_t sample_budget(std::size_t d) const { return max_samples.value_or(64 * std::max<std::size_t>(d, 1)); }
};

enum class SpanMethod { structural, sampled };
std::string to_string(SpanMethod m);

struct SpanReport {
  Subspace span;
  SpanMethod method = SpanMethod::sampled;
  std::size_t samples_used = 0;
  std::size_t rounds_stable = 0;
  std::uint64_t seed = 0;
};

// Seeded source of random algebra elements with integer coordinates in
// [-h, h].  mt19937_64 output is fixed by the standard, and bounded draws use
// plain modular reduction, so sequences are reproducible across toolchains.
class ElementSampler {
 public:
  ElementSampler(std::uint64_t seed, long height) : rng_(seed), height_(std::max(1L, height)) {}

  long integer();          // uniform in [-h, h]
  long nonzero_integer();  // uniform in [-h, h] \ {0}
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  Vector dense(std::size_t d);
  // Random element supported on at most max_support basis coordinates.
  Vector sparse(std::size_t d, std::size_t max_support = 3);
  // Random integer combination of the basis of s (zero if s is zero).
  Vector in_subspace(const Subspace& s);

 private:
  std::mt19937_64 rng_;
  long height_;
};

// Lower bound Z* on Z = span{x (x) y : xy = 0} by slab sampling.  Sampling stops
// at saturation, at the budget, or when Z* fills `upper`, a known subspace
// containing Z (e.g. ker mu).  Throws ArgumentError if a sampled tensor falls
// outside `upper`.
SpanReport zero_product_span(const Algebra& a, const SamplerConfig& cfg,
                             const std::optional<Subspace>& upper = std::nullopt);

// Exact Z for Q[t]/(t^k) in the monomial basis 1, t, ..., t^(k-1):
// span{t^i (x) t^j : i + j >= k}.
Subspace structural_zero_span_commutative_primary(std::size_t k);

// Exact Z when A is commutative, unital, singly generated with rational
// spectrum, i.e. a direct sum of blocks Q[t]/(t^k).  nullopt otherwise.
std::optional<Subspace> structural_zero_span(const Algebra& a);

// Lower bound on span{x (x) y : [x, y] = 0}; always contains the symmetric
// tensors.  Exact (structural) for commutative A.
SpanReport commuting_span(const Algebra& a, const SamplerConfig& cfg,
                          const std::optional<Subspace>& upper = std::nullopt);

// Lower bound on span{x (x) y : xy = yx = 0}.
SpanReport two_sided_zero_span(const Algebra& a, const SamplerConfig& cfg,
                               const std::optional<Subspace>& upper = std::nullopt);

// Lower bound on span{x in A : x^2 = 0} (a subspace of A).
SpanReport square_zero_span(const Algebra& a, const SamplerConfig& cfg);

}  // namespace zpdlab
