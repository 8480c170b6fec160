#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zpdlab/decision.hpp"

namespace zpdlab {

// Linear map Q^source -> Q^target stored as a target x source matrix.
// Map spaces are vectorized column by column: entry (p, j) sits at j*target + p.
struct LinearMap {
  RatMatrix matrix;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Vector operator()(const Vector& x) const { return matrix.apply(x); }

  Vector vectorize() const;
  static LinearMap from_vector(std::size_t source, std::size_t target, const Vector& v);
  static LinearMap zero(std::size_t source, std::size_t target) { return {RatMatrix(target, source)}; }
  static LinearMap identity(std::size_t n) { return {RatMatrix::identity(n)}; }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner);

// Bimodule over a fixed algebra: b_i acts on the m-dimensional module by the
// matrices left[i] (m -> b_i . m) and right[i] (m -> m . b_i).
class Bimodule {
 public:
  Bimodule() = default;

  // Validates the three module axioms on basis triples (ValidationError).
  static Bimodule make(const Algebra& a, std::vector<RatMatrix> left, std::vector<RatMatrix> right);

  std::size_t dim() const { return dim_; }
  std::size_t algebra_dim() const { return left_.size(); }
  const std::vector<RatMatrix>& left_action() const { return left_; }
  const std::vector<RatMatrix>& right_action() const { return right_; }
  bool unital_left() const { return unital_left_; }
  bool unital_right() const { return unital_right_; }
  bool separating() const { return separating_; }

  RatMatrix left_matrix(const Vector& a) const;
  RatMatrix right_matrix(const Vector& a) const;
  Vector act_left(const Vector& a, const Vector& m) const { return left_matrix(a).apply(m); }
  Vector act_right(const Vector& m, const Vector& a) const { return right_matrix(a).apply(m); }

 private:
  std::size_t dim_ = 0;
  std::vector<RatMatrix> left_, right_;
  bool unital_left_ = false, unital_right_ = false, separating_ = false;
};

Bimodule regular_bimodule(const Algebra& a);
// All actions zero.
Bimodule zero_bimodule(const Algebra& a, std::size_t m = 0);
// M_n acting on itself by matrix multiplication, as a bimodule over a
// subalgebra of M_n.  Coordinates are row-major: X(p, q) -> p*n + q.
Bimodule ambient_bimodule(const Algebra& a);
// (a . f)(x) = f(x . a),  (f . a)(x) = f(a . x).
Bimodule dual_bimodule(const Algebra& a, const Bimodule& m);

Subspace derivation_space(const Algebra& a, const Bimodule& m);
Subspace inner_derivation_space(const Algebra& a, const Bimodule& m);
// dim Der(A, A*) - dim Inn(A, A*).
std::size_t weak_amenability_index(const Algebra& a);

Subspace multiplier_space(const Algebra& a, const Bimodule& m, Side side);

struct MultiplierPair {
  LinearMap L, R;
};

struct MultiplierAlgebra {
  Algebra algebra;                   // pair (L, R) realized as diag(L, R^T)
  std::vector<MultiplierPair> pairs; // basis of M(A), in the algebra's basis order
  LinearMap embedding;               // a -> (L_a, R_a), coordinates of M(A)
  bool embedding_homomorphism = false;
  bool embedding_bijective = false;
};

// Throws FaithfulnessError when aA = Aa = 0 for some a != 0.
MultiplierAlgebra multiplier_algebra(const Algebra& a);

enum class MapFlavor { derivation, left_multiplier, right_multiplier };
std::string to_string(MapFlavor f);

struct MapDefect {
  bool holds = true;  // the defining identity holds on all basis pairs
  std::optional<std::pair<std::size_t, std::size_t>> pair;  // first failing basis pair
  Vector defect;  // module element at that pair
};

// Leibniz defect delta(b_i b_j) - delta(b_i) b_j - b_i delta(b_j).
MapDefect derivation_defect(const Algebra& a, const Bimodule& m, const LinearMap& delta);
// V(b_i b_j) - V(b_i) b_j (left) or V(b_i b_j) - b_i V(b_j) (right).
MapDefect multiplier_defect(const Algebra& a, const Bimodule& m, const LinearMap& v, Side side);
MapDefect flavor_defect(const Algebra& a, const Bimodule& m, const LinearMap& v, MapFlavor flavor);

// {x : covector . x == 0} or {x : covector . x != 0}.
struct Region {
  Vector covector;
  bool zero = true;
  bool contains(const Vector& x) const { return is_zero(dot(covector, x)) == zero; }
};

struct LocalWitness {
  std::optional<Region> region;  // nullopt: everywhere
  std::function<LinearMap(const Vector&)> map;
  std::string label;
};

struct LocalCheckOptions {
  std::uint64_t seed = 0;
  std::size_t samples_per_region = 12;
  long height = 10;
};

// True iff the regions cover A (a single global witness, or some condition
// together with its complement) and delta(x) equals the region's witness
// map applied to x on basis elements and random points of each region.
// Throws InvalidWitness when a witness map fails its own flavor check.
bool local_witness_check(const Algebra& a, const Bimodule& m, const LinearMap& delta,
                         const std::vector<LocalWitness>& witnesses, MapFlavor flavor,
                         const LocalCheckOptions& opts = {});

// n-cochains are (d^n) x m matrices: row t holds T(b_{t_1}, ..., b_{t_n}) with
// t written in base d, first argument most significant.
RatMatrix hochschild_coboundary(const Algebra& a, const Bimodule& m, const RatMatrix& t, std::size_t n);

// Cochains are vectorized row-major (t*m + p); for n = 1 this coincides with
// the map-space vectorization.  Throws ResourceError past max_cochain_dim.
Subspace cocycle_space(const Algebra& a, const Bimodule& m, std::size_t n, std::size_t max_cochain_dim = 4096);

// phi : A -> B kills every tensor of the zero-product span of A under
// (x, y) -> phi(x) phi(y).  Exact when that span is structural or saturates
// to ker mu; a necessary condition otherwise.
bool zero_product_preserving_check(const LinearMap& phi, const Algebra& a, const Algebra& b,
                                   const SamplerConfig& cfg = {});

struct WeightedHom {
  std::optional<LinearMap> W, psi;
  std::string diagnostic;
  bool ok() const { return W.has_value(); }
};

// phi = W psi with W = left multiplication by phi(1).  Throws
// PreconditionError when A is not unital or phi is not onto B.
WeightedHom weighted_hom_factor(const LinearMap& phi, const Algebra& a, const Algebra& b);

struct MultiplierBCheck {
  Subspace f_space;
  Subspace left_mult_space;
  bool equal = false;
  SpanMethod method = SpanMethod::sampled;
  Certificate zpd;
};

// Maps f : A -> A* with f(a) . b = 0 whenever ab = 0, against the left
// multipliers A -> A*.  Throws PreconditionError for non-unital A.
MultiplierBCheck check_theorem_multiplierB(const Algebra& a, const SamplerConfig& cfg = {});

// Fixtures.
struct MapFixture {
  Algebra algebra;
  Bimodule module;
  LinearMap delta;
  MapFlavor flavor = MapFlavor::derivation;
  std::vector<LocalWitness> witnesses;
};

// J_2 acting trivially on the left and by right multiplication on M = J_2,
// with delta(l1 I + l2 E12) = l1 I + 2 l2 E12.
MapFixture example_fanli1_J2_bimodule();
// delta(A) = (l3 - l2) E_1n on J_n, n >= 3, valued in M_n.
MapFixture example_fanli1_delta(std::size_t n);
// delta(A) = l1 D^(n-2) + 2 l2 D^(n-1) on J_n, n >= 3.
MapFixture example_multiplier_delta(std::size_t n);

}  // namespace zpdlab
