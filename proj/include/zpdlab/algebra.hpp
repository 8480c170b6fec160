#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zpdlab/linalg.hpp"
#include "zpdlab/polynomial.hpp"

namespace zpdlab {

// Element of a specific algebra, in that algebra's basis coordinates.
struct AlgebraElement {
  Vector coords;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Finite-dimensional associative algebra presented by an ordered basis of
// ambient n x n matrices together with its structure constants
//   b_i b_j = sum_k c(i, j, k) b_k.
// Immutable after construction.
class Algebra {
 public:
  Algebra() = default;

  // Validates linear independence and multiplicative closure, then computes
  // the structure constants.  Throws ValidationError.
  static Algebra from_basis(std::string name, std::vector<RatMatrix> basis, std::size_t ambient_n = 0);

  // Abstract algebra from a d^3 structure-constant table indexed (i*d+j)*d+k.
  // Associativity is checked; the ambient realization is the (faithful)
  // regular representation of the unitization, of size d + 1.
  static Algebra from_structure_constants(std::string name, std::size_t dim, Vector constants);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t ambient_n() const { return ambient_n_; }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const Vector& structure_constants() const { return constants_; }

  const std::optional<Vector>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }
  bool is_commutative() const { return commutative_; }

  Algebra renamed(std::string name) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector commutator(const Vector& x, const Vector& y) const;
  Vector basis_product(std::size_t i, std::size_t j) const;
  RatMatrix to_matrix(const Vector& coords) const;
  // Coordinates of an ambient matrix; nullopt when m is not in the span.
  std::optional<Vector> try_coordinates(const RatMatrix& m) const;
  Vector coordinates(const RatMatrix& m) const;

  // Matrices (d x d) of y -> x y and y -> y x.
  RatMatrix left_mult_matrix(const Vector& x) const;
  RatMatrix right_mult_matrix(const Vector& x) const;

  // Exhaustive check of the associativity identity on basis quadruples.
  bool check_associativity() const;
  // Residual-free closure of basis products (exact re-verification).
  bool check_closure() const;

 private:
  void finish();

  std::string name_;
  std::size_t dim_ = 0;
  std::size_t ambient_n_ = 0;
  std::vector<RatMatrix> basis_;
  Vector constants_;
  std::optional<Vector> unit_;
  bool commutative_ = true;
  // Coordinate extraction: entry positions forming an invertible d x d minor.
  std::vector<std::size_t> coord_rows_;
  RatMatrix coord_inverse_;
};

// Smallest subalgebra containing gens (and the identity if include_unit).
// Breadth-first closure over products; basis order is insertion order.
Algebra algebra_from_generators(const std::vector<RatMatrix>& gens, bool include_unit,
                                std::string name = "generated");

Polynomial minimal_polynomial(const RatMatrix& t);

// Minimal polynomial of an element inside an algebra (via its left
// multiplication operator, plus the unit when A is not unital).
Polynomial minimal_polynomial(const Algebra& a, const Vector& x);

// p(x) inside a unital algebra.
Vector evaluate(const Algebra& a, const Polynomial& p, const Vector& x);

struct Diagonalizability {
  bool diagonalizable = false;
  // Minimal polynomial splits into linear factors over Q.
  bool split = false;
  Polynomial minimal;
};
Diagonalizability diagonalizability(const RatMatrix& t);
inline bool is_diagonalizable(const RatMatrix& t) { return diagonalizability(t).diagonalizable; }

struct PrimaryBlock {
  Scalar eigenvalue;
  unsigned index = 0;             // nilpotency order of x - eigenvalue on the block
  Algebra block_algebra;          // e_i A, unital with unit e_i, isomorphic to Q[t]/(t^index)
  AlgebraElement idempotent;      // e_i in coordinates of the ambient algebra
  AlgebraElement nilpotent;       // (x - eigenvalue) e_i
};

struct PrimaryDecomposition {
  Algebra algebra;  // the algebra being decomposed (A_T for the matrix overload)
  std::vector<PrimaryBlock> blocks;
};

// A_T split into blocks along the spectrum of T.  Throws UnsupportedField when
// the minimal polynomial has a factor without rational roots.
PrimaryDecomposition primary_decomposition(const RatMatrix& t);

// Same decomposition for a unital algebra A = Q[x] generated by one element x.
// Throws ArgumentError when x does not generate A.
PrimaryDecomposition primary_decomposition(const Algebra& a, const Vector& x);

Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra tensor_product(const Algebra& a, const Algebra& b);
// Adjoins a unit as the new first basis element.
Algebra unitization(const Algebra& a);

Subspace squared_span(const Algebra& a);
// Span of all commutators b_i b_j - b_j b_i, i.e. [A, A].
Subspace commutator_span(const Algebra& a);

enum class Side { left, right };
// right: {y : x y = 0};  left: {y : y x = 0}.
Subspace annihilator(const Algebra& a, const Vector& x, Side side);
Subspace centralizer(const Algebra& a, const Vector& x);
bool is_faithful(const Algebra& a);

}  // namespace zpdlab
