#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zpdlab/maps.hpp"

namespace zpdlab {

// Nilpotent Jordan block of size k (ones on the superdiagonal).
RatMatrix nilpotent_generator(std::size_t k);

// J_n = span{I, D, ..., D^(n-1)}, basis in that order.  n >= 2.
Algebra jordan_block_algebra(std::size_t n);

Algebra full_matrix_algebra(std::size_t n);
// T_n: basis E_ij (i <= j) in row-major order.
Algebra upper_triangular_algebra(std::size_t n);
Algebra strictly_upper_triangular_algebra(std::size_t n);

// span{E_ij : (i, j) in rho}, 1-based pairs.  rho must be reflexive and
// transitive (ValidationError otherwise).
Algebra digraph_algebra(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rho);

struct TowerLevel {
  std::size_t p = 0;
  Algebra algebra;                             // T_p
  std::optional<LinearMap> embedding_from_prev;  // sigma from the previous level
};

// x -> I_d (x) x, d = p_to / p_from, between upper triangular algebras.
LinearMap refinement_embedding(std::size_t p_from, std::size_t p_to);

// Throws ArgumentError unless each p divides the next.
std::vector<TowerLevel> uhf_tower(const std::vector<std::size_t>& ps);

struct TowerConsistency {
  bool consistent = false;
  std::vector<LinearFunctional> taus;  // tau_n on [T_pn, T_pn], one per level
  std::string detail;
};

// Restricts phi_top down the tower, factors each restriction through the
// bracket and checks tau_n o sigma = tau_m on [T_pm, T_pm].  Throws
// PreconditionError if phi_top is nonzero on a commuting tensor of the top.
TowerConsistency tower_factor_consistency(const std::vector<TowerLevel>& tower, const BilinearForm& phi_top,
                                          const SamplerConfig& cfg = {});

// a o b = chi(a) b.  Throws CharacterError unless chi is multiplicative
// (and chi(1) = 1 when A is unital).
Algebra character_product_algebra(const Algebra& a, const LinearFunctional& chi);

enum class GraphFlavor { hom, der };

struct GraphAlgebra {
  Algebra algebra;
  LinearMap projection;  // (a, map(a)) -> a
  bool projection_isomorphism = false;
};

// hom: pairs (a, phi(a)) with phi : A -> B multiplicative, realized as
// diag(a, phi(a)).  der: pairs (a, delta(a)) with delta : A -> B Leibniz for
// the ambient matrix action (B and A share the ambient size), realized as
// [[a, delta(a)], [0, a]].  map is dim B x dim A.  Throws InvalidMap.
GraphAlgebra graph_algebra(const Algebra& a, const Algebra& b, const LinearMap& map, GraphFlavor flavor);

struct Compression {
  Algebra algebra;
  LinearMap phi;  // a -> (P - Q) a (P - Q)
  bool phi_multiplicative = false;
};

// Throws ArgumentError for non-idempotent P or Q and LatticeError when a
// basis element does not leave the range of P or Q invariant.
Compression compression_algebra(const Algebra& a, const RatMatrix& p, const RatMatrix& q);

// Q[t]/(f) realized by the companion matrix of f, basis 1, C, ..., C^(deg-1).
Algebra companion_algebra(const Polynomial& f);
// M_n(Q[t]/(f)).
Algebra matrix_over_commutative(std::size_t n, const Polynomial& f);

}  // namespace zpdlab
