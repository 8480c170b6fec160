#include "zpdlab/constructions.hpp"

#include <set>
#include <string>

#include "zpdlab/errors.hpp"

namespace zpdlab {

RatMatrix nilpotent_generator(std::size_t k) {
  if (k < 1) throw ArgumentError("nilpotent_generator: k must be >= 1");
  RatMatrix d(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) d(i, i + 1) = 1;
  return d;
}

Algebra jordan_block_algebra(std::size_t n) {
  if (n < 2) throw ArgumentError("jordan_block_algebra: n must be >= 2, got " + std::to_string(n));
  const RatMatrix d = nilpotent_generator(n);
  std::vector<RatMatrix> basis{RatMatrix::identity(n)};
  for (std::size_t p = 1; p < n; ++p) basis.push_back(basis.back() * d);
  return Algebra::from_basis("J" + std::to_string(n), std::move(basis), n);
}

Algebra full_matrix_algebra(std::size_t n) {
  if (n < 1) throw ArgumentError("full_matrix_algebra: n must be >= 1");
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back(RatMatrix::unit(n, i, j));
  return Algebra::from_basis("M" + std::to_string(n), std::move(basis), n);
}

Algebra upper_triangular_algebra(std::size_t n) {
  if (n < 1) throw ArgumentError("upper_triangular_algebra: n must be >= 1");
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.push_back(RatMatrix::unit(n, i, j));
  return Algebra::from_basis("T" + std::to_string(n), std::move(basis), n);
}

Algebra strictly_upper_triangular_algebra(std::size_t n) {
  if (n < 1) throw ArgumentError("strictly_upper_triangular_algebra: n must be >= 1");
  std::vector<RatMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.push_back(RatMatrix::unit(n, i, j));
  return Algebra::from_basis("N" + std::to_string(n), std::move(basis), n);
}

Algebra digraph_algebra(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rho) {
  std::set<std::pair<std::size_t, std::size_t>> rel;
  for (auto [i, j] : rho) {
    if (i < 1 || j < 1 || i > n || j > n)
      throw ArgumentError("digraph_algebra: pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    rel.insert({i, j});
  }
  for (std::size_t i = 1; i <= n; ++i)
    if (!rel.count({i, i})) throw ValidationError("digraph_algebra: relation is not reflexive at " + std::to_string(i));
  for (auto [i, j] : rel)
    for (auto [k, l] : rel)
      if (j == k && !rel.count({i, l}))
        throw ValidationError("digraph_algebra: relation is not transitive: (" + std::to_string(i) + "," +
                              std::to_string(j) + "), (" + std::to_string(k) + "," + std::to_string(l) +
                              ") but not (" + std::to_string(i) + "," + std::to_string(l) + ")");
  std::vector<RatMatrix> basis;
  for (auto [i, j] : rel) basis.push_back(RatMatrix::unit(n, i - 1, j - 1));
  return Algebra::from_basis("digraph" + std::to_string(n), std::move(basis), n);
}

LinearMap refinement_embedding(std::size_t p_from, std::size_t p_to) {
  if (p_from == 0 || p_to % p_from != 0)
    throw ArgumentError("refinement_embedding: " + std::to_string(p_from) + " does not divide " + std::to_string(p_to));
  const Algebra small = upper_triangular_algebra(p_from), big = upper_triangular_algebra(p_to);
  const RatMatrix id = RatMatrix::identity(p_to / p_from);
  RatMatrix m(big.dim(), small.dim());
  for (std::size_t i = 0; i < small.dim(); ++i) m.set_column(i, big.coordinates(kron(id, small.basis()[i])));
  return {m};
}

std::vector<TowerLevel> uhf_tower(const std::vector<std::size_t>& ps) {
  if (ps.empty()) throw ArgumentError("uhf_tower: empty level list");
  std::vector<TowerLevel> out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    TowerLevel level;
    level.p = ps[k];
    level.algebra = upper_triangular_algebra(ps[k]);
    if (k > 0) {
      if (ps[k] % ps[k - 1] != 0)
        throw ArgumentError("uhf_tower: " + std::to_string(ps[k - 1]) + " does not divide " + std::to_string(ps[k]));
      LinearMap sigma = refinement_embedding(ps[k - 1], ps[k]);
      const Algebra& prev = out.back().algebra;
      if (rank(sigma.matrix) != prev.dim()) throw ValidationError("uhf_tower: embedding not injective");
      if (sigma(*prev.unit()) != *level.algebra.unit()) throw ValidationError("uhf_tower: embedding not unital");
      for (std::size_t i = 0; i < prev.dim(); ++i)
        for (std::size_t j = 0; j < prev.dim(); ++j)
          if (sigma(prev.basis_product(i, j)) !=
              level.algebra.multiply(sigma(unit_vector(prev.dim(), i)), sigma(unit_vector(prev.dim(), j))))
            throw ValidationError("uhf_tower: embedding not multiplicative");
      level.embedding_from_prev = std::move(sigma);
    }
    out.push_back(std::move(level));
  }
  return out;
}

TowerConsistency tower_factor_consistency(const std::vector<TowerLevel>& tower, const BilinearForm& phi_top,
                                          const SamplerConfig& cfg) {
  if (tower.empty()) throw ArgumentError("tower_factor_consistency: empty tower");
  const Algebra& top = tower.back().algebra;
  if (phi_top.dim() != top.dim()) throw AmbientMismatch("tower_factor_consistency: form size differs from top level");
  const Subspace zlie = commuting_span(top, cfg, lie_kernel(top)).span;
  for (const auto& w : zlie.basis())
    if (!is_zero(phi_top.on_tensor(w))) {
      std::string t;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_zero(w[i]))
          t += " " + to_string(w[i]) + "*b" + std::to_string(i / top.dim()) + "(x)b" + std::to_string(i % top.dim());
      throw PreconditionError("tower_factor_consistency: form is nonzero on commuting tensor" + t);
    }

  // sigma from each level to the top.
  std::vector<LinearMap> to_top(tower.size());
  to_top.back() = LinearMap::identity(top.dim());
  for (std::size_t k = tower.size() - 1; k-- > 0;) to_top[k] = compose(to_top[k + 1], *tower[k + 1].embedding_from_prev);

  TowerConsistency rep;
  for (std::size_t k = 0; k < tower.size(); ++k) {
    const RatMatrix& s = to_top[k].matrix;
    const BilinearForm phi{s.transpose() * phi_top.matrix * s};
    const Factorization f = factor_bilinear(tower[k].algebra, phi, FactorMode::bracket);
    if (!f.ok) {
      rep.detail = "restriction to level p=" + std::to_string(tower[k].p) + " does not factor through the bracket";
      return rep;
    }
    rep.taus.push_back(f.taus.front());
  }
  for (std::size_t k = 1; k < tower.size(); ++k) {
    const LinearMap& sigma = *tower[k].embedding_from_prev;
    const Subspace brackets = commutator_span(tower[k - 1].algebra);
    for (const auto& v : brackets.basis())
      if (rep.taus[k](sigma(v)) != rep.taus[k - 1](v)) {
        rep.detail = "tau at p=" + std::to_string(tower[k].p) + " disagrees with p=" + std::to_string(tower[k - 1].p);
        return rep;
      }
  }
  rep.consistent = true;
  return rep;
}

Algebra character_product_algebra(const Algebra& a, const LinearFunctional& chi) {
  const std::size_t d = a.dim();
  if (chi.dim() != d) throw AmbientMismatch("character_product_algebra: functional length differs from dim A");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (chi(a.basis_product(i, j)) != chi(unit_vector(d, i)) * chi(unit_vector(d, j)))
        throw CharacterError("functional is not multiplicative on basis pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
  if (a.is_unital() && chi(*a.unit()) != 1) throw CharacterError("functional does not send the unit to 1");
  if (is_zero(chi.covector)) throw CharacterError("zero functional is not a character");
  Vector c = zeros(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[(i * d + j) * d + j] = chi.covector[i];
  return Algebra::from_structure_constants(a.name() + "_chi", d, std::move(c));
}

GraphAlgebra graph_algebra(const Algebra& a, const Algebra& b, const LinearMap& map, GraphFlavor flavor) {
  const std::size_t d = a.dim();
  if (map.source_dim() != d || map.target_dim() != b.dim())
    throw AmbientMismatch("graph_algebra: map shape differs from dim B x dim A");
  std::vector<RatMatrix> img(d);
  for (std::size_t i = 0; i < d; ++i) img[i] = b.to_matrix(map(unit_vector(d, i)));
  std::vector<RatMatrix> basis;
  if (flavor == GraphFlavor::hom) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (b.to_matrix(map(a.basis_product(i, j))) != img[i] * img[j])
          throw InvalidMap("graph_algebra: map is not multiplicative on basis pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    for (std::size_t i = 0; i < d; ++i) basis.push_back(block_diagonal(a.basis()[i], img[i]));
  } else {
    if (a.ambient_n() != b.ambient_n()) throw AmbientMismatch("graph_algebra: der flavor needs a shared ambient size");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (b.to_matrix(map(a.basis_product(i, j))) != img[i] * a.basis()[j] + a.basis()[i] * img[j])
          throw InvalidMap("graph_algebra: map violates the Leibniz rule on basis pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    const std::size_t n = a.ambient_n();
    for (std::size_t i = 0; i < d; ++i) {
      RatMatrix m = block_diagonal(a.basis()[i], a.basis()[i]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, n + c) = img[i](r, c);
      basis.push_back(std::move(m));
    }
  }
  GraphAlgebra out;
  out.algebra = Algebra::from_basis(a.name() + (flavor == GraphFlavor::hom ? "_graph_hom" : "_graph_der"),
                                    std::move(basis));
  out.projection = LinearMap::identity(d);
  out.projection_isomorphism = out.algebra.structure_constants() == a.structure_constants();
  return out;
}

Compression compression_algebra(const Algebra& a, const RatMatrix& p, const RatMatrix& q) {
  const std::size_t n = a.ambient_n();
  if (p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n)
    throw AmbientMismatch("compression_algebra: projections must match the ambient size");
  if (p * p != p) throw ArgumentError("compression_algebra: P is not idempotent");
  if (q * q != q) throw ArgumentError("compression_algebra: Q is not idempotent");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const RatMatrix& x = a.basis()[i];
    if (x * p != p * x * p) throw LatticeError("compression_algebra: range of P not invariant under basis element " + std::to_string(i));
    if (x * q != q * x * q) throw LatticeError("compression_algebra: range of Q not invariant under basis element " + std::to_string(i));
  }
  const RatMatrix e = p - q;
  std::vector<RatMatrix> images;
  for (const auto& x : a.basis()) images.push_back(e * x * e);
  Compression out;
  out.algebra = algebra_from_generators(images, false, a.name() + "_compressed");
  RatMatrix phi(out.algebra.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) phi.set_column(i, out.algebra.coordinates(images[i]));
  out.phi = {phi};
  out.phi_multiplicative = true;
  for (std::size_t i = 0; i < a.dim() && out.phi_multiplicative; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (out.phi(a.basis_product(i, j)) !=
          out.algebra.multiply(out.phi(unit_vector(a.dim(), i)), out.phi(unit_vector(a.dim(), j)))) {
        out.phi_multiplicative = false;
        break;
      }
  return out;
}

Algebra companion_algebra(const Polynomial& f) {
  if (f.degree() < 1) throw ArgumentError("companion_algebra: degree must be >= 1");
  const Polynomial g = f.monic();
  const std::size_t k = static_cast<std::size_t>(g.degree());
  RatMatrix c(k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -g.coefficient(i);
  std::vector<RatMatrix> basis{RatMatrix::identity(k)};
  for (std::size_t p = 1; p < k; ++p) basis.push_back(basis.back() * c);
  return Algebra::from_basis("Q[t]/(" + g.to_string() + ")", std::move(basis), k);
}

Algebra matrix_over_commutative(std::size_t n, const Polynomial& f) {
  if (n < 1) throw ArgumentError("matrix_over_commutative: n must be >= 1");
  Algebra m = tensor_product(full_matrix_algebra(n), companion_algebra(f));
  return m.renamed("M" + std::to_string(n) + "(" + companion_algebra(f).name() + ")");
}

}  // namespace zpdlab
