#include "zpdlab/maps.hpp"

#include <string>

#include "zpdlab/constructions.hpp"
#include "zpdlab/errors.hpp"

namespace zpdlab {

Vector LinearMap::vectorize() const {
  const std::size_t m = target_dim();
  Vector v(source_dim() * m);
  for (std::size_t j = 0; j < source_dim(); ++j)
    for (std::size_t p = 0; p < m; ++p) v[j * m + p] = matrix(p, j);
  return v;
}

LinearMap LinearMap::from_vector(std::size_t source, std::size_t target, const Vector& v) {
  if (v.size() != source * target) throw AmbientMismatch("map vector length differs from source*target");
  RatMatrix m(target, source);
  for (std::size_t j = 0; j < source; ++j)
    for (std::size_t p = 0; p < target; ++p) m(p, j) = v[j * target + p];
  return {m};
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.source_dim() != inner.target_dim()) throw AmbientMismatch("compose: inner target differs from outer source");
  return {outer.matrix * inner.matrix};
}

namespace {

RatMatrix combine(const std::vector<RatMatrix>& mats, const Vector& a, std::size_t m) {
  if (a.size() != mats.size()) throw AmbientMismatch("bimodule: element length differs from dim A");
  RatMatrix out(m, m);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i])) {
      RatMatrix t = mats[i];
      t *= a[i];
      out += t;
    }
  return out;
}

bool stacked_kernel_trivial(const std::vector<RatMatrix>& mats, std::size_t m) {
  if (m == 0) return true;
  std::vector<Vector> rows;
  for (const auto& x : mats)
    for (std::size_t r = 0; r < x.rows(); ++r) rows.push_back(x.row(r));
  if (rows.empty()) return false;
  return kernel(RatMatrix::from_rows(rows, m)).dim() == 0;
}

// All basis products b_i b_j, indexed i*d + j.
std::vector<Vector> basis_products(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Vector> out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] = a.basis_product(i, j);
  return out;
}

void put(Vector& out, std::size_t offset, const Vector& v) {
  for (std::size_t p = 0; p < v.size(); ++p) out[offset + p] = v[p];
}

// Residual of the defining identity of a flavor at basis pair (i, j).
Vector flavor_residual(const Algebra& a, const Bimodule& m, const LinearMap& v, MapFlavor flavor,
                       const Vector& prod, std::size_t i, std::size_t j) {
  const std::size_t d = a.dim();
  Vector r = v(prod);
  switch (flavor) {
    case MapFlavor::derivation:
      r = r - m.right_action()[j].apply(v(unit_vector(d, i)));
      r = r - m.left_action()[i].apply(v(unit_vector(d, j)));
      break;
    case MapFlavor::left_multiplier:
      r = r - m.right_action()[j].apply(v(unit_vector(d, i)));
      break;
    case MapFlavor::right_multiplier:
      r = r - m.left_action()[i].apply(v(unit_vector(d, j)));
      break;
  }
  return r;
}

Subspace identity_space(const Algebra& a, const Bimodule& m, MapFlavor flavor) {
  const std::size_t d = a.dim(), n = m.dim();
  if (m.algebra_dim() != d) throw AmbientMismatch("bimodule is over an algebra of different dimension");
  const auto prods = basis_products(a);
  const RatMatrix sys = linearize(d * n, d * d * n, [&](const Vector& vec) {
    const LinearMap v = LinearMap::from_vector(d, n, vec);
    Vector out = zeros(d * d * n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        put(out, (i * d + j) * n, flavor_residual(a, m, v, flavor, prods[i * d + j], i, j));
    return out;
  });
  return kernel(sys);
}

}  // namespace

Bimodule Bimodule::make(const Algebra& a, std::vector<RatMatrix> left, std::vector<RatMatrix> right) {
  const std::size_t d = a.dim();
  if (left.size() != d || right.size() != d)
    throw ValidationError("bimodule: need one left and one right action matrix per basis element");
  const std::size_t m = d == 0 ? 0 : left.front().rows();
  for (std::size_t i = 0; i < d; ++i)
    if (left[i].rows() != m || left[i].cols() != m || right[i].rows() != m || right[i].cols() != m)
      throw ValidationError("bimodule: action matrices must all be " + std::to_string(m) + "x" + std::to_string(m));
  Bimodule b;
  b.dim_ = m;
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector p = a.basis_product(i, j);
      const std::string at = " at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (b.left_matrix(p) != b.left_[i] * b.left_[j]) throw ValidationError("bimodule: (ab).m != a.(b.m)" + at);
      if (b.right_matrix(p) != b.right_[j] * b.right_[i]) throw ValidationError("bimodule: m.(ab) != (m.a).b" + at);
      if (b.left_[i] * b.right_[j] != b.right_[j] * b.left_[i]) throw ValidationError("bimodule: (a.m).b != a.(m.b)" + at);
    }
  if (a.is_unital()) {
    b.unital_left_ = b.left_matrix(*a.unit()) == RatMatrix::identity(m);
    b.unital_right_ = b.right_matrix(*a.unit()) == RatMatrix::identity(m);
  }
  b.separating_ = stacked_kernel_trivial(b.left_, m) && stacked_kernel_trivial(b.right_, m);
  return b;
}

RatMatrix Bimodule::left_matrix(const Vector& a) const { return combine(left_, a, dim_); }
RatMatrix Bimodule::right_matrix(const Vector& a) const { return combine(right_, a, dim_); }

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<RatMatrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.left_mult_matrix(unit_vector(a.dim(), i)));
    r.push_back(a.right_mult_matrix(unit_vector(a.dim(), i)));
  }
  return Bimodule::make(a, std::move(l), std::move(r));
}

Bimodule zero_bimodule(const Algebra& a, std::size_t m) {
  std::vector<RatMatrix> z(a.dim(), RatMatrix(m, m));
  return Bimodule::make(a, z, z);
}

Bimodule ambient_bimodule(const Algebra& a) {
  const std::size_t n = a.ambient_n();
  const RatMatrix id = RatMatrix::identity(n);
  std::vector<RatMatrix> l, r;
  for (const auto& b : a.basis()) {
    l.push_back(kron(b, id));
    r.push_back(kron(id, b.transpose()));
  }
  return Bimodule::make(a, std::move(l), std::move(r));
}

Bimodule dual_bimodule(const Algebra& a, const Bimodule& m) {
  std::vector<RatMatrix> l, r;
  for (std::size_t i = 0; i < m.algebra_dim(); ++i) {
    l.push_back(m.right_action()[i].transpose());
    r.push_back(m.left_action()[i].transpose());
  }
  return Bimodule::make(a, std::move(l), std::move(r));
}

Subspace derivation_space(const Algebra& a, const Bimodule& m) { return identity_space(a, m, MapFlavor::derivation); }

Subspace inner_derivation_space(const Algebra& a, const Bimodule& m) {
  const std::size_t d = a.dim(), n = m.dim();
  std::vector<Vector> maps;
  for (std::size_t q = 0; q < n; ++q) {
    RatMatrix ad(n, d);
    for (std::size_t j = 0; j < d; ++j)
      ad.set_column(j, m.left_action()[j].column(q) - m.right_action()[j].column(q));
    maps.push_back(LinearMap{ad}.vectorize());
  }
  return Subspace::span(d * n, maps);
}

std::size_t weak_amenability_index(const Algebra& a) {
  const Bimodule dual = dual_bimodule(a, regular_bimodule(a));
  return derivation_space(a, dual).dim() - inner_derivation_space(a, dual).dim();
}

Subspace multiplier_space(const Algebra& a, const Bimodule& m, Side side) {
  return identity_space(a, m, side == Side::left ? MapFlavor::left_multiplier : MapFlavor::right_multiplier);
}

MultiplierAlgebra multiplier_algebra(const Algebra& a) {
  if (!is_faithful(a))
    throw FaithfulnessError(a.name() + " is not faithful: aA = Aa = {0} implies a = 0 fails");
  const std::size_t d = a.dim(), dd = d * d;
  const auto prods = basis_products(a);
  std::vector<RatMatrix> lm(d), rm(d);
  for (std::size_t i = 0; i < d; ++i) {
    lm[i] = a.left_mult_matrix(unit_vector(d, i));
    rm[i] = a.right_mult_matrix(unit_vector(d, i));
  }
  const RatMatrix sys = linearize(2 * dd, 3 * dd * d, [&](const Vector& vec) {
    const LinearMap L = LinearMap::from_vector(d, d, Vector(vec.begin(), vec.begin() + dd));
    const LinearMap R = LinearMap::from_vector(d, d, Vector(vec.begin() + dd, vec.end()));
    Vector out = zeros(3 * dd * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t k = (i * d + j) * d;
        const Vector li = L(unit_vector(d, i)), lj = L(unit_vector(d, j));
        const Vector ri = R(unit_vector(d, i)), rj = R(unit_vector(d, j));
        put(out, k, L(prods[i * d + j]) - rm[j].apply(li));
        put(out, dd * d + k, R(prods[i * d + j]) - lm[i].apply(rj));
        put(out, 2 * dd * d + k, lm[i].apply(lj) - rm[j].apply(ri));
      }
    return out;
  });
  const Subspace pairs = kernel(sys);

  MultiplierAlgebra out;
  std::vector<RatMatrix> mats;
  for (const auto& v : pairs.basis()) {
    MultiplierPair pr{LinearMap::from_vector(d, d, Vector(v.begin(), v.begin() + dd)),
                      LinearMap::from_vector(d, d, Vector(v.begin() + dd, v.end()))};
    mats.push_back(block_diagonal(pr.L.matrix, pr.R.matrix.transpose()));
    out.pairs.push_back(std::move(pr));
  }
  out.algebra = Algebra::from_basis("M(" + a.name() + ")", std::move(mats), 2 * d);
  RatMatrix emb(out.algebra.dim(), d);
  for (std::size_t i = 0; i < d; ++i)
    emb.set_column(i, out.algebra.coordinates(block_diagonal(lm[i], rm[i].transpose())));
  out.embedding = {emb};
  out.embedding_homomorphism = true;
  for (std::size_t i = 0; i < d && out.embedding_homomorphism; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (out.embedding(prods[i * d + j]) !=
          out.algebra.multiply(out.embedding(unit_vector(d, i)), out.embedding(unit_vector(d, j)))) {
        out.embedding_homomorphism = false;
        break;
      }
  out.embedding_bijective = out.algebra.dim() == d && rank(emb) == d;
  return out;
}

std::string to_string(MapFlavor f) {
  switch (f) {
    case MapFlavor::derivation: return "derivation";
    case MapFlavor::left_multiplier: return "left_multiplier";
    default: return "right_multiplier";
  }
}

MapDefect flavor_defect(const Algebra& a, const Bimodule& m, const LinearMap& v, MapFlavor flavor) {
  const std::size_t d = a.dim();
  if (v.source_dim() != d || v.target_dim() != m.dim()) throw AmbientMismatch("map shape differs from dim M x dim A");
  MapDefect out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector r = flavor_residual(a, m, v, flavor, a.basis_product(i, j), i, j);
      if (!is_zero(r)) {
        out.holds = false;
        out.pair = std::make_pair(i, j);
        out.defect = std::move(r);
        return out;
      }
    }
  return out;
}

MapDefect derivation_defect(const Algebra& a, const Bimodule& m, const LinearMap& delta) {
  return flavor_defect(a, m, delta, MapFlavor::derivation);
}

MapDefect multiplier_defect(const Algebra& a, const Bimodule& m, const LinearMap& v, Side side) {
  return flavor_defect(a, m, v, side == Side::left ? MapFlavor::left_multiplier : MapFlavor::right_multiplier);
}

bool local_witness_check(const Algebra& a, const Bimodule& m, const LinearMap& delta,
                         const std::vector<LocalWitness>& witnesses, MapFlavor flavor, const LocalCheckOptions& opts) {
  const std::size_t d = a.dim();
  if (delta.source_dim() != d || delta.target_dim() != m.dim()) throw AmbientMismatch("map shape differs from dim M x dim A");
  bool covered = false;
  for (const auto& w : witnesses) {
    if (!w.region) covered = true;
    else if (w.region->covector.size() != d) throw AmbientMismatch("region covector length differs from dim A");
    for (const auto& u : witnesses)
      if (w.region && u.region && w.region->zero && !u.region->zero && w.region->covector == u.region->covector)
        covered = true;
  }
  if (!covered) return false;

  ElementSampler rng(opts.seed, opts.height);
  for (const auto& w : witnesses) {
    std::vector<Vector> points;
    if (!w.region) {
      for (std::size_t i = 0; i < d; ++i) points.push_back(unit_vector(d, i));
      for (std::size_t s = 0; s < opts.samples_per_region; ++s) points.push_back(rng.dense(d));
    } else if (w.region->zero) {
      const Subspace hyper = kernel(RatMatrix::from_rows({w.region->covector}, d));
      points = hyper.basis();
      for (std::size_t s = 0; s < opts.samples_per_region; ++s) points.push_back(rng.in_subspace(hyper));
    } else {
      for (std::size_t i = 0; i < d; ++i)
        if (w.region->contains(unit_vector(d, i))) points.push_back(unit_vector(d, i));
      for (std::size_t s = 0; s < opts.samples_per_region; ++s) {
        Vector x = rng.dense(d);
        while (!w.region->contains(x)) x = rng.dense(d);
        points.push_back(std::move(x));
      }
    }
    for (const auto& x : points) {
      if (is_zero(x)) continue;
      const LinearMap wx = w.map(x);
      const MapDefect def = flavor_defect(a, m, wx, flavor);
      if (!def.holds)
        throw InvalidWitness("witness '" + w.label + "' is not a " + to_string(flavor) + " at basis pair (" +
                             std::to_string(def.pair->first) + "," + std::to_string(def.pair->second) + ")");
      if (wx(x) != delta(x)) return false;
    }
  }
  return true;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

RatMatrix hochschild_coboundary(const Algebra& a, const Bimodule& m, const RatMatrix& t, std::size_t n) {
  const std::size_t d = a.dim(), md = m.dim();
  if (n < 1) throw ArgumentError("hochschild_coboundary: n must be >= 1");
  const std::size_t rows_in = ipow(d, n), rows_out = rows_in * d;
  if (t.rows() != rows_in || t.cols() != md) throw AmbientMismatch("hochschild_coboundary: cochain must be d^n x m");
  RatMatrix out(rows_out, md);
  std::vector<std::size_t> dig(n + 1);
  for (std::size_t u = 0; u < rows_out; ++u) {
    for (std::size_t k = n + 1, v = u; k-- > 0; v /= d) dig[k] = v % d;
    auto row_of = [&](std::size_t skip_first, std::size_t skip_last) {
      std::size_t r = 0;
      for (std::size_t k = skip_first; k < n + 1 - skip_last; ++k) r = r * d + dig[k];
      return r;
    };
    Vector acc = m.left_action()[dig[0]].apply(t.row(row_of(1, 0)));
    for (std::size_t j = 0; j < n; ++j) {
      // Merge arguments j and j+1 (zero-based) into their product.
      const Scalar sign = (j % 2 == 0) ? -1 : 1;
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = a.c(dig[j], dig[j + 1], k);
        if (is_zero(c)) continue;
        std::size_t r = 0;
        for (std::size_t q = 0; q < n + 1; ++q) {
          if (q == j + 1) continue;
          r = r * d + (q == j ? k : dig[q]);
        }
        axpy(acc, sign * c, t.row(r));
      }
    }
    const Scalar last = (n % 2 == 0) ? -1 : 1;
    axpy(acc, last, m.right_action()[dig[n]].apply(t.row(row_of(0, 1))));
    for (std::size_t p = 0; p < md; ++p) out(u, p) = acc[p];
  }
  return out;
}

Subspace cocycle_space(const Algebra& a, const Bimodule& m, std::size_t n, std::size_t max_cochain_dim) {
  if (n < 1) throw ArgumentError("cocycle_space: n must be >= 1");
  const std::size_t d = a.dim(), md = m.dim();
  const std::size_t rows_in = ipow(d, n);
  if (rows_in * md > max_cochain_dim)
    throw ResourceError("cocycle_space: cochain space of dimension " + std::to_string(rows_in * md) +
                        " exceeds the bound " + std::to_string(max_cochain_dim));
  const RatMatrix sys = linearize(rows_in * md, rows_in * d * md, [&](const Vector& v) {
    return hochschild_coboundary(a, m, RatMatrix(rows_in, md, v), n).entries();
  });
  return kernel(sys);
}

bool zero_product_preserving_check(const LinearMap& phi, const Algebra& a, const Algebra& b, const SamplerConfig& cfg) {
  const std::size_t d = a.dim();
  if (phi.source_dim() != d || phi.target_dim() != b.dim()) throw AmbientMismatch("map shape differs from dim B x dim A");
  Subspace z;
  if (auto s = structural_zero_span(a)) z = *s;
  else z = zero_product_span(a, cfg, mult_kernel(a)).span;
  std::vector<Vector> img(d);
  for (std::size_t i = 0; i < d; ++i) img[i] = phi(unit_vector(d, i));
  for (const auto& w : z.basis()) {
    Vector acc = zeros(b.dim());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!is_zero(w[i * d + j])) axpy(acc, w[i * d + j], b.multiply(img[i], img[j]));
    if (!is_zero(acc)) return false;
  }
  return true;
}

WeightedHom weighted_hom_factor(const LinearMap& phi, const Algebra& a, const Algebra& b) {
  const std::size_t d = a.dim(), e = b.dim();
  if (phi.source_dim() != d || phi.target_dim() != e) throw AmbientMismatch("map shape differs from dim B x dim A");
  if (!a.is_unital()) throw PreconditionError("weighted_hom_factor: source algebra is not unital");
  if (rank(phi.matrix) != e) throw PreconditionError("weighted_hom_factor: map is not surjective");
  WeightedHom out;
  const Vector w = phi(*a.unit());
  for (std::size_t i = 0; i < e; ++i)
    if (!is_zero(b.commutator(w, unit_vector(e, i)))) {
      out.diagnostic = "phi(1) is not central, so left multiplication by it is not a centralizer";
      return out;
    }
  const RatMatrix W = b.left_mult_matrix(w);
  if (rank(W) != e) {
    out.diagnostic = "left multiplication by phi(1) is not invertible";
    return out;
  }
  const LinearMap psi{inverse(W) * phi.matrix};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (psi(a.basis_product(i, j)) != b.multiply(psi(unit_vector(d, i)), psi(unit_vector(d, j)))) {
        out.diagnostic = "W^-1 phi is not multiplicative on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return out;
      }
  out.W = LinearMap{W};
  out.psi = psi;
  return out;
}

MultiplierBCheck check_theorem_multiplierB(const Algebra& a, const SamplerConfig& cfg) {
  if (!a.is_unital()) throw PreconditionError("check_theorem_multiplierB: algebra is not unital");
  const std::size_t d = a.dim();
  MultiplierBCheck out;
  out.zpd = decide_zpd(a, cfg);
  out.method = out.zpd.span_report.method;
  const Subspace& z = out.zpd.span_report.span;
  const Bimodule dual = dual_bimodule(a, regular_bimodule(a));
  // f(a) . b summed over the tensor, one block of d rows per basis tensor of Z.
  const RatMatrix sys = linearize(d * d, z.dim() * d, [&](const Vector& vec) {
    const LinearMap f = LinearMap::from_vector(d, d, vec);
    Vector out_vec = zeros(z.dim() * d);
    for (std::size_t t = 0; t < z.dim(); ++t) {
      const Vector& w = z.basis()[t];
      Vector acc = zeros(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (!is_zero(w[i * d + j])) axpy(acc, w[i * d + j], dual.right_action()[j].apply(f(unit_vector(d, i))));
      put(out_vec, t * d, acc);
    }
    return out_vec;
  });
  out.f_space = z.dim() == 0 ? Subspace::full(d * d) : kernel(sys);
  out.left_mult_space = multiplier_space(a, dual, Side::left);
  out.equal = out.f_space == out.left_mult_space;
  return out;
}

MapFixture example_fanli1_J2_bimodule() {
  MapFixture fx;
  fx.algebra = jordan_block_algebra(2);
  const Algebra& a = fx.algebra;
  std::vector<RatMatrix> left(2, RatMatrix(2, 2)), right;
  for (std::size_t i = 0; i < 2; ++i) right.push_back(a.right_mult_matrix(unit_vector(2, i)));
  fx.module = Bimodule::make(a, std::move(left), std::move(right));
  fx.delta = LinearMap{RatMatrix{{1, 0}, {0, 2}}};
  fx.flavor = MapFlavor::derivation;
  const Bimodule mod = fx.module;
  const Vector delta_i = unit_vector(2, 0);
  // With zero left action, y -> m . y is a derivation for every m.
  auto right_by = [mod](const Vector& m) {
    RatMatrix r(2, 2);
    for (std::size_t j = 0; j < 2; ++j) r.set_column(j, mod.right_action()[j].apply(m));
    return LinearMap{r};
  };
  fx.witnesses.push_back({Region{unit_vector(2, 0), false},
                          [=](const Vector& x) {
                            return right_by(delta_i + (x[1] / x[0]) * mod.right_action()[1].apply(delta_i));
                          },
                          "m = delta(I) + (l2/l1) delta(I).E12"});
  fx.witnesses.push_back({Region{unit_vector(2, 0), true},
                          [=](const Vector&) { return right_by(Scalar(2) * delta_i); },
                          "m = 2 delta(I)"});
  return fx;
}

namespace {

// x -> [E, x] on a subalgebra of M_n, valued in M_n (row-major coordinates).
LinearMap ambient_commutator(const Algebra& a, const RatMatrix& e) {
  RatMatrix m(e.rows() * e.cols(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const RatMatrix& b = a.basis()[j];
    m.set_column(j, (e * b - b * e).entries());
  }
  return {m};
}

}  // namespace

MapFixture example_fanli1_delta(std::size_t n) {
  if (n < 3) throw ArgumentError("example_fanli1_delta: n must be >= 3");
  MapFixture fx;
  fx.algebra = jordan_block_algebra(n);
  fx.module = ambient_bimodule(fx.algebra);
  fx.flavor = MapFlavor::derivation;
  RatMatrix dm(n * n, n);
  dm(n - 1, 1) = -1;  // lambda_2 contributes -E_1n
  dm(n - 1, 2) = 1;   // lambda_3 contributes +E_1n
  fx.delta = {dm};
  const LinearMap d1 = ambient_commutator(fx.algebra, RatMatrix::unit(n, 0, n - 3));
  const LinearMap d2 = ambient_commutator(fx.algebra, RatMatrix::unit(n, 1, n - 1));
  fx.witnesses.push_back({Region{unit_vector(n, 1), true}, [=](const Vector&) { return d1; }, "[E_1,n-2, .]"});
  fx.witnesses.push_back({Region{unit_vector(n, 1), false},
                          [=](const Vector& x) {
                            LinearMap w = d2;
                            w.matrix *= (x[1] - x[2]) / x[1];
                            return w;
                          },
                          "(l2 - l3)/l2 [E_2n, .]"});
  return fx;
}

MapFixture example_multiplier_delta(std::size_t n) {
  if (n < 3) throw ArgumentError("example_multiplier_delta: n must be >= 3");
  MapFixture fx;
  fx.algebra = jordan_block_algebra(n);
  fx.module = regular_bimodule(fx.algebra);
  fx.flavor = MapFlavor::left_multiplier;
  RatMatrix dm(n, n);
  dm(n - 2, 0) = 1;
  dm(n - 1, 1) = 2;
  fx.delta = {dm};
  const Algebra a = fx.algebra;
  fx.witnesses.push_back({Region{unit_vector(n, 0), false},
                          [=](const Vector& x) {
                            Vector c = unit_vector(n, n - 2);
                            c[n - 1] = x[1] / x[0];
                            return LinearMap{a.left_mult_matrix(c)};
                          },
                          "x -> (D^(n-2) + (l2/l1) D^(n-1)) x"});
  fx.witnesses.push_back({Region{unit_vector(n, 0), true},
                          [=](const Vector&) { return LinearMap{a.left_mult_matrix(Scalar(2) * unit_vector(n, n - 2))}; },
                          "x -> 2 D^(n-2) x"});
  return fx;
}

}  // namespace zpdlab
