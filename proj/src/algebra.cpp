#include "zpdlab/algebra.hpp"

#include <string>

#include "zpdlab/errors.hpp"

namespace zpdlab {

namespace {

const Vector& vec(const RatMatrix& m) { return m.entries(); }

}  // namespace

Algebra Algebra::from_basis(std::string name, std::vector<RatMatrix> basis, std::size_t ambient_n) {
  Algebra a;
  a.name_ = std::move(name);
  a.dim_ = basis.size();
  a.ambient_n_ = basis.empty() ? ambient_n : basis.front().rows();
  for (const auto& b : basis)
    if (!b.is_square() || b.rows() != a.ambient_n_)
      throw ValidationError("basis matrices of '" + a.name_ + "' must be square of equal size");
  a.basis_ = std::move(basis);

  const std::size_t d = a.dim_, nn = a.ambient_n_ * a.ambient_n_;
  if (d > 0) {
    std::vector<Vector> rows;
    for (const auto& b : a.basis_) rows.push_back(vec(b));
    RrefResult r = rref(RatMatrix::from_rows(rows, nn));
    if (r.rank != d) throw ValidationError("basis of '" + a.name_ + "' is linearly dependent");
    a.coord_rows_ = r.pivots;
    RatMatrix minor(d, d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t i = 0; i < d; ++i) minor(p, i) = a.basis_[i].entries()[a.coord_rows_[p]];
    a.coord_inverse_ = inverse(minor);
  }

  a.constants_ = zeros(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = a.try_coordinates(a.basis_[i] * a.basis_[j]);
      if (!coords)
        throw ValidationError("basis of '" + a.name_ + "' is not multiplicatively closed (product " +
                              std::to_string(i) + "*" + std::to_string(j) + ")");
      for (std::size_t k = 0; k < d; ++k) a.constants_[(i * d + j) * d + k] = (*coords)[k];
    }
  a.finish();
  return a;
}

Algebra Algebra::from_structure_constants(std::string name, std::size_t dim, Vector constants) {
  const std::size_t d = dim;
  if (constants.size() != d * d * d)
    throw ValidationError("structure constant table of '" + name + "' has wrong size");
  Algebra abstract;
  abstract.name_ = name;
  abstract.dim_ = d;
  abstract.constants_ = constants;
  if (!abstract.check_associativity())
    throw ValidationError("structure constants of '" + name + "' are not associative");

  // Regular representation of the unitization: b_i -> [[L_i, e_i], [0, 0]].
  std::vector<RatMatrix> mats;
  for (std::size_t i = 0; i < d; ++i) {
    RatMatrix m(d + 1, d + 1);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m(k, j) = abstract.c(i, j, k);
    m(i, d) = 1;
    mats.push_back(std::move(m));
  }
  Algebra a = from_basis(std::move(name), std::move(mats), d + 1);
  if (a.constants_ != constants)
    throw ValidationError("structure constants of '" + a.name_ + "' are inconsistent");
  return a;
}

void Algebra::finish() {
  const std::size_t d = dim_;
  commutative_ = true;
  for (std::size_t i = 0; i < d && commutative_; ++i)
    for (std::size_t j = i + 1; j < d && commutative_; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (c(i, j, k) != c(j, i, k)) {
          commutative_ = false;
          break;
        }

  unit_.reset();
  if (d == 0) return;
  // e b_i = b_i and b_i e = b_i: 2 d^2 equations in the d unknown coordinates of e.
  RatMatrix sys(2 * d * d, d);
  Vector rhs = zeros(2 * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      const std::size_t r1 = i * d + l, r2 = d * d + i * d + l;
      for (std::size_t k = 0; k < d; ++k) {
        sys(r1, k) = c(k, i, l);
        sys(r2, k) = c(i, k, l);
      }
      rhs[r1] = rhs[r2] = (i == l) ? 1 : 0;
    }
  unit_ = solve(sys, rhs);
}

Algebra Algebra::renamed(std::string name) const {
  Algebra a = *this;
  a.name_ = std::move(name);
  return a;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw AmbientMismatch("element length != algebra dim");
  Vector out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (zpdlab::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (zpdlab::is_zero(y[j])) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!zpdlab::is_zero(c(i, j, k))) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

Vector Algebra::commutator(const Vector& x, const Vector& y) const {
  return multiply(x, y) - multiply(y, x);
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  return Vector(constants_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
                constants_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_));
}

RatMatrix Algebra::to_matrix(const Vector& coords) const {
  if (coords.size() != dim_) throw AmbientMismatch("element length != algebra dim");
  RatMatrix m(ambient_n_, ambient_n_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!zpdlab::is_zero(coords[i])) m += coords[i] * basis_[i];
  return m;
}

std::optional<Vector> Algebra::try_coordinates(const RatMatrix& m) const {
  if (m.rows() != ambient_n_ || m.cols() != ambient_n_)
    throw AmbientMismatch("matrix size does not match ambient size of '" + name_ + "'");
  if (dim_ == 0) return m.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
  Vector picked(dim_);
  for (std::size_t p = 0; p < dim_; ++p) picked[p] = m.entries()[coord_rows_[p]];
  Vector coords = coord_inverse_.apply(picked);
  if (!(to_matrix(coords) == m)) return std::nullopt;
  return coords;
}

Vector Algebra::coordinates(const RatMatrix& m) const {
  auto c = try_coordinates(m);
  if (!c) throw ArgumentError("matrix does not lie in algebra '" + name_ + "'");
  return *c;
}

RatMatrix Algebra::left_mult_matrix(const Vector& x) const {
  RatMatrix l(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (zpdlab::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!zpdlab::is_zero(c(i, j, k))) l(k, j) += x[i] * c(i, j, k);
  }
  return l;
}

RatMatrix Algebra::right_mult_matrix(const Vector& x) const {
  RatMatrix r(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (zpdlab::is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!zpdlab::is_zero(c(j, i, k))) r(k, j) += x[i] * c(j, i, k);
  }
  return r;
}

bool Algebra::check_associativity() const {
  const std::size_t d = dim_;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            lhs += c(i, j, m) * c(m, k, l);
            rhs += c(j, k, m) * c(i, m, l);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

bool Algebra::check_closure() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!(basis_[i] * basis_[j] == to_matrix(basis_product(i, j)))) return false;
  return true;
}

Algebra algebra_from_generators(const std::vector<RatMatrix>& gens, bool include_unit, std::string name) {
  std::size_t n = gens.empty() ? 1 : gens.front().rows();
  for (const auto& g : gens)
    if (!g.is_square() || g.rows() != n) throw ArgumentError("generators must be square of equal size");
  Subspace span(n * n);
  std::vector<RatMatrix> basis;
  auto add = [&](const RatMatrix& m) {
    if (span.insert(m.entries())) basis.push_back(m);
  };
  if (include_unit) add(RatMatrix::identity(n));
  for (const auto& g : gens) add(g);
  std::size_t processed = 0;
  while (true) {
    const std::size_t size = basis.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        if (std::max(i, j) >= processed) add(basis[i] * basis[j]);
    processed = size;
    if (basis.size() == size) break;
  }
  return Algebra::from_basis(std::move(name), std::move(basis), n);
}

namespace {

// First linear dependence among the given vector sequence, as a monic
// polynomial; next(k) yields the k-th vector.
template <typename Next>
Polynomial first_dependence(std::size_t length, std::size_t max_degree, Next next) {
  std::vector<Vector> cols;
  Subspace span(length);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Vector v = next(k);
    if (span.contains(v)) {
      cols.push_back(v);
      Subspace ker = kernel(RatMatrix::from_columns(cols, length));
      Vector coeffs = ker.basis().front();
      return Polynomial(std::move(coeffs)).monic();
    }
    span.insert(v);
    cols.push_back(std::move(v));
  }
  throw Error("no linear dependence found among powers");
}

}  // namespace

Polynomial minimal_polynomial(const RatMatrix& t) {
  if (!t.is_square()) throw ArgumentError("minimal polynomial of non-square matrix");
  const std::size_t n = t.rows();
  RatMatrix p = RatMatrix::identity(n);
  return first_dependence(n * n, n * n, [&](std::size_t k) {
    if (k > 0) p = p * t;
    return p.entries();
  });
}

Polynomial minimal_polynomial(const Algebra& a, const Vector& x) {
  const std::size_t d = a.dim();
  if (a.is_unital()) {
    Vector p = *a.unit();
    return first_dependence(d, d, [&](std::size_t k) {
      if (k > 0) p = a.multiply(p, x);
      return p;
    });
  }
  // Work in the unitization: slot d carries the adjoined unit.
  Vector p = zeros(d);
  return first_dependence(d + 1, d + 1, [&](std::size_t k) {
    Vector v = zeros(d + 1);
    if (k == 0) {
      v[d] = 1;
    } else {
      p = k == 1 ? x : a.multiply(p, x);
      std::copy(p.begin(), p.end(), v.begin());
    }
    return v;
  });
}

Vector evaluate(const Algebra& a, const Polynomial& p, const Vector& x) {
  const auto& cs = p.coefficients();
  Vector out = zeros(a.dim());
  if (cs.empty()) return out;
  if (!is_zero(cs[0])) {
    if (!a.is_unital()) throw ArgumentError("constant term needs a unit in '" + a.name() + "'");
    axpy(out, cs[0], *a.unit());
  }
  Vector pw = x;
  for (std::size_t k = 1; k < cs.size(); ++k) {
    if (k > 1) pw = a.multiply(pw, x);
    axpy(out, cs[k], pw);
  }
  return out;
}

Diagonalizability diagonalizability(const RatMatrix& t) {
  Diagonalizability out;
  out.minimal = minimal_polynomial(t);
  out.split = rational_root_factorization(out.minimal).cofactor.degree() == 0;
  out.diagonalizable = gcd(out.minimal, out.minimal.derivative()).degree() == 0;
  return out;
}

PrimaryDecomposition primary_decomposition(const Algebra& a, const Vector& x) {
  if (!a.is_unital()) throw ArgumentError("primary decomposition needs a unital algebra");
  const Polynomial m = minimal_polynomial(a, x);
  if (static_cast<std::size_t>(m.degree()) != a.dim())
    throw ArgumentError("element does not generate '" + a.name() + "'");
  RationalFactorization f = rational_root_factorization(m);
  if (f.cofactor.degree() > 0)
    throw UnsupportedField("spectrum does not split over Q: factor " + f.cofactor.to_string() +
                           " has no rational root");
  PrimaryDecomposition out{a, {}};
  for (const auto& [lambda, k] : f.roots) {
    const Polynomial fk = pow(Polynomial::linear(lambda), k);
    const Polynomial q = divmod(m, fk).quotient;
    const Bezout bz = extended_gcd(q, fk);
    const Polynomial p = divmod(bz.s * q, m).remainder;
    Vector e = evaluate(a, p, x);
    Vector shifted = x;
    axpy(shifted, -lambda, *a.unit());
    Vector nil = a.multiply(shifted, e);

    std::vector<RatMatrix> mats;
    Vector pw = e;
    for (unsigned j = 0; j < k; ++j) {
      mats.push_back(a.to_matrix(pw));
      pw = a.multiply(pw, nil);
    }
    PrimaryBlock block{lambda, k,
                       Algebra::from_basis(a.name() + "[" + to_string(lambda) + "]", std::move(mats)),
                       AlgebraElement{e}, AlgebraElement{nil}};
    out.blocks.push_back(std::move(block));
  }
  return out;
}

PrimaryDecomposition primary_decomposition(const RatMatrix& t) {
  Algebra at = algebra_from_generators({t}, true, "A_T");
  return primary_decomposition(at, at.coordinates(t));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.ambient_n(), m = b.ambient_n();
  std::vector<RatMatrix> mats;
  for (const auto& x : a.basis()) mats.push_back(block_diagonal(x, RatMatrix(m, m)));
  for (const auto& y : b.basis()) mats.push_back(block_diagonal(RatMatrix(n, n), y));
  return Algebra::from_basis(a.name() + "+" + b.name(), std::move(mats));
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
  std::vector<RatMatrix> mats;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) mats.push_back(kron(x, y));
  return Algebra::from_basis(a.name() + "(x)" + b.name(), std::move(mats));
}

Algebra unitization(const Algebra& a) {
  const std::size_t d = a.dim(), e = d + 1;
  Vector c = zeros(e * e * e);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * e + j) * e + k]; };
  for (std::size_t j = 0; j < e; ++j) {
    at(0, j, j) = 1;
    at(j, 0, j) = 1;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) at(i + 1, j + 1, k + 1) = a.c(i, j, k);
  return Algebra::from_structure_constants(a.name() + "^+", e, std::move(c));
}

Subspace squared_span(const Algebra& a) {
  Subspace s(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s.insert(a.basis_product(i, j));
  return s;
}

Subspace commutator_span(const Algebra& a) {
  Subspace s(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) s.insert(a.basis_product(i, j) - a.basis_product(j, i));
  return s;
}

Subspace annihilator(const Algebra& a, const Vector& x, Side side) {
  return kernel(side == Side::right ? a.left_mult_matrix(x) : a.right_mult_matrix(x));
}

Subspace centralizer(const Algebra& a, const Vector& x) {
  return kernel(a.left_mult_matrix(x) - a.right_mult_matrix(x));
}

bool is_faithful(const Algebra& a) {
  const std::size_t d = a.dim();
  if (d == 0) return true;
  // a -> (a b_1, ..., a b_d, b_1 a, ..., b_d a) must be injective.
  RatMatrix stacked(2 * d * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const RatMatrix r = a.right_mult_matrix(unit_vector(d, j));
    const RatMatrix l = a.left_mult_matrix(unit_vector(d, j));
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        stacked(j * d + p, q) = r(p, q);
        stacked(d * d + j * d + p, q) = l(p, q);
      }
  }
  return rank(stacked) == d;
}

}  // namespace zpdlab
