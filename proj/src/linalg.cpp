#include "zpdlab/linalg.hpp"

#include <algorithm>
#include <string>

#include "zpdlab/errors.hpp"

namespace zpdlab {

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, {}, 0};
  RatMatrix& a = out.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(a(r, j))) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(unit_vector(n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(ambient_dim);
  return row_space(RatMatrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const RatMatrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_)
    throw AmbientMismatch("vector length " + std::to_string(v.size()) + " vs ambient " +
                          std::to_string(ambient_));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (!zpdlab::is_zero(c)) axpy(v, -Scalar(c), basis_[i]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return zpdlab::is_zero(reduce(v)); }

bool Subspace::insert(const Vector& v) {
  Vector w = reduce(v);
  std::size_t q = 0;
  while (q < w.size() && zpdlab::is_zero(w[q])) ++q;
  if (q == w.size()) return false;
  const Scalar inv = 1 / w[q];
  for (auto& x : w)
    if (!zpdlab::is_zero(x)) x *= inv;
  for (auto& row : basis_)
    if (!zpdlab::is_zero(row[q])) axpy(row, -Scalar(row[q]), w);
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), q) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, q);
  basis_.insert(basis_.begin() + pos, std::move(w));
  return true;
}

std::size_t Subspace::insert_all(const std::vector<Vector>& vs) {
  std::size_t added = 0;
  for (const auto& v : vs)
    if (dim() < ambient_ && insert(v)) ++added;
  return added;
}

bool Subspace::is_subset_of(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw AmbientMismatch("subspace ambient dimensions differ");
  if (dim() > other.dim()) return false;
  for (const auto& v : basis_)
    if (!other.contains(v)) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return full(ambient_);
  return kernel(basis_matrix());
}

Subspace kernel(const RatMatrix& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(n, f);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum: ambient dimensions differ");
  Subspace s = a.dim() >= b.dim() ? a : b;
  s.insert_all(a.dim() >= b.dim() ? b.basis() : a.basis());
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw AmbientMismatch("intersect: ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  std::vector<Vector> constraints = a.annihilator().basis();
  const Subspace bann = b.annihilator();
  constraints.insert(constraints.end(), bann.basis().begin(), bann.basis().end());
  if (constraints.empty()) return Subspace::full(n);
  return kernel(RatMatrix::from_rows(constraints, n));
}

bool is_subset(const Subspace& a, const Subspace& b) { return a.is_subset_of(b); }

bool contains_vector(const Subspace& a, const Vector& v) { return a.contains(v); }

bool equals(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("equals: ambient dimensions differ");
  return a == b;
}

std::optional<Vector> solve(const RatMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw AmbientMismatch("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  Vector x = zeros(n);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, n);
  return x;
}

}  // namespace zpdlab
