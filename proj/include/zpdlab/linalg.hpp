#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zpdlab/matrix.hpp"

namespace zpdlab {

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row-echelon form.  Pivot = first nonzero entry in column order;
// fractions are reduced after every elimination step.
RrefResult rref(const RatMatrix& m);

// A linear subspace of Q^n stored by its canonical reduced row-echelon basis.
// Two subspaces are equal as sets iff their stored bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  // Row space of m.
  static Subspace row_space(const RatMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  RatMatrix basis_matrix() const { return RatMatrix::from_rows(basis_, ambient_); }

  bool contains(const Vector& v) const;
  // Residual of v after elimination against the basis; zero iff v is contained.
  Vector reduce(Vector v) const;
  // Inserts v keeping canonical form.  Returns true iff the dimension grew.
  bool insert(const Vector& v);
  // Inserts each vector; returns the number of new dimensions.
  std::size_t insert_all(const std::vector<Vector>& vs);

  bool is_subset_of(const Subspace& other) const;
  // Covectors f with f.v = 0 for all v in this subspace.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

// {v : m v = 0}.
Subspace kernel(const RatMatrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool is_subset(const Subspace& a, const Subspace& b);
bool contains_vector(const Subspace& a, const Vector& v);
bool equals(const Subspace& a, const Subspace& b);

// A solution x of m x = rhs with every free variable set to zero, or nullopt
// when the system is inconsistent.
std::optional<Vector> solve(const RatMatrix& m, const Vector& rhs);

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

// Builds the matrix of a linear map Q^n_in -> Q^n_out from its action on unit
// vectors.  Column u is f(e_u).
template <typename F>
RatMatrix linearize(std::size_t n_in, std::size_t n_out, F&& f) {
  RatMatrix m(n_out, n_in);
  for (std::size_t u = 0; u < n_in; ++u) m.set_column(u, f(unit_vector(n_in, u)));
  return m;
}

}  // namespace zpdlab
