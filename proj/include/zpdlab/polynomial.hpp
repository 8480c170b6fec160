#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zpdlab/matrix.hpp"

namespace zpdlab {

// Univariate polynomial over Q, coefficients lowest degree first.  The stored
// coefficient list never has a trailing zero; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(unsigned degree, const Scalar& c = 1);
  // t - root
  static Polynomial linear(const Scalar& root);

  const Vector& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  Scalar coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& x) const;
  RatMatrix evaluate(const RatMatrix& m) const;

  std::string to_string(const std::string& var = "t") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  Vector c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned k);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct Bezout {
  Polynomial g, s, t;
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

// Rational roots with multiplicities, plus the cofactor (product of the
// remaining factors, which has no rational root).  Roots ascend.
struct RationalFactorization {
  std::vector<std::pair<Scalar, unsigned>> roots;
  Polynomial cofactor;
};
RationalFactorization rational_root_factorization(const Polynomial& p);

Polynomial characteristic_polynomial(const RatMatrix& m);

}  // namespace zpdlab
