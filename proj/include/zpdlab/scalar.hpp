#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zpdlab {

// Exact rational.  GMP keeps every result in lowest terms with a positive
// denominator, so equality of Scalars is equality of rationals.
using Scalar = mpq_class;

// Dense coordinate vector.
using Vector = std::vector<Scalar>;

// Accepts "p", "-p", "p/q".  Throws ParseError on malformed input or q == 0.
Scalar parse_scalar(std::string_view text);

// "p" when the denominator is 1, else "p/q".
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

bool is_zero(const Vector& v);

Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Scalar dot(const Vector& a, const Vector& b);

// a + c*b, in place on a.
void axpy(Vector& a, const Scalar& c, const Vector& b);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

// Kronecker product of coordinate vectors: (x (x) y)[i*|y| + j] = x_i y_j.
Vector kron(const Vector& x, const Vector& y);

}  // namespace zpdlab
