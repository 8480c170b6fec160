#include "zpdlab/scalar.hpp"

#include <cctype>

#include "zpdlab/errors.hpp"

namespace zpdlab {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vector zeros(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v[i] = 1;
  return v;
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

void axpy(Vector& a, const Scalar& c, const Vector& b) {
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(b[i])) a[i] += c * b[i];
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, Scalar(1), b);
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  axpy(r, Scalar(-1), b);
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vector kron(const Vector& x, const Vector& y) {
  Vector r(x.size() * y.size(), Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!is_zero(y[j])) r[i * y.size() + j] = x[i] * y[j];
  }
  return r;
}

}  // namespace zpdlab
