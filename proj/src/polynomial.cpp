#include "zpdlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "zpdlab/errors.hpp"

namespace zpdlab {

Polynomial::Polynomial(Vector coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  for (long x : coefficients) c_.emplace_back(x);
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && zpdlab::is_zero(c_.back())) c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(Vector{c}); }

Polynomial Polynomial::monomial(unsigned degree, const Scalar& c) {
  Vector v = zeros(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial(Vector{-root, Scalar(1)}); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = 1 / leading();
  Vector v = c_;
  for (auto& x : v) x *= inv;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  Vector v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RatMatrix Polynomial::evaluate(const RatMatrix& m) const {
  if (!m.is_square()) throw ArgumentError("polynomial evaluated at non-square matrix");
  RatMatrix r(m.rows(), m.cols());
  const RatMatrix id = RatMatrix::identity(m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * m + (*it) * id;
  return r;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& a = c_[i];
    if (zpdlab::is_zero(a)) continue;
    Scalar mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << "-";
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << zpdlab::to_string(mag);
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vector v = zeros(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) v[i] += a.coefficients()[i];
  for (std::size_t i = 0; i < b.coefficients().size(); ++i) v[i] += b.coefficients()[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Polynomial::constant(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  Vector v = zeros(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  return Polynomial(std::move(v));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  Vector r = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  Vector q = zeros(static_cast<std::size_t>(a.degree() - db + 1));
  const Scalar lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Scalar coef = r[static_cast<std::size_t>(i)] * lead_inv;
    if (is_zero(coef)) continue;
    q[static_cast<std::size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= coef * d[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return extended_gcd(a, b).g; }

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Polynomial inv = Polynomial::constant(1 / r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

// Positive divisors of |n| (n != 0).  Trial division up to 10^6; a leftover
// cofactor above that bound is treated as prime.
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> fac;
  for (mpz_class p = 2; p * p <= n && p <= 1000000; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(p, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalFactorization rational_root_factorization(const Polynomial& p) {
  if (p.is_zero()) throw ArgumentError("rational roots of the zero polynomial");
  RationalFactorization out;
  Polynomial rest = p.monic();
  auto take_root = [&](const Scalar& r) {
    unsigned mult = 0;
    const Polynomial lin = Polynomial::linear(r);
    while (rest.degree() >= 1 && is_zero(rest.evaluate(r))) {
      rest = divmod(rest, lin).quotient;
      ++mult;
    }
    if (mult) out.roots.emplace_back(r, mult);
  };
  take_root(Scalar(0));
  if (rest.degree() >= 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coefficients()) lcm_den = lcm(lcm_den, c.get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : rest.coefficients()) ints.push_back(c.get_num() * (lcm_den / c.get_den()));
    const auto ps = divisors(ints.front());
    const auto qs = divisors(ints.back());
    std::vector<Scalar> candidates;
    for (const auto& q : qs)
      for (const auto& num : ps) {
        Scalar r(num, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (rest.degree() < 1) break;
      take_root(r);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.cofactor = rest;
  return out;
}

Polynomial characteristic_polynomial(const RatMatrix& a) {
  if (!a.is_square()) throw ArgumentError("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier.
  const std::size_t n = a.rows();
  Vector c = zeros(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

}  // namespace zpdlab
