#include "zpdlab/span.hpp"

#include <algorithm>
#include <functional>

#include "zpdlab/errors.hpp"

namespace zpdlab {

std::string to_string(SpanMethod m) { return m == SpanMethod::structural ? "structural" : "sampled"; }

long ElementSampler::integer() {
  const auto width = static_cast<std::uint64_t>(2 * height_ + 1);
  return static_cast<long>(rng_() % width) - height_;
}

long ElementSampler::nonzero_integer() {
  const auto width = static_cast<std::uint64_t>(2 * height_);
  const long v = static_cast<long>(rng_() % width) - height_;
  return v >= 0 ? v + 1 : v;
}

Vector ElementSampler::dense(std::size_t d) {
  Vector v(d);
  do {
    for (auto& x : v) x = integer();
  } while (d > 0 && is_zero(v));
  return v;
}

Vector ElementSampler::sparse(std::size_t d, std::size_t max_support) {
  Vector v = zeros(d);
  if (d == 0) return v;
  const std::size_t support = 1 + index(std::min(d, max_support));
  for (std::size_t s = 0; s < support; ++s) v[index(d)] = nonzero_integer();
  return v;
}

Vector ElementSampler::in_subspace(const Subspace& s) {
  Vector v = zeros(s.ambient_dim());
  if (s.dim() == 0) return v;
  do {
    v = zeros(s.ambient_dim());
    for (const auto& b : s.basis()) axpy(v, Scalar(integer()), b);
  } while (is_zero(v));
  return v;
}

namespace {

// g x g^{-1} with g = 1 + s in the unitization; nullopt when g is singular.
// Inner automorphisms preserve xy = 0, [x, y] = 0 and x^2 = 0, so this moves a
// known point of the variety to a generic point of its orbit.
std::optional<Vector> conjugate(const Algebra& a, const Vector& x, const Vector& s) {
  RatMatrix g = a.left_mult_matrix(s);
  for (std::size_t i = 0; i < a.dim(); ++i) g(i, i) += 1;
  // (1 + s)(1 + t) = 1  <=>  (I + L_s) t = -s.
  auto t = solve(g, Scalar(-1) * s);
  if (!t || rank(g) < a.dim()) return std::nullopt;
  Vector sx = a.multiply(s, x);
  Vector out = x + sx + a.multiply(x, *t) + a.multiply(sx, *t);
  return out;
}

// Incremental rank tracking for sampled spans.  Candidate tensors are reduced
// modulo the prime 2^31 - 1 in row-echelon form; a candidate that is
// independent mod p is independent over Q, so the exact vectors kept here are
// always a basis of a genuine subspace of the span being sampled.
class SpanAccumulator {
 public:
  static constexpr std::uint64_t kPrime = 2147483647ULL;

  explicit SpanAccumulator(std::size_t n) : n_(n), pivot_row_(n, -1) {}

  std::size_t dim() const { return kept_.size(); }
  std::size_t ambient_dim() const { return n_; }

  bool insert(const Vector& v) {
    if (kept_.size() == n_) return false;
    std::vector<std::uint64_t> r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_zero(v[i])) continue;
      const std::uint64_t den = mpz_fdiv_ui(v[i].get_den_mpz_t(), kPrime);
      // A denominator divisible by p cannot be reduced; dropping the
      // candidate keeps the bound sound.
      if (den == 0) return false;
      r[i] = mpz_fdiv_ui(v[i].get_num_mpz_t(), kPrime) * inverse(den) % kPrime;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (r[c] == 0) continue;
      if (pivot_row_[c] < 0) {
        const std::uint64_t inv = inverse(r[c]);
        for (std::size_t j = c; j < n_; ++j)
          if (r[j]) r[j] = r[j] * inv % kPrime;
        pivot_row_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(r));
        kept_.push_back(v);
        return true;
      }
      const auto& row = rows_[static_cast<std::size_t>(pivot_row_[c])];
      const std::uint64_t f = kPrime - r[c];
      for (std::size_t j = c; j < n_; ++j)
        if (row[j]) r[j] = (r[j] + f * row[j]) % kPrime;
    }
    return false;
  }

  void insert_all(const std::vector<Vector>& vs) {
    for (const auto& v : vs) insert(v);
  }

  // Exact canonical span of the kept vectors.  When they fill `upper` the
  // answer is `upper` itself, which avoids a large exact elimination.
  Subspace finish(const std::optional<Subspace>& upper) const {
    if (upper) {
      for (const auto& v : kept_)
        if (!upper->contains(v)) throw ArgumentError("sampled tensor lies outside the supplied upper bound");
      if (kept_.size() == upper->dim()) return *upper;
    }
    return Subspace::span(n_, kept_);
  }

 private:
  static std::uint64_t inverse(std::uint64_t a) {
    std::uint64_t result = 1, base = a % kPrime, e = kPrime - 2;
    while (e) {
      if (e & 1) result = result * base % kPrime;
      base = base * base % kPrime;
      e >>= 1;
    }
    return result;
  }

  std::size_t n_;
  std::vector<long> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<Vector> kept_;
};

// Shared slab-sampling driver.  `slab(x, span, rng, pool)` inserts every
// tensor contributed by the sample x and may push follow-up elements into
// pool (used to chain along the variety).
using SlabFn = std::function<void(const Vector&, SpanAccumulator&, ElementSampler&, std::vector<Vector>&)>;

SpanReport run_sampler(const Algebra& a, const SamplerConfig& cfg, SpanAccumulator span,
                       const std::optional<Subspace>& upper, const SlabFn& slab) {
  const std::size_t d = a.dim();
  if (upper && upper->ambient_dim() != d * d) throw AmbientMismatch("upper bound must live in A (x) A");
  SpanReport rep;
  rep.seed = cfg.seed;
  rep.method = SpanMethod::sampled;
  ElementSampler rng(cfg.seed, cfg.coefficient_height);
  std::vector<Vector> pool;
  auto done = [&] {
    return span.dim() == span.ambient_dim() || (upper && span.dim() >= upper->dim());
  };

  for (std::size_t i = 0; i < d && !done(); ++i) {
    slab(unit_vector(d, i), span, rng, pool);
    ++rep.samples_used;
  }

  // One round is a full cycle through the six sampling strategies.
  constexpr std::size_t kStrategies = 6;
  const std::size_t budget = cfg.sample_budget(d);
  std::size_t stable = 0, k = 0, round_start = span.dim();
  while (d > 0 && !done() && stable < cfg.saturation_rounds && rep.samples_used < budget) {
    Vector x;
    switch (k++ % kStrategies) {
      case 0: x = rng.sparse(d); break;
      case 1: x = rng.dense(d); break;
      case 2: x = a.multiply(rng.sparse(d), rng.dense(d)); break;
      case 3:
        x = pool.empty() ? rng.sparse(d) : pool[rng.index(pool.size())];
        if (pool.size() > 1) x = x + Scalar(rng.integer()) * pool[rng.index(pool.size())];
        break;
      default:
        if (pool.empty()) {
          x = rng.sparse(d);
        } else {
          auto c = conjugate(a, pool[rng.index(pool.size())], rng.dense(d));
          x = c ? *c : rng.sparse(d);
        }
        break;
    }
    if (is_zero(x)) x = rng.sparse(d);
    slab(x, span, rng, pool);
    ++rep.samples_used;
    if (k % kStrategies == 0) {
      stable = span.dim() > round_start ? 0 : stable + 1;
      round_start = span.dim();
    }
    if (pool.size() > 64) pool.erase(pool.begin(), pool.begin() + 32);
  }
  rep.rounds_stable = stable;
  rep.span = span.finish(upper);
  return rep;
}

void insert_slab_left(SpanAccumulator& span, const Vector& x, const Subspace& partners) {
  for (const auto& y : partners.basis()) span.insert(kron(x, y));
}

void insert_slab_right(SpanAccumulator& span, const Subspace& partners, const Vector& y) {
  for (const auto& x : partners.basis()) span.insert(kron(x, y));
}

Subspace two_sided_annihilator(const Algebra& a, const Vector& x) {
  return kernel(stack(a.left_mult_matrix(x), a.right_mult_matrix(x)));
}

}  // namespace

SpanReport zero_product_span(const Algebra& a, const SamplerConfig& cfg, const std::optional<Subspace>& upper) {
  const std::size_t d = a.dim();
  return run_sampler(a, cfg, SpanAccumulator(d * d), upper,
                     [&a](const Vector& x, SpanAccumulator& span, ElementSampler& rng, std::vector<Vector>& pool) {
                       const Subspace right = annihilator(a, x, Side::right);
                       insert_slab_left(span, x, right);
                       const Subspace left_of_x = annihilator(a, x, Side::left);
                       insert_slab_right(span, left_of_x, x);
                       for (const auto& y : right.basis())
                         insert_slab_right(span, annihilator(a, y, Side::left), y);
                       if (right.dim() > 0) {
                         const Vector y = rng.in_subspace(right);
                         insert_slab_right(span, annihilator(a, y, Side::left), y);
                         pool.push_back(y);
                       }
                       if (right.dim() > 0 || left_of_x.dim() > 0) pool.push_back(x);
                       if (left_of_x.dim() > 0) pool.push_back(rng.in_subspace(left_of_x));
                     });
}

Subspace structural_zero_span_commutative_primary(std::size_t k) {
  if (k < 1) throw ArgumentError("block size k must be >= 1");
  Subspace z(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j >= k) z.insert(unit_vector(k * k, tensor_index(k, i, j)));
  return z;
}

std::optional<Subspace> structural_zero_span(const Algebra& a) {
  const std::size_t d = a.dim();
  if (d == 0 || !a.is_commutative() || !a.is_unital()) return std::nullopt;

  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(unit_vector(d, i));
  ElementSampler rng(0x5eed, 7);
  for (int t = 0; t < 8; ++t) candidates.push_back(rng.dense(d));
  std::optional<Vector> generator;
  for (const auto& g : candidates)
    if (static_cast<std::size_t>(minimal_polynomial(a, g).degree()) == d) {
      generator = g;
      break;
    }
  if (!generator) return std::nullopt;

  PrimaryDecomposition pd;
  try {
    pd = primary_decomposition(a, *generator);
  } catch (const UnsupportedField&) {
    return std::nullopt;
  }

  // Block-local basis e_i N_i^p; inside a block xy = 0 iff val(x) + val(y) >= k,
  // and distinct blocks multiply to zero.
  struct Entry {
    std::size_t block;
    unsigned power;
    Vector v;
  };
  std::vector<Entry> local;
  for (std::size_t b = 0; b < pd.blocks.size(); ++b) {
    Vector pw = pd.blocks[b].idempotent.coords;
    for (unsigned p = 0; p < pd.blocks[b].index; ++p) {
      local.push_back({b, p, pw});
      pw = a.multiply(pw, pd.blocks[b].nilpotent.coords);
    }
  }
  Subspace z(d * d);
  for (const auto& x : local)
    for (const auto& y : local) {
      const bool zero_product =
          x.block != y.block || x.power + y.power >= pd.blocks[x.block].index;
      if (zero_product) z.insert(kron(x.v, y.v));
    }
  return z;
}

SpanReport commuting_span(const Algebra& a, const SamplerConfig& cfg, const std::optional<Subspace>& upper) {
  const std::size_t d = a.dim();
  if (a.is_commutative()) {
    SpanReport rep;
    rep.span = Subspace::full(d * d);
    rep.method = SpanMethod::structural;
    rep.seed = cfg.seed;
    return rep;
  }
  SpanAccumulator span(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vector s = zeros(d * d);
      s[tensor_index(d, i, j)] += 1;
      s[tensor_index(d, j, i)] += 1;
      span.insert(s);
    }
  return run_sampler(a, cfg, std::move(span), upper,
                     [&a](const Vector& x, SpanAccumulator& span, ElementSampler& rng, std::vector<Vector>& pool) {
                       const Subspace c = centralizer(a, x);
                       insert_slab_left(span, x, c);
                       const Vector y = rng.in_subspace(c);
                       if (!is_zero(y)) {
                         insert_slab_left(span, y, centralizer(a, y));
                         pool.push_back(y);
                       }
                     });
}

SpanReport two_sided_zero_span(const Algebra& a, const SamplerConfig& cfg, const std::optional<Subspace>& upper) {
  const std::size_t d = a.dim();
  return run_sampler(a, cfg, SpanAccumulator(d * d), upper,
                     [&a](const Vector& x, SpanAccumulator& span, ElementSampler& rng, std::vector<Vector>& pool) {
                       const Subspace both = two_sided_annihilator(a, x);
                       insert_slab_left(span, x, both);
                       insert_slab_right(span, both, x);
                       for (const auto& y : both.basis()) {
                         const Subspace back = two_sided_annihilator(a, y);
                         insert_slab_left(span, y, back);
                         insert_slab_right(span, back, y);
                       }
                       if (both.dim() > 0) {
                         pool.push_back(x);
                         const Vector y = rng.in_subspace(both);
                         const Subspace back = two_sided_annihilator(a, y);
                         insert_slab_left(span, y, back);
                         insert_slab_right(span, back, y);
                         pool.push_back(y);
                       }
                     });
}

namespace {

bool rational_sqrt(const Scalar& q, Scalar& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  root = Scalar(sqrt(n), sqrt(d));
  root.canonicalize();
  return true;
}

// Rational t with (a + t b)^2 = 0, coordinatewise c0 + c1 t + c2 t^2 = 0.
std::vector<Scalar> square_zero_parameters(const Vector& c0, const Vector& c1, const Vector& c2) {
  std::vector<Scalar> candidates;
  for (std::size_t k = 0; k < c0.size(); ++k) {
    if (!is_zero(c2[k])) {
      Scalar disc = c1[k] * c1[k] - 4 * c2[k] * c0[k], r;
      if (!rational_sqrt(disc, r)) return {};
      candidates = {(-c1[k] + r) / (2 * c2[k]), (-c1[k] - r) / (2 * c2[k])};
      break;
    }
    if (!is_zero(c1[k])) {
      candidates = {-c0[k] / c1[k]};
      break;
    }
    if (!is_zero(c0[k])) return {};
  }
  std::vector<Scalar> out;
  for (const auto& t : candidates) {
    bool ok = true;
    for (std::size_t k = 0; k < c0.size() && ok; ++k) ok = is_zero(c0[k] + t * c1[k] + t * t * c2[k]);
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace

SpanReport square_zero_span(const Algebra& a, const SamplerConfig& cfg) {
  const std::size_t d = a.dim();
  SpanReport rep;
  rep.seed = cfg.seed;
  Subspace span(d);
  std::vector<Vector> pool;
  auto add = [&](const Vector& x) {
    if (is_zero(x)) return false;
    pool.push_back(x);
    if (pool.size() > 64) pool.erase(pool.begin(), pool.begin() + 32);
    return span.insert(x);
  };
  for (std::size_t i = 0; i < d; ++i)
    if (is_zero(a.basis_product(i, i))) add(unit_vector(d, i));

  ElementSampler rng(cfg.seed, cfg.coefficient_height);
  auto pick = [&]() -> Vector {
    if (!pool.empty() && rng.index(2) == 0) return pool[rng.index(pool.size())];
    return rng.index(2) == 0 ? unit_vector(d, rng.index(d)) : rng.sparse(d);
  };
  const std::size_t budget = cfg.sample_budget(d);
  std::size_t stable = 0, k = 0;
  while (d > 0 && span.dim() < d && stable < cfg.saturation_rounds && rep.samples_used < budget) {
    const std::size_t before = span.dim();
    if (k++ % 2 == 0 || !a.is_unital() || pool.empty()) {
      // Line through a in direction b meets the square-zero cone.
      const Vector x = pick(), y = pick();
      const Vector c0 = a.multiply(x, x), c1 = a.multiply(x, y) + a.multiply(y, x), c2 = a.multiply(y, y);
      if (is_zero(c0) && is_zero(c1) && is_zero(c2)) {
        add(x);
        add(y);
      } else {
        for (const auto& t : square_zero_parameters(c0, c1, c2)) add(x + t * y);
      }
    } else {
      // Conjugate by u = 1 + s n with n^2 = 0, so u^{-1} = 1 - s n.
      const Vector& n = pool[rng.index(pool.size())];
      const Vector& x = pool[rng.index(pool.size())];
      const Scalar s = rng.nonzero_integer();
      const Vector u = *a.unit() + s * n, u_inv = *a.unit() - s * n;
      add(a.multiply(a.multiply(u, x), u_inv));
    }
    ++rep.samples_used;
    stable = span.dim() > before ? 0 : stable + 1;
  }
  rep.rounds_stable = stable;
  rep.span = std::move(span);
  return rep;
}

}  // namespace zpdlab
