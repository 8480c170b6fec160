#include <doctest.h>

#include <random>

#include "zpdlab/linalg.hpp"
#include "zpdlab/polynomial.hpp"

using namespace zpdlab;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("scalars stay reduced with positive denominator") {
  const Scalar a = parse_scalar("-6/4");
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(to_string(a) == "-3/2");
  CHECK(to_string(parse_scalar("10/5")) == "2");
  CHECK(parse_scalar("1/3") + parse_scalar("1/6") == parse_scalar("1/2"));
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("abc"));
}

TEST_CASE("rref of small matrices") {
  const RrefResult id = rref(RatMatrix::identity(2));
  CHECK(id.reduced == RatMatrix::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  CHECK(id.rank == 2);

  const RrefResult dep = rref(RatMatrix{{1, 2}, {2, 4}});
  CHECK(dep.reduced == RatMatrix{{1, 2}, {0, 0}});
  CHECK(dep.rank == 1);

  const RrefResult z = rref(RatMatrix(3, 3));
  CHECK(z.reduced == RatMatrix(3, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("kernels") {
  CHECK(kernel(RatMatrix::identity(3)).dim() == 0);
  const Subspace k = kernel(RatMatrix{{1, -1}});
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(vec({1, 1})));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 5; ++trial) {
    RatMatrix m(4, 6);
    do {
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 6; ++c) m(r, c) = dist(rng);
    } while (rank(m) != 4);
    const Subspace ker = kernel(m);
    CHECK(ker.dim() == 2);
    for (const auto& v : ker.basis()) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("subspace calculus") {
  const Vector e1 = unit_vector(3, 0), e2 = unit_vector(3, 1), e3 = unit_vector(3, 2);
  CHECK(sum(Subspace::span(3, {e1}), Subspace::span(3, {e2})) == Subspace::span(3, {e1, e2}));
  CHECK(intersect(Subspace::span(3, {e1, e2}), Subspace::span(3, {e2, e3})) == Subspace::span(3, {e2}));
  CHECK(is_subset(Subspace::span(3, {e1 + e2}), Subspace::span(3, {e1, e2})));
  CHECK_FALSE(is_subset(Subspace::span(3, {e1 + e3}), Subspace::span(3, {e1, e2})));
  CHECK(contains_vector(Subspace::span(3, {e1, e2}), vec({2, -7, 0})));
}

TEST_CASE("canonical bases do not depend on the spanning set") {
  const Subspace a = Subspace::span(4, {vec({1, 2, 0, 1}), vec({0, 1, 1, 0})});
  const Subspace b = Subspace::span(4, {vec({1, 3, 1, 1}), vec({2, 3, -1, 2}), vec({1, 2, 0, 1})});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    CHECK(a.basis()[r][a.pivots()[r]] == 1);
    for (std::size_t s = 0; s < a.dim(); ++s)
      if (s != r) CHECK(is_zero(a.basis()[s][a.pivots()[r]]));
  }
}

TEST_CASE("annihilator of a subspace") {
  const Subspace s = Subspace::span(3, {vec({1, 1, 0})});
  const Subspace perp = s.annihilator();
  CHECK(perp.dim() == 2);
  for (const auto& f : perp.basis()) CHECK(is_zero(dot(f, vec({1, 1, 0}))));
}

TEST_CASE("inverse and solve") {
  const RatMatrix m{{2, 1}, {1, 1}};
  CHECK(m * inverse(m) == RatMatrix::identity(2));
  CHECK_THROWS(inverse(RatMatrix{{1, 2}, {2, 4}}));
  const auto x = solve(m, vec({3, 2}));
  REQUIRE(x);
  CHECK(*x == vec({1, 1}));
  CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, vec({1, 2})));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{-1, 0, 1};  // t^2 - 1
  const Polynomial q{1, 1};      // t + 1
  const DivMod dm = divmod(p, q);
  CHECK(dm.quotient == Polynomial{-1, 1});
  CHECK(dm.remainder.is_zero());
  CHECK(gcd(p, Polynomial{-1, 1}) == Polynomial{-1, 1});
  CHECK(p.evaluate(Scalar(3)) == 8);
  const auto f = rational_root_factorization(Polynomial{-2, 0, 1} * Polynomial{-3, 1});
  REQUIRE(f.roots.size() == 1);
  CHECK(f.roots[0].first == 3);
  CHECK(f.cofactor == Polynomial{-2, 0, 1});
}
