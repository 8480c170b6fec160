// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "zpdlab/errors.hpp"
#include "zpdlab/suite.hpp"

using namespace zpdlab;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      else note.str("");
      ok = false;
      note << what;
    }
  }
};

Scalar fraction(long num, long den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> dist(-3, 3);
  RatMatrix s(n, n);
  do {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) = dist(rng);
  } while (rank(s) != n);
  return s;
}

// Block sizes are the oracle: T is diagonalizable iff every block has size 1.
void c1_equivalent(Outcome& o) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> eig(-4, 4);
  const std::vector<std::vector<std::size_t>> shapes = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  std::size_t agree = 0;
  for (int t = 0; t < 20; ++t) {
    const auto& shape = shapes[t % 2 == 0 ? 0 : 1 + (t / 2) % 4];
    RatMatrix j(4, 4);
    std::size_t at = 0;
    for (std::size_t b : shape) {
      const Scalar lambda = fraction(eig(rng), 1 + static_cast<long>(rng() % 3));
      for (std::size_t k = 0; k < b; ++k) {
        j(at + k, at + k) = lambda;
        if (k + 1 < b) j(at + k, at + k + 1) = 1;
      }
      at += b;
    }
    const RatMatrix s = random_invertible(rng, 4);
    const RatMatrix m = s * j * inverse(s);
    const bool truth = shape.size() == 4;
    const Certificate c = decide_zpd(algebra_from_generators({m}, true, "A_T"));
    const bool ok = is_diagonalizable(m) == truth && (c.verdict == Verdict::yes) == truth &&
                    c.verdict != Verdict::no_uncertified && verify_certificate(c);
    agree += ok;
  }
  o.require(agree == 20, std::to_string(agree) + "/20 agree");
  if (o.ok) o.note << "20/20 agree";
}

void c2_jordan_dims(Outcome& o) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const Algebra a = jordan_block_algebra(k);
    const Certificate c = decide_zpd(a);
    const std::string tag = "k=" + std::to_string(k);
    o.require(c.span_report.method == SpanMethod::structural, tag + " not structural");
    o.require(c.span_dim() == k * (k - 1) / 2, tag + " dim Z = " + std::to_string(c.span_dim()));
    o.require(c.ker_dim() == k * (k - 1), tag + " dim ker = " + std::to_string(c.ker_dim()));
    o.require(c.verdict == Verdict::no && verify_certificate(c), tag + " not a certified no");
  }
  if (o.ok) o.note << "dims (1,2) (3,6) (6,12) (10,20), certified no";
}

void c3_nest(Outcome& o) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Certificate c = decide_zpd(upper_triangular_algebra(n));
    o.require(c.verdict == Verdict::yes && verify_certificate(c), "T" + std::to_string(n) + " zpd " + to_string(c.verdict));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    const Certificate c = decide_two_sided_zpd(upper_triangular_algebra(n));
    o.require(c.verdict == Verdict::yes && verify_certificate(c), "T" + std::to_string(n) + " two-sided " + to_string(c.verdict));
  }
  if (o.ok) o.note << "T2..T5 zpd, T2..T4 two-sided zpd";
}

void c4_zlpd(Outcome& o) {
  const Algebra q = matrix_over_commutative(2, Polynomial{-2, 0, 1});
  std::vector<Algebra> base = {upper_triangular_algebra(2), upper_triangular_algebra(3), upper_triangular_algebra(4),
                               full_matrix_algebra(2),      full_matrix_algebra(3),      q};
  std::vector<Algebra> all = base;
  const std::vector<Algebra> small = {base[0], base[1], base[3], q};
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) all.push_back(direct_sum(small[i], small[j]));
  all.push_back(direct_sum(direct_sum(base[0], base[3]), q));
  all.push_back(direct_sum(base[2], base[4]));
  for (const auto& a : all) {
    const Certificate c = decide_zlpd(a);
    o.require(c.verdict == Verdict::yes && verify_certificate(c), a.name() + " zlpd " + to_string(c.verdict));
  }
  if (o.ok) o.note << all.size() << " algebras zLpd";
}

void c5_fanli1(Outcome& o) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const MapFixture fx = example_fanli1_delta(n);
    const std::string tag = "n=" + std::to_string(n);
    o.require(local_witness_check(fx.algebra, fx.module, fx.delta, fx.witnesses, fx.flavor), tag + " local check");
    const MapDefect d = derivation_defect(fx.algebra, fx.module, fx.delta);
    o.require(!d.holds && d.pair && *d.pair == std::pair<std::size_t, std::size_t>{1, 1}, tag + " defect pair");
    // recompute delta(D^2) - D delta(D) - delta(D) D on the ambient matrices
    const RatMatrix dn = nilpotent_generator(n);
    const RatMatrix dd(n, n, fx.delta(unit_vector(n, 1)));
    const RatMatrix defect = RatMatrix(n, n, fx.delta(unit_vector(n, 2))) - dn * dd - dd * dn;
    o.require(defect(0, n - 1) == 1 && !d.holds && d.defect[n - 1] == 1, tag + " (1,n) entry is not 1");
  }
  if (o.ok) o.note << "n=3..5 local, not a derivation, (1,n) entry 1";
}

void c6_multiplier(Outcome& o) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const MapFixture fx = example_multiplier_delta(n);
    const std::string tag = "n=" + std::to_string(n);
    o.require(local_witness_check(fx.algebra, fx.module, fx.delta, fx.witnesses, fx.flavor), tag + " local check");
    o.require(!multiplier_defect(fx.algebra, fx.module, fx.delta, Side::left).holds, tag + " is a left multiplier");
  }
  if (o.ok) o.note << "n=3..5 local, not a left multiplier";
}

void c7_multiplier_b(Outcome& o) {
  std::size_t agree = 0;
  for (const auto& a : {full_matrix_algebra(2), upper_triangular_algebra(2), upper_triangular_algebra(3),
                        jordan_block_algebra(2), jordan_block_algebra(3)}) {
    const MultiplierBCheck m = check_theorem_multiplierB(a);
    const bool ok = m.zpd.verdict != Verdict::no_uncertified && m.equal == (m.zpd.verdict == Verdict::yes);
    agree += ok;
    o.require(ok, a.name() + " disagrees");
  }
  if (o.ok) o.note << agree << "/5 agree";
}

void c8_strongone(Outcome& o) {
  for (const auto& a : {full_matrix_algebra(2), upper_triangular_algebra(3), jordan_block_algebra(3)}) {
    const MultiplierAlgebra m = multiplier_algebra(a);
    o.require(m.algebra.dim() == a.dim() && m.embedding_homomorphism && m.embedding_bijective, a.name() + " not onto M(A)");
  }
  bool raised = false;
  try {
    multiplier_algebra(strictly_upper_triangular_algebra(3));
  } catch (const FaithfulnessError&) {
    raised = true;
  }
  o.require(raised, "N3 accepted");
  if (o.ok) o.note << "M2, T3, J3 bijective; N3 rejected";
}

void c9_square_zero(Outcome& o) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Algebra a = upper_triangular_algebra(n);
    const Subspace comm = commutator_span(a);
    o.require(comm.dim() == n * (n - 1) / 2, "T" + std::to_string(n) + " commutator dim");
    o.require(comm.is_subset_of(square_zero_span(a, {}).span), "T" + std::to_string(n) + " not contained");
  }
  if (o.ok) o.note << "T2..T5 contained, dims 1 3 6 10";
}

void c10_hochschild(Outcome& o) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (const auto& a : {upper_triangular_algebra(2), jordan_block_algebra(3)}) {
    const Bimodule m = regular_bimodule(a);
    const std::size_t d = a.dim();
    for (int t = 0; t < 10; ++t) {
      RatMatrix c(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) c(i, k) = fraction(dist(rng), 1 + static_cast<long>(rng() % 4));
      o.require(hochschild_coboundary(a, m, hochschild_coboundary(a, m, c, 1), 2).is_zero(), a.name() + " d2 d1 != 0");
    }
    o.require(cocycle_space(a, m, 1) == derivation_space(a, m), a.name() + " Z1 != Der");
  }
  if (o.ok) o.note << "20 cochains, Z1 = Der on T2 and J3";
}

void c11_propositions(Outcome& o) {
  const Algebra t2 = upper_triangular_algebra(2);
  const Vector e11 = t2.coordinates(RatMatrix::unit(2, 0, 0)), e12 = t2.coordinates(RatMatrix::unit(2, 0, 1));
  o.require(decide_zpd(character_product_algebra(t2, LinearFunctional{e11})).verdict == Verdict::yes, "character product");
  o.require(decide_zpd(graph_algebra(t2, t2, LinearMap::identity(3), GraphFlavor::hom).algebra).verdict == Verdict::yes,
            "hom graph");
  const LinearMap ad{linearize(3, 3, [&](const Vector& y) { return t2.commutator(e12, y); })};
  o.require(decide_zpd(graph_algebra(t2, t2, ad, GraphFlavor::der).algebra).verdict == Verdict::yes, "der graph");

  const Algebra t3 = upper_triangular_algebra(3);
  const RatMatrix p = RatMatrix::unit(3, 0, 0) + RatMatrix::unit(3, 1, 1), q = RatMatrix::unit(3, 0, 0);
  const Compression c = compression_algebra(t3, p, q);
  // recheck multiplicativity directly: (P-Q) xy (P-Q) = (P-Q) x (P-Q) y (P-Q)
  const RatMatrix e = p - q;
  bool mult = true;
  for (const auto& x : t3.basis())
    for (const auto& y : t3.basis()) mult = mult && e * x * y * e == e * x * e * y * e;
  o.require(c.phi_multiplicative && mult, "compression not multiplicative");
  if (o.ok) o.note << "character, hom and der graphs zpd; compression multiplicative";
}

void c12_uhf(Outcome& o) {
  const auto tower = uhf_tower({1, 2, 4, 8});
  for (std::size_t i = 0; i < tower.size(); ++i)
    for (std::size_t j = i + 1; j < tower.size(); ++j)
      for (std::size_t k = j + 1; k < tower.size(); ++k)
        o.require(refinement_embedding(tower[i].p, tower[k].p) ==
                      compose(refinement_embedding(tower[j].p, tower[k].p), refinement_embedding(tower[i].p, tower[j].p)),
                  "sigma does not compose");
  const Algebra& top = tower.back().algebra;
  const std::size_t d = top.dim();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int t = 0; t < 5; ++t) {
    Vector tau(d);
    for (auto& x : tau) x = dist(rng);
    RatMatrix phi(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) phi(i, k) = dot(tau, top.commutator(unit_vector(d, i), unit_vector(d, k)));
    const TowerConsistency tc = tower_factor_consistency(tower, BilinearForm{phi});
    o.require(tc.consistent, "form " + std::to_string(t) + ": " + tc.detail);
  }
  if (o.ok) o.note << "5/5 forms consistent, sigma functorial";
}

void c13_determinism(Outcome& o) {
  std::set<std::string> verdicts[2];
  const std::uint64_t seeds[2] = {0, 99};
  for (int s = 0; s < 2; ++s) {
    SuiteOptions opts;
    opts.seed = seeds[s];
    for (const auto& r : run_suite(opts)) {
      o.require(r.passed, "seed " + std::to_string(seeds[s]) + " " + r.name + ": " + r.detail);
      for (const auto& v : r.certified) verdicts[s].insert(r.name + "/" + v);
    }
  }
  o.require(verdicts[0] == verdicts[1], "certified verdicts differ between seeds");
  o.require(!verdicts[0].empty(), "no certified verdicts recorded");
  if (o.ok) o.note << "suite passes with seeds 0 and 99, " << verdicts[0].size() << " certified verdicts identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"diagonalizability sweep", c1_equivalent},
      {"Jordan block dims", c2_jordan_dims},
      {"nest algebras", c3_nest},
      {"zLpd family", c4_zlpd},
      {"local derivation example", c5_fanli1},
      {"local multiplier example", c6_multiplier},
      {"zero-product multipliers", c7_multiplier_b},
      {"multiplier algebras", c8_strongone},
      {"square-zero span", c9_square_zero},
      {"Hochschild complex", c10_hochschild},
      {"character/graph/compression", c11_propositions},
      {"UHF tower", c12_uhf},
      {"determinism", c13_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first << ": "
              << o.note.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
