#include "zpdlab/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "zpdlab/errors.hpp"

namespace zpdlab {

namespace {

struct Context {
  const SuiteOptions& opts;
  ScenarioResult& r;
  SamplerConfig cfg;

  void fail(const std::string& what) {
    r.passed = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  // Records a certified verdict on a fixed input.
  void record(const std::string& label, const Certificate& c) {
    if (c.verdict != Verdict::no_uncertified) r.certified.push_back(label + ":" + to_string(c.property) + ":" + to_string(c.verdict));
  }
  void expect_verdict(const std::string& label, const Certificate& c, Verdict want) {
    record(label, c);
    expect(c.verdict == want, label + " " + to_string(c.property) + " gave " + to_string(c.verdict) + ", expected " + to_string(want));
    expect(verify_certificate(c), label + " certificate does not verify");
  }
};

RatMatrix ad_matrix(const Algebra& a, const Vector& x) {
  return linearize(a.dim(), a.dim(), [&](const Vector& y) { return a.commutator(x, y); });
}

// Jordan form with random block sizes and integer eigenvalues, conjugated
// by a random invertible integer matrix.  Returns the matrix and whether all
// blocks have size one.
std::pair<RatMatrix, bool> random_similar(ElementSampler& rng, std::size_t n) {
  std::vector<std::size_t> blocks;
  const bool diagonal = rng.index(2) == 0;
  for (std::size_t left = n; left > 0;) {
    const std::size_t b = diagonal ? 1 : 1 + rng.index(left);
    blocks.push_back(b);
    left -= b;
  }
  if (!diagonal && std::all_of(blocks.begin(), blocks.end(), [](std::size_t b) { return b == 1; })) {
    blocks = {2};
    for (std::size_t i = 2; i < n; ++i) blocks.push_back(1);
  }
  RatMatrix j(n, n);
  std::size_t at = 0;
  for (std::size_t b : blocks) {
    const long lambda = rng.integer();
    for (std::size_t k = 0; k < b; ++k) {
      j(at + k, at + k) = lambda;
      if (k + 1 < b) j(at + k, at + k + 1) = 1;
    }
    at += b;
  }
  RatMatrix s(n, n);
  do {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) = rng.integer();
  } while (rank(s) != n);
  return {s * j * inverse(s), blocks.size() == n};
}

void equivalent(Context& ctx) {
  ElementSampler rng(ctx.opts.seed, 3);
  std::size_t agree = 0, diag = 0;
  for (std::size_t t = 0; t < ctx.opts.trials; ++t) {
    const auto [m, truth] = random_similar(rng, 4);
    diag += truth;
    const bool by_poly = is_diagonalizable(m);
    const Certificate c = decide_zpd(algebra_from_generators({m}, true, "A_T"), ctx.cfg);
    const bool ok = by_poly == truth && c.verdict == (truth ? Verdict::yes : Verdict::no) && verify_certificate(c);
    agree += ok;
    ctx.expect(ok, "trial " + std::to_string(t) + ": jordan form says " + (truth ? "diagonalizable" : "not diagonalizable") +
                       ", zpd verdict " + to_string(c.verdict));
  }
  ctx.r.dims = {{"trials", ctx.opts.trials}, {"diagonalizable", diag}, {"agree", agree}};
}

void jordan_dims(Context& ctx) {
  json dims = json::object();
  for (std::size_t k = 2; k <= 5; ++k) {
    const Algebra a = jordan_block_algebra(k);
    const std::size_t z = structural_zero_span_commutative_primary(k).dim();
    const auto s = structural_zero_span(a);
    const Subspace ker = mult_kernel(a);
    ctx.expect(z == k * (k - 1) / 2, "J" + std::to_string(k) + " structural span has dim " + std::to_string(z));
    ctx.expect(s && s->dim() == z, "J" + std::to_string(k) + " structural detection disagrees");
    ctx.expect(ker.dim() == k * (k - 1), "J" + std::to_string(k) + " ker mu has dim " + std::to_string(ker.dim()));
    const Certificate c = decide_zpd(a, ctx.cfg);
    ctx.expect_verdict(a.name(), c, Verdict::no);
    ctx.expect(c.span_report.method == SpanMethod::structural, a.name() + " span is not structural");
    dims[a.name()] = {{"ker", ker.dim()}, {"span", z}};
  }
  ctx.r.dims = dims;
}

void nest_zpd(Context& ctx) {
  json dims = json::object();
  std::vector<Algebra> family;
  for (std::size_t n = 2; n <= 5; ++n) family.push_back(upper_triangular_algebra(n));
  family.push_back(digraph_algebra(3, {{1, 1}, {2, 2}, {3, 3}, {1, 3}, {2, 3}}));
  family.push_back(full_matrix_algebra(2));
  for (const auto& a : family) {
    const Certificate c = decide_zpd(a, ctx.cfg);
    ctx.expect_verdict(a.name(), c, Verdict::yes);
    dims[a.name()] = {{"ker", c.ker_dim()}, {"span", c.span_dim()}};
  }
  ctx.r.dims = dims;
}

void two_sided(Context& ctx) {
  json dims = json::object();
  for (std::size_t n = 2; n <= 4; ++n) {
    const Algebra a = upper_triangular_algebra(n);
    const Certificate c = decide_two_sided_zpd(a, ctx.cfg);
    ctx.expect_verdict(a.name(), c, Verdict::yes);
    dims[a.name()] = {{"ker", c.ker_dim()}, {"span", c.span_dim()}};
  }
  const Algebra j2 = jordan_block_algebra(2);
  const Certificate c = decide_two_sided_zpd(j2, ctx.cfg);
  ctx.expect_verdict(j2.name(), c, Verdict::no);
  dims[j2.name()] = {{"ker", c.ker_dim()}, {"span", c.span_dim()}};
  ctx.r.dims = dims;
}

void zlpd_family(Context& ctx) {
  const Algebra q2 = matrix_over_commutative(2, Polynomial(Vector{-2, 0, 1}));
  std::vector<Algebra> family = {upper_triangular_algebra(2), upper_triangular_algebra(3), upper_triangular_algebra(4),
                                 full_matrix_algebra(2),      full_matrix_algebra(3),      q2};
  family.push_back(direct_sum(upper_triangular_algebra(2), full_matrix_algebra(2)));
  family.push_back(direct_sum(full_matrix_algebra(2), q2));
  family.push_back(direct_sum(upper_triangular_algebra(3), full_matrix_algebra(3)));
  json dims = json::object();
  for (const auto& a : family) {
    const Certificate c = decide_zlpd(a, ctx.cfg);
    ctx.expect_verdict(a.name(), c, Verdict::yes);
    dims[a.name()] = {{"ker", c.ker_dim()}, {"span", c.span_dim()}};
  }
  ctx.r.dims = dims;
}

void fanli1(Context& ctx) {
  json dims = json::object();
  const LocalCheckOptions lo{ctx.opts.seed, 12, 10};
  for (std::size_t n = 3; n <= 5; ++n) {
    const MapFixture fx = example_fanli1_delta(n);
    const std::string tag = "J" + std::to_string(n);
    ctx.expect(local_witness_check(fx.algebra, fx.module, fx.delta, fx.witnesses, fx.flavor, lo), tag + " local check failed");
    const MapDefect d = derivation_defect(fx.algebra, fx.module, fx.delta);
    ctx.expect(!d.holds, tag + " delta is a derivation");
    ctx.expect(d.pair && *d.pair == std::pair<std::size_t, std::size_t>{1, 1}, tag + " first defect is not at (D, D)");
    ctx.expect(!d.holds && d.defect.size() == n * n && d.defect[n - 1] == 1, tag + " defect is not E_1n");
    dims[tag] = {{"module", fx.module.dim()}, {"witnesses", fx.witnesses.size()}};
  }
  const MapFixture fx = example_fanli1_J2_bimodule();
  ctx.expect(local_witness_check(fx.algebra, fx.module, fx.delta, fx.witnesses, fx.flavor, lo), "J2 local check failed");
  ctx.expect(!derivation_defect(fx.algebra, fx.module, fx.delta).holds, "J2 delta is a derivation");
  dims["J2"] = {{"module", fx.module.dim()}, {"witnesses", fx.witnesses.size()}};
  ctx.r.dims = dims;
}

void multiplier_example(Context& ctx) {
  json dims = json::object();
  const LocalCheckOptions lo{ctx.opts.seed, 12, 10};
  for (std::size_t n = 3; n <= 5; ++n) {
    const MapFixture fx = example_multiplier_delta(n);
    const std::string tag = "J" + std::to_string(n);
    ctx.expect(local_witness_check(fx.algebra, fx.module, fx.delta, fx.witnesses, fx.flavor, lo), tag + " local check failed");
    const MapDefect d = multiplier_defect(fx.algebra, fx.module, fx.delta, Side::left);
    ctx.expect(!d.holds, tag + " delta is a left multiplier");
    dims[tag] = {{"module", fx.module.dim()}, {"witnesses", fx.witnesses.size()}};
  }
  ctx.r.dims = dims;
}

void multiplier_b(Context& ctx) {
  json dims = json::object();
  for (const auto& a : {full_matrix_algebra(2), upper_triangular_algebra(2), upper_triangular_algebra(3),
                        jordan_block_algebra(2), jordan_block_algebra(3)}) {
    const MultiplierBCheck m = check_theorem_multiplierB(a, ctx.cfg);
    ctx.record(a.name(), m.zpd);
    const bool zpd = m.zpd.verdict == Verdict::yes;
    ctx.expect(m.zpd.verdict != Verdict::no_uncertified, a.name() + " zpd verdict is uncertified");
    ctx.expect(m.equal == zpd, a.name() + (zpd ? " is zpd but F != left multipliers" : " is not zpd but F == left multipliers"));
    ctx.r.certified.push_back(a.name() + ":multiplierB:" + (m.equal ? "equal" : "proper"));
    dims[a.name()] = {{"F", m.f_space.dim()}, {"left_multipliers", m.left_mult_space.dim()}};
  }
  ctx.r.dims = dims;
}

void strongone(Context& ctx) {
  json dims = json::object();
  for (const auto& a : {full_matrix_algebra(2), upper_triangular_algebra(3), jordan_block_algebra(3)}) {
    const MultiplierAlgebra m = multiplier_algebra(a);
    ctx.expect(m.embedding_homomorphism, a.name() + " embedding is not multiplicative");
    ctx.expect(m.embedding_bijective && m.algebra.dim() == a.dim(), a.name() + " embedding is not onto M(A)");
    dims[a.name()] = m.algebra.dim();
  }
  bool raised = false;
  try {
    multiplier_algebra(strictly_upper_triangular_algebra(3));
  } catch (const FaithfulnessError&) {
    raised = true;
  }
  ctx.expect(raised, "N3 did not raise a faithfulness error");
  dims["N3"] = "not faithful";
  ctx.r.dims = dims;
}

void square_zero(Context& ctx) {
  json dims = json::object();
  for (std::size_t n = 2; n <= 5; ++n) {
    const Algebra a = upper_triangular_algebra(n);
    const Subspace comm = commutator_span(a);
    const SpanReport sq = square_zero_span(a, ctx.cfg);
    ctx.expect(comm.dim() == n * (n - 1) / 2, a.name() + " commutator span has dim " + std::to_string(comm.dim()));
    ctx.expect(comm.is_subset_of(sq.span), a.name() + " commutators are not spanned by square-zero elements");
    dims[a.name()] = {{"commutator", comm.dim()}, {"square_zero", sq.span.dim()}};
  }
  ctx.r.dims = dims;
}

void hochschild(Context& ctx) {
  ElementSampler rng(ctx.opts.seed, 5);
  json dims = json::object();
  for (const auto& a : {upper_triangular_algebra(2), jordan_block_algebra(3)}) {
    const Bimodule m = regular_bimodule(a);
    const std::size_t d = a.dim();
    for (int t = 0; t < 10; ++t) {
      RatMatrix c(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) c(r, k) = rng.integer();
      const RatMatrix dd = hochschild_coboundary(a, m, hochschild_coboundary(a, m, c, 1), 2);
      ctx.expect(dd.is_zero(), a.name() + " coboundary does not square to zero");
    }
    const Subspace z1 = cocycle_space(a, m, 1), der = derivation_space(a, m);
    ctx.expect(z1 == der, a.name() + " 1-cocycles differ from derivations");
    dims[a.name()] = {{"cocycles1", z1.dim()}, {"derivations", der.dim()}};
  }
  ctx.r.dims = dims;
}

void propositions(Context& ctx) {
  json dims = json::object();
  const Algebra t2 = upper_triangular_algebra(2);
  const Vector e11 = t2.coordinates(RatMatrix::unit(2, 0, 0)), e12 = t2.coordinates(RatMatrix::unit(2, 0, 1));

  const Algebra ch = character_product_algebra(t2, LinearFunctional{e11});
  ctx.expect_verdict("char(T2)", decide_zpd(ch, ctx.cfg), Verdict::yes);
  dims["char(T2)"] = ch.dim();

  const GraphAlgebra gh = graph_algebra(t2, t2, LinearMap::identity(t2.dim()), GraphFlavor::hom);
  ctx.expect(gh.projection_isomorphism, "graph of id is not isomorphic to T2");
  ctx.expect_verdict("graph_hom(T2)", decide_zpd(gh.algebra, ctx.cfg), Verdict::yes);
  dims["graph_hom(T2)"] = gh.algebra.dim();

  const GraphAlgebra gd = graph_algebra(t2, t2, LinearMap{ad_matrix(t2, e12)}, GraphFlavor::der);
  ctx.expect(gd.projection_isomorphism, "graph of ad E12 is not isomorphic to T2");
  ctx.expect_verdict("graph_der(T2)", decide_zpd(gd.algebra, ctx.cfg), Verdict::yes);
  dims["graph_der(T2)"] = gd.algebra.dim();

  const Compression cp = compression_algebra(upper_triangular_algebra(3), RatMatrix::unit(3, 0, 0) + RatMatrix::unit(3, 1, 1),
                                             RatMatrix::unit(3, 0, 0));
  ctx.expect(cp.phi_multiplicative, "compression map is not multiplicative");
  ctx.expect_verdict("compression(T3)", decide_zpd(cp.algebra, ctx.cfg), Verdict::yes);
  dims["compression(T3)"] = cp.algebra.dim();
  ctx.r.dims = dims;
}

void weighted_hom(Context& ctx) {
  const Algebra m2 = full_matrix_algebra(2);
  const RatMatrix s{{1, 1}, {0, 1}}, si = inverse(s);
  const LinearMap conj{linearize(4, 4, [&](const Vector& x) { return m2.coordinates(s * m2.to_matrix(x) * si); })};
  const LinearMap phi{Scalar(3) * conj.matrix};
  ctx.expect(zero_product_preserving_check(phi, m2, m2, ctx.cfg), "3 Ad_S does not preserve zero products");
  const WeightedHom w = weighted_hom_factor(phi, m2, m2);
  ctx.expect(w.ok(), "no weighted factorization: " + w.diagnostic);
  if (w.ok()) {
    ctx.expect(w.W->matrix == Scalar(3) * RatMatrix::identity(4), "weight is not 3");
    ctx.expect(*w.psi == conj, "homomorphism part is not Ad_S");
  }
  // The transpose map preserves zero products on neither side.
  const LinearMap tr{linearize(4, 4, [&](const Vector& x) { return m2.coordinates(m2.to_matrix(x).transpose()); })};
  ctx.expect(!zero_product_preserving_check(tr, m2, m2, ctx.cfg), "transpose preserves zero products");
  ctx.r.dims = {{"M2", m2.dim()}};
}

void uhf(Context& ctx) {
  const auto tower = uhf_tower({1, 2, 4, 8});
  json dims = json::array();
  for (const auto& l : tower) dims.push_back(l.algebra.dim());
  // sigma_{r,p} = sigma_{r,q} sigma_{q,p}
  for (std::size_t i = 0; i + 2 < tower.size(); ++i) {
    const LinearMap direct = refinement_embedding(tower[i].p, tower[i + 2].p);
    const LinearMap via = compose(*tower[i + 2].embedding_from_prev, *tower[i + 1].embedding_from_prev);
    ctx.expect(direct == via, "refinement maps do not compose at level " + std::to_string(i));
  }
  const Algebra& top = tower.back().algebra;
  const std::size_t d = top.dim();
  ElementSampler rng(ctx.opts.seed, 4);
  for (int t = 0; t < 5; ++t) {
    const Vector tau = rng.dense(d);
    RatMatrix phi(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) phi(i, k) = dot(tau, top.commutator(unit_vector(d, i), unit_vector(d, k)));
    const TowerConsistency tc = tower_factor_consistency(tower, BilinearForm{phi}, ctx.cfg);
    ctx.expect(tc.consistent, "form " + std::to_string(t) + ": " + tc.detail);
  }
  ctx.r.dims = {{"levels", dims}, {"forms", 5}};
}

struct Scenario {
  const char* name;
  const char* anchor;
  std::function<void(Context&)> run;
};

const std::vector<Scenario>& scenarios() {
  static const std::vector<Scenario> all = {
      {"equivalent", "A_T is zpd iff T is diagonalizable", equivalent},
      {"jordan_dims", "Q[t]/(t^k) is not zpd for k >= 2, dim Z = k(k-1)/2", jordan_dims},
      {"nest_zpd", "nest and digraph algebras are zpd", nest_zpd},
      {"two_sided", "T_n is two-sided zpd, Q[t]/(t^2) is not", two_sided},
      {"zlpd_family", "T_n, M_n, M_n(B) and direct sums are zLpd", zlpd_family},
      {"fanli1", "a local derivation on J_n that is not a derivation", fanli1},
      {"multiplier_example", "a local left multiplier on J_n that is not a left multiplier", multiplier_example},
      {"multiplierB", "f(a).b = 0 on zero products forces a left multiplier iff zpd", multiplier_b},
      {"strongone", "M(A) = A for unital A, faithfulness is required", strongone},
      {"square_zero", "[T_n, T_n] is spanned by square-zero elements", square_zero},
      {"hochschild", "coboundaries square to zero and 1-cocycles are derivations", hochschild},
      {"propositions", "character product, graph and compression algebras stay zpd", propositions},
      {"weighted_hom", "a zero product preserving bijection is a weighted homomorphism", weighted_hom},
      {"uhf", "factoring functionals agree along the triangular refinement tower", uhf},
  };
  return all;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> out;
  for (const auto& s : scenarios()) out.push_back(s.name);
  return out;
}

std::vector<ScenarioResult> run_suite(const SuiteOptions& opts) {
  if (opts.only) {
    const auto names = scenario_names();
    if (std::find(names.begin(), names.end(), *opts.only) == names.end())
      throw ArgumentError("unknown scenario '" + *opts.only + "'");
  }
  std::vector<ScenarioResult> out;
  for (const auto& s : scenarios()) {
    if (opts.only && *opts.only != s.name) continue;
    ScenarioResult r;
    r.name = s.name;
    r.anchor = s.anchor;
    r.seed = opts.seed;
    r.passed = true;
    SamplerConfig cfg;
    cfg.seed = opts.seed;
    Context ctx{opts, r, cfg};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      s.run(ctx);
    } catch (const std::exception& e) {
      ctx.fail(std::string("error: ") + e.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

json scenario_to_json(const ScenarioResult& r) {
  json out{{"schema_version", kSchemaVersion}, {"scenario", r.name},  {"anchor", r.anchor},
           {"verdict", r.passed ? "pass" : "fail"}, {"dims", r.dims}, {"seed", r.seed},
           {"elapsed_ms", static_cast<long long>(r.elapsed_ms)}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  out["certified"] = r.certified;
  return out;
}

json suite_to_json(const std::vector<ScenarioResult>& results, const SuiteOptions& opts) {
  json list = json::array();
  bool all = true;
  for (const auto& r : results) {
    list.push_back(scenario_to_json(r));
    all = all && r.passed;
  }
  return json{{"schema_version", kSchemaVersion}, {"seed", opts.seed}, {"passed", all}, {"scenarios", list}};
}

std::string suite_table(const std::vector<ScenarioResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    for (std::size_t i = r.name.size(); i < 20; ++i) os << ' ';
    os << r.anchor << "  " << static_cast<long long>(r.elapsed_ms) << " ms\n";
    os << "     dims " << r.dims.dump() << "\n";
    if (!r.detail.empty()) os << "     " << r.detail << "\n";
  }
  return os.str();
}

}  // namespace zpdlab
