#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zpdlab/construct.hpp"
#include "zpdlab/errors.hpp"
#include "zpdlab/io.hpp"
#include "zpdlab/suite.hpp"

namespace fs = std::filesystem;
using namespace zpdlab;

namespace {

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2, kNo = 3, kNoUncertified = 4 };

struct Source {
  std::string construct;
  std::string file;
};

struct RunConfig {
  SamplerConfig sampler;
  std::size_t max_samples = 0;  // 0 = default budget
  std::string output = "json";
  std::string cache_dir;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* c = cmd->add_option("--construct", src.construct, "constructor expression, e.g. jordan:3 or tensor:(matrix:2,triangular:2)");
  auto* f = cmd->add_option("--file", src.file, "algebra JSON file");
  c->excludes(f);
}

void add_run_config(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--seed", rc.sampler.seed, "sampler seed");
  cmd->add_option("--saturation-rounds", rc.sampler.saturation_rounds, "rounds without growth before stopping")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-samples", rc.max_samples, "sample budget (default 64 d)");
  cmd->add_option("--height", rc.sampler.coefficient_height, "coefficient height for random elements")->check(CLI::PositiveNumber);
  cmd->add_option("--output", rc.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--cache-dir", rc.cache_dir, "result cache directory (ZPDLAB_CACHE overrides)");
}

Algebra load(const Source& src) {
  if (!src.construct.empty()) return construct(src.construct);
  if (src.file.empty()) throw ArgumentError("one of --construct or --file is required");
  std::ifstream in(src.file);
  if (!in) throw ArgumentError("cannot read '" + src.file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(src.file + ": " + e.what());
  }
  return algebra_from_json(j);
}

std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string cache_dir(const RunConfig& rc) {
  if (const char* env = std::getenv("ZPDLAB_CACHE"); env && *env) return env;
  return rc.cache_dir;
}

// Returns the cached payload, or computes, stores and returns it.
template <class F>
std::string cached(const RunConfig& rc, const std::string& key_material, F&& compute) {
  const std::string dir = cache_dir(rc);
  if (dir.empty()) return compute();
  const fs::path path = fs::path(dir) / (fnv1a_hex(key_material) + ".json");
  if (std::ifstream in(path, std::ios::binary); in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::string payload = compute();
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(path, std::ios::binary);
  if (out) out << payload;
  else std::cerr << "warning: cannot write cache entry " << path << "\n";
  return payload;
}

std::string key_for(const std::string& command, const Algebra& a, const std::string& what, const RunConfig& rc) {
  return command + "\n" + algebra_to_json(a).dump() + "\n" + what + "\n" + sampler_to_json(rc.sampler).dump();
}

void print_table(const json& j, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      std::cout << indent << k << "\n";
      print_table(v, indent + "  ");
      continue;
    }
    const std::size_t used = indent.size() + k.size();
    std::cout << indent << k << std::string(used < 26 ? 27 - used : 1, ' ')
              << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void emit(const std::string& payload, const RunConfig& rc) {
  if (rc.output == "json") {
    std::cout << payload << "\n";
    return;
  }
  json j = json::parse(payload);
  j.erase("witness");
  j.erase("basis");
  print_table(j);
}

int cmd_analyze(const Source& src, const std::string& property, RunConfig rc) {
  if (rc.max_samples) rc.sampler.max_samples = rc.max_samples;
  const Algebra a = load(src);
  const std::string payload = cached(rc, key_for("analyze", a, property, rc), [&] {
    Certificate c;
    if (property == "zpd") c = decide_zpd(a, rc.sampler);
    else if (property == "zlpd") c = decide_zlpd(a, rc.sampler);
    else c = decide_two_sided_zpd(a, rc.sampler);
    json j = certificate_to_json(c);
    j["algebra"] = a.name();
    j["dim"] = a.dim();
    return j.dump(2);
  });
  emit(payload, rc);
  const std::string verdict = json::parse(payload).at("verdict").get<std::string>();
  return verdict == "yes" ? kOk : verdict == "no" ? kNo : kNoUncertified;
}

json space_report(const Algebra& a, const std::string& space, const RunConfig& rc, bool with_basis) {
  json j{{"schema_version", kSchemaVersion}, {"algebra", a.name()}, {"algebra_dim", a.dim()}, {"space", space}};
  Subspace s;
  if (space == "der") {
    s = derivation_space(a, regular_bimodule(a));
  } else if (space == "inner") {
    s = inner_derivation_space(a, regular_bimodule(a));
  } else if (space == "multipliers") {
    const Bimodule m = regular_bimodule(a);
    s = multiplier_space(a, m, Side::left);
    j["right_dim"] = multiplier_space(a, m, Side::right).dim();
  } else if (space == "multiplier_algebra") {
    const MultiplierAlgebra m = multiplier_algebra(a);
    j["dim"] = m.algebra.dim();
    j["embedding_homomorphism"] = m.embedding_homomorphism;
    j["iso_to_A"] = m.embedding_homomorphism && m.embedding_bijective;
    if (with_basis) j["basis"] = algebra_to_json(m.algebra)["basis"];
    return j;
  } else if (space.rfind("cocycle:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(space.substr(8));
    } catch (const std::exception&) {
      throw ParseError("cocycle order must be a positive integer, got '" + space.substr(8) + "'");
    }
    if (n == 0) throw ParseError("cocycle order must be >= 1");
    s = cocycle_space(a, regular_bimodule(a), n);
  } else if (space == "square_zero") {
    const SpanReport r = square_zero_span(a, rc.sampler);
    s = r.span;
    j["method"] = to_string(r.method);
  } else if (space == "commutator") {
    s = commutator_span(a);
    j["contained_in_square_zero"] = s.is_subset_of(square_zero_span(a, rc.sampler).span);
  } else {
    throw ArgumentError("unknown space '" + space + "'");
  }
  j["dim"] = s.dim();
  j["ambient_dim"] = s.ambient_dim();
  if (with_basis) j["basis"] = subspace_to_json(s)["basis"];
  return j;
}

int cmd_spaces(const Source& src, const std::string& space, RunConfig rc, bool with_basis) {
  if (rc.max_samples) rc.sampler.max_samples = rc.max_samples;
  const Algebra a = load(src);
  const std::string what = space + (with_basis ? "+basis" : "");
  emit(cached(rc, key_for("spaces", a, what, rc), [&] { return space_report(a, space, rc, with_basis).dump(2); }), rc);
  return kOk;
}

int cmd_suite(const SuiteOptions& opts, const std::string& output) {
  const auto results = run_suite(opts);
  if (output == "json") std::cout << suite_to_json(results, opts).dump(2) << "\n";
  else std::cout << suite_table(results);
  for (const auto& r : results)
    if (!r.passed) return kFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact zero product determinacy checks for finite-dimensional algebras over Q"};
  app.require_subcommand(1);

  Source src;
  RunConfig rc;
  std::string property = "zpd";
  auto* analyze = app.add_subcommand("analyze", "decide zpd, zlpd or two-sided zpd and print a certificate");
  add_source(analyze, src);
  add_run_config(analyze, rc);
  analyze->add_option("--property", property, "zpd, zlpd or two_sided_zpd")->check(CLI::IsMember({"zpd", "zlpd", "two_sided_zpd"}));

  std::string space;
  bool with_basis = false;
  auto* spaces = app.add_subcommand("spaces", "dimension report for derivation, multiplier and related spaces");
  add_source(spaces, src);
  add_run_config(spaces, rc);
  spaces->add_option("--space", space, "der, inner, multipliers, multiplier_algebra, cocycle:n, square_zero, commutator")->required();
  spaces->add_flag("--basis", with_basis, "include a basis dump");

  SuiteOptions suite;
  std::string only, suite_output = "table";
  auto* paper_suite = app.add_subcommand("paper-suite", "run the regression scenario list");
  paper_suite->add_option("--seed", suite.seed, "seed for random trials and samplers");
  paper_suite->add_option("--only", only, "run a single scenario");
  paper_suite->add_option("--trials", suite.trials, "trials for the diagonalizability sweep");
  paper_suite->add_option("--output", suite_output, "json or table")->check(CLI::IsMember({"json", "table"}));
  paper_suite->add_flag_callback("--list", [] {
    for (const auto& n : scenario_names()) std::cout << n << "\n";
    std::exit(kOk);
  }, "list scenario names");

  std::string expr;
  auto* build = app.add_subcommand("construct", "print the algebra JSON for a constructor expression");
  build->add_option("expression", expr, "constructor expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(src, property, rc);
    if (*spaces) return cmd_spaces(src, space, rc, with_basis);
    if (*paper_suite) {
      if (!only.empty()) suite.only = only;
      return cmd_suite(suite, suite_output);
    }
    if (*build) {
      std::cout << algebra_to_json(construct(expr)).dump(2) << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kInvalid;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const AmbientMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
