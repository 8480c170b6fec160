#include "zpdlab/construct.hpp"

#include <charconv>
#include <vector>

#include "zpdlab/constructions.hpp"
#include "zpdlab/errors.hpp"

namespace zpdlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

// Splits on sep at parenthesis depth zero.
std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')' in '" + std::string(s) + "'");
    } else if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string_view unwrap(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("expected a parenthesized argument, got '" + std::string(s) + "'");
  return s.substr(1, s.size() - 2);
}

Polynomial parse_coefficients(std::string_view s) {
  Vector c;
  for (auto part : split(s, ',')) c.push_back(parse_scalar(part));
  Polynomial p(std::move(c));
  if (p.degree() < 1) throw ParseError("polynomial must have degree >= 1");
  return p;
}

}  // namespace

Algebra construct(std::string_view spec) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  const std::string head(trim(spec.substr(0, colon)));
  if (colon == std::string_view::npos) throw ParseError("constructor '" + head + "' needs ':' and arguments");
  const std::string_view arg = trim(spec.substr(colon + 1));

  if (head == "jordan") return jordan_block_algebra(parse_count(arg));
  if (head == "triangular") return upper_triangular_algebra(parse_count(arg));
  if (head == "strict") return strictly_upper_triangular_algebra(parse_count(arg));
  if (head == "matrix") return full_matrix_algebra(parse_count(arg));
  if (head == "diagonal") {
    const std::size_t n = parse_count(arg);
    std::vector<std::pair<std::size_t, std::size_t>> eq;
    for (std::size_t i = 1; i <= n; ++i) eq.push_back({i, i});
    return digraph_algebra(n, eq).renamed("Q^" + std::to_string(n));
  }
  if (head == "companion") return companion_algebra(parse_coefficients(arg));
  if (head == "mat_over") {
    const auto parts = split(arg, ';');
    if (parts.size() != 2) throw ParseError("mat_over expects 'n;c0,c1,...'");
    return matrix_over_commutative(parse_count(parts[0]), parse_coefficients(parts[1]));
  }
  if (head == "digraph") {
    const auto parts = split(arg, ';');
    if (parts.size() != 2) throw ParseError("digraph expects 'n;i-j,i-j,...'");
    std::vector<std::pair<std::size_t, std::size_t>> rho;
    for (auto pair : split(parts[1], ',')) {
      const auto dash = pair.find('-');
      if (dash == std::string_view::npos) throw ParseError("digraph pair must be 'i-j', got '" + std::string(pair) + "'");
      rho.push_back({parse_count(pair.substr(0, dash)), parse_count(pair.substr(dash + 1))});
    }
    return digraph_algebra(parse_count(parts[0]), rho);
  }
  if (head == "uhf") {
    std::vector<std::size_t> ps;
    for (auto p : split(arg, ',')) ps.push_back(parse_count(p));
    return uhf_tower(ps).back().algebra;
  }
  if (head == "tensor" || head == "sum") {
    const auto parts = split(unwrap(arg), ',');
    if (parts.size() != 2) throw ParseError(head + " expects two arguments");
    const Algebra a = construct(parts[0]), b = construct(parts[1]);
    return head == "tensor" ? tensor_product(a, b) : direct_sum(a, b);
  }
  if (head == "unitization") return unitization(construct(unwrap(arg)));
  if (head == "char_product") {
    const Algebra a = construct(unwrap(arg));
    Vector chi(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) chi[i] = a.basis()[i](0, 0);
    return character_product_algebra(a, LinearFunctional{chi});
  }
  throw ParseError("unknown constructor '" + head + "'");
}

}  // namespace zpdlab
