#pragma once

// The Landen map with indeterminate coefficients: each new coefficient as an
// integer polynomial in a_0..a_p (variables 0..p) and b_0..b_{p-2}
// (variables p+1..2p-1). Generated once per (p, m), cached as text.

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "landen/errors.hpp"
#include "landen/landen.hpp"
#include "landen/multipoly.hpp"

namespace landen {

inline constexpr std::size_t kDefaultMaxTerms = 2'000'000;

struct LandenMap {
  int p = 0;
  int m = 0;
  std::vector<MultiPoly> h;  // h_0..h_p, denominator, descending
  std::vector<MultiPoly> d;  // d_0..d_{p-2}, numerator, descending
  /// Common integer content removed from every formula; the raw pipeline
  /// output is scale * formula.
  Integer scale = 1;

  std::size_t arity() const { return static_cast<std::size_t>(2 * p); }
  friend bool operator==(const LandenMap&, const LandenMap&) = default;
};

inline MultiPoly coefficient_variable_a(int i) { return MultiPoly::variable(static_cast<std::size_t>(i)); }
inline MultiPoly coefficient_variable_b(int p, int j) {
  return MultiPoly::variable(static_cast<std::size_t>(p + 1 + j));
}

namespace detail {

inline std::size_t term_count(const Polynomial<MultiPoly>& poly) {
  std::size_t n = 0;
  for (const auto& c : poly.coeffs()) n += c.size();
  return n;
}

inline void check_budget(const Polynomial<MultiPoly>& poly, std::size_t max_terms, const char* stage, int p, int m) {
  if (std::size_t n = term_count(poly); n > max_terms) {
    throw Error(ErrorCode::kResourceLimit, std::string(stage) + " has " + std::to_string(n) +
                                               " terms, above the limit of " + std::to_string(max_terms) +
                                               " for p=" + std::to_string(p) + " m=" + std::to_string(m));
  }
}

}  // namespace detail

/// Runs Steps 1-7 on the generic rational function of degree p.
inline PipelineStages<MultiPoly> generate_stages(int p, int m, std::size_t max_terms = kDefaultMaxTerms) {
  PipelineStages<MultiPoly> st;
  st.dims = PipelineDims::make(p, m);
  std::vector<MultiPoly> a, b;
  for (int i = 0; i <= p; ++i) a.push_back(coefficient_variable_a(i));
  for (int j = 0; j <= p - 2; ++j) b.push_back(coefficient_variable_b(p, j));
  const Polynomial<MultiPoly> A(std::move(a));
  const Polynomial<MultiPoly> B(std::move(b));
  const CotangentPair pair = build_cotangent(m);

  st.H = step1_H(A, m);
  detail::check_budget(st.H, max_terms, "H", p, m);
  st.E = step2_E(st.H, pair, st.dims);
  detail::check_budget(st.E, max_terms, "E", p, m);
  st.Z = step3_Z(st.E, A);
  detail::check_budget(st.Z, max_terms, "Z", p, m);
  st.C = step4_C(B, st.Z);
  detail::check_budget(st.C, max_terms, "C", p, m);
  st.J = step7_J(st.C.padded(st.dims.s), st.dims);
  detail::check_budget(st.J, max_terms, "J", p, m);
  return st;
}

inline LandenMap generate(int p, int m, std::size_t max_terms = kDefaultMaxTerms) {
  PipelineStages<MultiPoly> st = generate_stages(p, m, max_terms);
  LandenMap map{p, m, st.H.padded(p), st.J.padded(p - 2), Integer(1)};
  Integer content = 0;
  for (const auto& f : map.h) content = gcd(content, f.content());
  for (const auto& f : map.d) content = gcd(content, f.content());
  if (content > 1) {
    const MultiPoly divisor(content);
    for (auto& f : map.h) f = exact_div(f, divisor);
    for (auto& f : map.d) f = exact_div(f, divisor);
    map.scale = content;
  }
  return map;
}

/// Evaluates every formula at coeffs = (a_0..a_p, b_0..b_{p-2}) and returns
/// (h_0..h_p, d_0..d_{p-2}) including the shared scale, i.e. exactly the
/// unnormalized pipeline output.
template <CommutativeRing S>
std::vector<S> apply(const LandenMap& map, const std::vector<S>& coeffs) {
  if (coeffs.size() != map.arity()) {
    throw Error(ErrorCode::kArityMismatch, "map for p=" + std::to_string(map.p) + " takes " +
                                               std::to_string(map.arity()) + " coefficients, got " +
                                               std::to_string(coeffs.size()));
  }
  const S scale = scalar_cast<S>(map.scale);
  std::vector<S> out;
  out.reserve(map.arity());
  for (const auto& f : map.h) out.push_back(f.evaluate(coeffs) * scale);
  for (const auto& f : map.d) out.push_back(f.evaluate(coeffs) * scale);
  return out;
}

inline std::string formula_name(const LandenMap& map, std::size_t index) {
  const auto hp = static_cast<std::size_t>(map.p) + 1;
  return index < hp ? "h" + std::to_string(index) : "d" + std::to_string(index - hp);
}

// Text format, one formula per line:
//
//   landen-map v1 p=<p> m=<m>
//   scale <integer>
//   h0 <terms> <coef>:<e_0>,...,<e_{2p-1}> ...
//   ...
//   d<p-2> ...
//
// Terms are listed in ascending lexicographic order of exponent vectors.
inline void save(const LandenMap& map, std::ostream& out) {
  out << "landen-map v1 p=" << map.p << " m=" << map.m << "\n";
  out << "scale " << map.scale.str() << "\n";
  const std::size_t arity = map.arity();
  auto write = [&](const std::string& name, const MultiPoly& f) {
    out << name << " " << f.size();
    for (const auto& [e, c] : f.terms()) {
      out << " " << c.str() << ":";
      for (std::size_t i = 0; i < arity; ++i) {
        if (i > 0) out << ",";
        out << (i < e.size() ? e[i] : 0);
      }
    }
    out << "\n";
  };
  for (std::size_t i = 0; i < map.h.size(); ++i) write("h" + std::to_string(i), map.h[i]);
  for (std::size_t i = 0; i < map.d.size(); ++i) write("d" + std::to_string(i), map.d[i]);
}

namespace detail {

[[noreturn]] inline void format_error(const std::string& what) { throw Error(ErrorCode::kFormatError, what); }

inline Integer parse_integer_token(const std::string& token) {
  std::size_t start = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (start == token.size()) format_error("empty integer");
  for (std::size_t i = start; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') format_error("bad integer '" + token + "'");
  }
  return Integer(token[0] == '+' ? token.substr(1) : token);
}

inline int parse_header_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) format_error("expected " + key + "=<n>, got '" + token + "'");
  Integer v = parse_integer_token(token.substr(key.size() + 1));
  if (v < 0 || v > 10000) format_error("header value out of range: " + token);
  return v.convert_to<int>();
}

}  // namespace detail

inline LandenMap load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) detail::format_error("empty map file");
  std::istringstream header(line);
  std::string magic, version, p_field, m_field;
  header >> magic >> version >> p_field >> m_field;
  if (magic != "landen-map") detail::format_error("not a landen map file");
  if (version != "v1") throw Error(ErrorCode::kVersionMismatch, "unsupported map version '" + version + "'");
  LandenMap map;
  map.p = detail::parse_header_field(p_field, "p");
  map.m = detail::parse_header_field(m_field, "m");
  try {
    PipelineDims::make(map.p, map.m);
  } catch (const Error& e) {
    detail::format_error(std::string("invalid header: ") + e.what());
  }

  if (!std::getline(in, line)) detail::format_error("missing scale line");
  {
    std::istringstream scale_line(line);
    std::string key, value, extra;
    scale_line >> key >> value;
    if (key != "scale" || value.empty() || (scale_line >> extra)) detail::format_error("bad scale line");
    map.scale = detail::parse_integer_token(value);
    if (map.scale == 0) detail::format_error("zero scale");
  }

  const std::size_t arity = map.arity();
  const std::size_t formulas = arity;
  for (std::size_t index = 0; index < formulas; ++index) {
    if (!std::getline(in, line)) detail::format_error("truncated file: missing " + formula_name(map, index));
    std::istringstream row(line);
    std::string name, count_token;
    row >> name >> count_token;
    if (name != formula_name(map, index)) {
      detail::format_error("expected formula " + formula_name(map, index) + ", got '" + name + "'");
    }
    Integer count = detail::parse_integer_token(count_token);
    MultiPoly f;
    std::string token;
    Integer seen = 0;
    while (row >> token) {
      auto colon = token.find(':');
      if (colon == std::string::npos) detail::format_error("bad term '" + token + "'");
      Integer coef = detail::parse_integer_token(token.substr(0, colon));
      if (coef == 0) detail::format_error("zero coefficient in " + name);
      Exponents e;
      std::istringstream exps(token.substr(colon + 1));
      std::string piece;
      while (std::getline(exps, piece, ',')) {
        Integer v = detail::parse_integer_token(piece);
        if (v < 0 || v > 65535) detail::format_error("exponent out of range in " + name);
        e.push_back(static_cast<std::uint16_t>(v.convert_to<unsigned>()));
      }
      if (e.size() != arity) detail::format_error("exponent arity mismatch in " + name);
      MultiPoly t = MultiPoly::term(std::move(e), coef);
      if (f.terms().count(t.terms().begin()->first) != 0) detail::format_error("duplicate term in " + name);
      f += t;
      seen += 1;
    }
    if (seen != count) detail::format_error("term count mismatch in " + name);
    (index <= static_cast<std::size_t>(map.p) ? map.h : map.d).push_back(std::move(f));
  }
  while (std::getline(in, line)) {
    if (!line.empty()) detail::format_error("trailing content after formulas");
  }
  return map;
}

}  // namespace landen
