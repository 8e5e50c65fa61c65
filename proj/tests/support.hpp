#pragma once

// Shared test helpers: a small expression reader for integer polynomials in
// a0..ap, b0..b_{p-2} (so expected formulas can be written the way they are
// printed), seeded generators and reference integrals.

#include <cctype>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "landen.hpp"

namespace landen::testing {

/// Parses expressions such as "-8(a0a3 - a1a4 + 5a0a5)" or "64*a0^2".
/// Juxtaposition multiplies; variables are a<i> (index i) and b<j>
/// (index p+1+j).
class ExprReader {
 public:
  ExprReader(std::string text, int p) : text_(std::move(text)), p_(p) {}

  MultiPoly parse() {
    MultiPoly value = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ExprReader: " + what + " at " + std::to_string(pos_) + " in '" + text_ + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly expr() {
    MultiPoly value;
    bool first = true;
    for (;;) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      value += negative ? -t : t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return value;
  }

  MultiPoly term() {
    MultiPoly value = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * factor();
      } else if (c == '(' || c == 'a' || c == 'b' || std::isdigit(static_cast<unsigned char>(c))) {
        value = value * factor();
      } else {
        break;
      }
    }
    return value;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      unsigned k = static_cast<unsigned>(number());
      MultiPoly out(1L);
      for (unsigned i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  long number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::stol(text_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'a' || c == 'b') {
      ++pos_;
      long index = number();
      if (c == 'a') {
        if (index > p_) fail("a-index beyond p");
        return MultiPoly::variable(static_cast<std::size_t>(index));
      }
      if (index > p_ - 2) fail("b-index beyond p-2");
      return MultiPoly::variable(static_cast<std::size_t>(p_ + 1 + index));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(number());
    fail("unexpected character");
  }

  std::string text_;
  int p_;
  std::size_t pos_ = 0;
};

/// Readable form for assertion messages: sum of coef*x<i>^k terms.
inline std::string describe(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string term = (c < 0 ? " - " : " + ") + Integer(abs(c)).str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term += "*x" + std::to_string(i);
      if (e[i] > 1) term += "^" + std::to_string(e[i]);
    }
    out += term;
  }
  return out;
}

inline MultiPoly expr(const std::string& text, int p) { return ExprReader(text, p).parse(); }

inline Polynomial<Rational> poly(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long v : descending) c.emplace_back(v);
  return Polynomial<Rational>(std::move(c));
}

inline RationalFunction<Rational> rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return {poly(num), poly(den)};
}

inline RationalFunction<Rational> quadratic_example() { return rf({1}, {1, 4, 15}); }
inline RationalFunction<Rational> quartic_example() { return rf({1}, {1, 6, 16, 21, 13}); }

/// 2 pi sqrt((2/111)(sqrt 37 - 5)) at the current precision.
inline BigFloat quartic_integral() {
  return 2 * pi() * sqrt(BigFloat(2) / 111 * (sqrt(BigFloat(37)) - 5));
}

inline Rational random_rational(std::mt19937_64& rng, long max_height) {
  std::uniform_int_distribution<long> num(-max_height, max_height);
  std::uniform_int_distribution<long> den(1, max_height);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline long random_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random valid integrand of degree p: integer coefficients of absolute
/// value at most `height`, rejection-sampled until the denominator has no
/// real root and a nonzero constant term.
inline RationalFunction<Rational> random_integrand(std::mt19937_64& rng, int p, long height) {
  for (;;) {
    std::vector<Rational> a, b;
    for (int i = 0; i <= p; ++i) a.emplace_back(random_int(rng, -height, height));
    for (int i = 0; i <= p - 2; ++i) b.emplace_back(random_int(rng, -height, height));
    if (a.front() == 0 || a.back() == 0) continue;
    Polynomial<Rational> A(std::move(a));
    if (sturm_real_root_count(A) != 0) continue;
    Polynomial<Rational> B(std::move(b));
    if (B.is_zero()) continue;
    return {std::move(B), std::move(A)};
  }
}

/// Number of leading decimal digits on which a and b agree (relative).
inline double agreement_digits(const BigFloat& a, const BigFloat& b) {
  if (a == b) return 1e9;
  BigFloat scale = abs(b) > 0 ? abs(b) : abs(a);
  return -static_cast<double>(log10(abs(a - b) / scale));
}

}  // namespace landen::testing

namespace landen {
inline void PrintTo(const MultiPoly& f, std::ostream* os) { *os << testing::describe(f); }
}  // namespace landen
