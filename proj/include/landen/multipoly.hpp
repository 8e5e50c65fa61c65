#pragma once

// Sparse multivariate polynomials with integer coefficients. Variables are
// indexed 0, 1, 2, ...; an exponent vector lists the power of each variable
// with trailing zeros trimmed, so the constant monomial is the empty vector
// and std::map's lexicographic order agrees with zero-padded lex order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "landen/errors.hpp"
#include "landen/ring.hpp"
#include "landen/scalars.hpp"

namespace landen {

using Exponents = std::vector<std::uint16_t>;

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  MultiPoly() = default;
  MultiPoly(const Integer& c) {  // NOLINT(google-explicit-constructor): ring embedding
    if (c != 0) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(long c) : MultiPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(std::size_t index, std::uint16_t power = 1) {
    Exponents e(index + 1, 0);
    e[index] = power;
    return term(std::move(e), Integer(1));
  }

  static MultiPoly term(Exponents e, const Integer& c) {
    MultiPoly out;
    trim(e);
    if (c != 0) out.terms_.emplace(std::move(e), c);
    return out;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Lex-largest monomial; the polynomial must be nonzero.
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) accumulate(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) accumulate(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::unordered_map<Exponents, Integer, boost::hash<Exponents>> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        acc[add_exponents(ea, eb)] += ca * cb;
      }
    }
    MultiPoly out;
    for (auto& [e, c] : acc) {
      if (c != 0) out.terms_.emplace(e, std::move(c));
    }
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Positive gcd of the coefficients; zero for the zero polynomial.
  Integer content() const {
    Integer g = 0;
    for (const auto& [e, c] : terms_) g = gcd(g, Integer(abs(c)));
    return g;
  }

  /// Number of variables actually present (one past the largest index).
  std::size_t arity() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
  }

  /// Total degree of each monomial restricted to variables [first, last);
  /// returns the set of distinct values.
  std::vector<unsigned> partial_degrees(std::size_t first, std::size_t last) const {
    std::vector<unsigned> out;
    for (const auto& [e, c] : terms_) {
      unsigned d = 0;
      for (std::size_t i = first; i < std::min(last, e.size()); ++i) d += e[i];
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Substitutes values[i] for variable i.
  template <class S>
  S evaluate(const std::vector<S>& values) const {
    if (arity() > values.size()) throw std::invalid_argument("MultiPoly::evaluate: too few values");
    std::vector<std::vector<S>> powers(values.size());
    auto power = [&](std::size_t var, std::uint16_t k) -> const S& {
      auto& table = powers[var];
      if (table.empty()) table.push_back(RingOps<S>::one());
      while (table.size() <= k) table.push_back(table.back() * values[var]);
      return table[k];
    };
    S sum = RingOps<S>::zero();
    for (const auto& [e, c] : terms_) {
      S t = scalar_cast<S>(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) t = t * power(i, e[i]);
      }
      sum += t;
    }
    return sum;
  }

  /// num / den, exact. Uses lex leading terms; throws NonZeroRemainder when
  /// den does not divide num.
  friend MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("MultiPoly division by zero");
    if (den.size() == 1 && den.terms_.begin()->first.empty()) {
      const Integer& d = den.terms_.begin()->second;
      MultiPoly out;
      for (const auto& [e, c] : num.terms_) {
        if (c % d != 0) throw Error(ErrorCode::kNonZeroRemainder, "coefficient not divisible");
        out.terms_.emplace(e, c / d);
      }
      return out;
    }
    const auto& [lead_e, lead_c] = den.leading_term();
    MultiPoly remainder = num;
    MultiPoly quotient;
    while (!remainder.is_zero()) {
      const auto& [re, rc] = remainder.leading_term();
      Exponents qe(std::max(re.size(), lead_e.size()), 0);
      for (std::size_t i = 0; i < qe.size(); ++i) {
        int diff = int(i < re.size() ? re[i] : 0) - int(i < lead_e.size() ? lead_e[i] : 0);
        if (diff < 0) throw Error(ErrorCode::kNonZeroRemainder, "monomial not divisible");
        qe[i] = static_cast<std::uint16_t>(diff);
      }
      if (rc % lead_c != 0) throw Error(ErrorCode::kNonZeroRemainder, "coefficient not divisible");
      MultiPoly q = term(std::move(qe), rc / lead_c);
      remainder -= q * den;
      quotient += q;
    }
    return quotient;
  }

 private:
  static void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
  }

  static Exponents add_exponents(const Exponents& a, const Exponents& b) {
    const Exponents& longer = a.size() >= b.size() ? a : b;
    const Exponents& shorter = a.size() >= b.size() ? b : a;
    Exponents out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) out[i] += shorter[i];
    return out;
  }

  void accumulate(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

template <>
struct RingOps<MultiPoly> {
  static constexpr bool is_exact = true;
  static constexpr bool is_field = false;
  static MultiPoly zero() { return {}; }
  static MultiPoly one() { return MultiPoly(1L); }
  static MultiPoly from_int(long v) { return MultiPoly(v); }
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return landen::exact_div(a, b); }
};

}  // namespace landen
