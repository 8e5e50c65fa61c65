#pragma once

// Dense univariate polynomials over an abstract coefficient ring.
//
// Coefficients are stored descending by degree, coeffs()[0] being the leading
// one, which matches the a_0 = leading convention used throughout the
// transformation formulas. The zero polynomial is the empty sequence and has
// degree kZeroDegree.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "landen/errors.hpp"
#include "landen/ring.hpp"
#include "landen/scalars.hpp"

namespace landen {

inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

template <CommutativeRing R>
class Polynomial {
 public:
  using value_type = R;

  Polynomial() = default;
  explicit Polynomial(std::vector<R> descending) : coeffs_(std::move(descending)) { trim(); }
  Polynomial(std::initializer_list<R> descending) : coeffs_(descending) { trim(); }

  static Polynomial constant(R c) { return Polynomial(std::vector<R>{std::move(c)}); }

  static Polynomial monomial(R c, int degree) {
    std::vector<R> coeffs(static_cast<std::size_t>(degree) + 1, RingOps<R>::zero());
    coeffs.front() = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  static Polynomial from_ascending(std::vector<R> ascending) {
    std::reverse(ascending.begin(), ascending.end());
    return Polynomial(std::move(ascending));
  }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  const R& leading() const { return coeffs_.front(); }

  /// Coefficient of x^power; zero outside [0, degree].
  R coefficient(int power) const {
    if (power < 0 || power > degree()) return RingOps<R>::zero();
    return coeffs_[coeffs_.size() - 1 - static_cast<std::size_t>(power)];
  }
  R trailing() const { return coefficient(0); }

  std::vector<R> ascending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  /// Descending coefficients padded with leading zeros to length n + 1.
  std::vector<R> padded(int n) const {
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int power = n; power >= 0; --power) out.push_back(coefficient(power));
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& other) { return *this = combine(*this, other, false); }
  Polynomial& operator-=(const Polynomial& other) { return *this = combine(*this, other, true); }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingOps<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (RingOps<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const R& s) {
    std::vector<R> out;
    out.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) out.push_back(c * s);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const R& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial derivative() const {
    std::vector<R> out;
    for (int power = degree(); power >= 1; --power) {
      out.push_back(coefficient(power) * RingOps<R>::from_int(power));
    }
    return Polynomial(std::move(out));
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(RingOps<R>::one());
    Polynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

 private:
  void trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const R& c) { return !RingOps<R>::is_zero(c); });
    coeffs_.erase(coeffs_.begin(), first);
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    int top = std::max(a.degree(), b.degree());
    if (top == kZeroDegree) return {};
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(top) + 1);
    for (int power = top; power >= 0; --power) {
      out.push_back(subtract ? a.coefficient(power) - b.coefficient(power)
                             : a.coefficient(power) + b.coefficient(power));
    }
    return Polynomial(std::move(out));
  }

  std::vector<R> coeffs_;
};

template <CommutativeRing R>
struct RingOps<Polynomial<R>> {
  static constexpr bool is_exact = RingOps<R>::is_exact;
  static constexpr bool is_field = false;
  static Polynomial<R> zero() { return {}; }
  static Polynomial<R> one() { return Polynomial<R>::constant(RingOps<R>::one()); }
  static Polynomial<R> from_int(long v) { return Polynomial<R>::constant(RingOps<R>::from_int(v)); }
  static bool is_zero(const Polynomial<R>& p) { return p.is_zero(); }
  static Polynomial<R> exact_div(const Polynomial<R>& a, const Polynomial<R>& b);
};

/// Lifts integer coefficients into another ring.
template <CommutativeRing To>
Polynomial<To> polynomial_cast(const Polynomial<Integer>& p) {
  std::vector<To> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if constexpr (std::is_same_v<To, Integer>) {
      out.push_back(c);
    } else if constexpr (std::is_same_v<To, Rational> || std::is_same_v<To, BigFloat>) {
      out.push_back(scalar_cast<To>(c));
    } else {
      out.push_back(To(c));
    }
  }
  return Polynomial<To>(std::move(out));
}

template <CommutativeRing To>
Polynomial<To> polynomial_cast(const Polynomial<Rational>& p) {
  std::vector<To> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(scalar_cast<To>(c));
  return Polynomial<To>(std::move(out));
}

/// Horner evaluation. The argument type may differ from the coefficient
/// ring (rational coefficients evaluated at a BigFloat, for instance).
template <CommutativeRing R, class S>
S evaluate(const Polynomial<R>& p, const S& x) {
  S acc = RingOps<S>::zero();
  for (const auto& c : p.coeffs()) {
    if constexpr (std::is_same_v<R, S>) {
      acc = acc * x + c;
    } else {
      acc = acc * x + scalar_cast<S>(c);
    }
  }
  return acc;
}

template <CommutativeRing R>
struct DivisionResult {
  Polynomial<R> quotient;
  Polynomial<R> remainder;
};

/// Long division. Each quotient coefficient is lc(remainder) / lc(den) taken
/// with RingOps::exact_div, so over non-fields it succeeds only when every
/// such step is exact in the coefficient ring.
template <CommutativeRing R>
DivisionResult<R> divmod(const Polynomial<R>& num, const Polynomial<R>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<R> rem = num.coeffs();
  int shift = num.degree() - den.degree();
  if (shift < 0) return {Polynomial<R>(), num};
  const auto& d = den.coeffs();
  std::vector<R> quotient;
  quotient.reserve(static_cast<std::size_t>(shift) + 1);
  for (int step = 0; step <= shift; ++step) {
    const R& lead = rem[static_cast<std::size_t>(step)];
    if (RingOps<R>::is_zero(lead)) {
      quotient.push_back(RingOps<R>::zero());
      continue;
    }
    R q = RingOps<R>::exact_div(lead, d.front());
    for (std::size_t k = 0; k < d.size(); ++k) {
      rem[static_cast<std::size_t>(step) + k] -= q * d[k];
    }
    quotient.push_back(std::move(q));
  }
  std::vector<R> tail(rem.begin() + shift + 1, rem.end());
  return {Polynomial<R>(std::move(quotient)), Polynomial<R>(std::move(tail))};
}

namespace detail {

template <class R>
bool negligible_remainder(const Polynomial<R>& remainder, const Polynomial<R>& num) {
  if constexpr (RingOps<R>::is_exact) {
    return remainder.is_zero();
  } else {
    R scale = RingOps<R>::zero();
    for (const auto& c : num.coeffs()) scale = std::max(scale, R(abs(c)));
    R bound = scale * pow(R(10), -static_cast<long>(PrecisionScope::current() / 2));
    for (const auto& c : remainder.coeffs()) {
      if (abs(c) > bound) return false;
    }
    return true;
  }
}

}  // namespace detail

/// num / den when den divides num. Over inexact rings the remainder must be
/// below half the working precision relative to num.
template <CommutativeRing R>
Polynomial<R> div_exact(const Polynomial<R>& num, const Polynomial<R>& den) {
  DivisionResult<R> result = divmod(num, den);
  if (!detail::negligible_remainder(result.remainder, num)) {
    throw Error(ErrorCode::kNonZeroRemainder, "polynomial division leaves a remainder");
  }
  return std::move(result.quotient);
}

template <CommutativeRing R>
Polynomial<R> RingOps<Polynomial<R>>::exact_div(const Polynomial<R>& a, const Polynomial<R>& b) {
  return div_exact(a, b);
}

/// Remainder modulo a monic polynomial. Needs no division in the coefficient
/// ring, so it works over any commutative ring.
template <CommutativeRing R>
Polynomial<R> rem_monic(const Polynomial<R>& num, const Polynomial<R>& monic) {
  if (monic.is_zero() || monic.leading() != RingOps<R>::one()) {
    throw std::invalid_argument("rem_monic: divisor must be monic");
  }
  std::vector<R> rem = num.coeffs();
  int shift = num.degree() - monic.degree();
  const auto& d = monic.coeffs();
  for (int step = 0; step <= shift; ++step) {
    R lead = rem[static_cast<std::size_t>(step)];
    if (RingOps<R>::is_zero(lead)) continue;
    for (std::size_t k = 0; k < d.size(); ++k) {
      rem[static_cast<std::size_t>(step) + k] -= lead * d[k];
    }
  }
  if (shift < 0) return num;
  return Polynomial<R>(std::vector<R>(rem.begin() + shift + 1, rem.end()));
}

/// Monic gcd over an exact field.
template <Field R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
  static_assert(RingOps<R>::is_exact, "gcd needs exact arithmetic");
  while (!b.is_zero()) {
    Polynomial<R> r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (RingOps<R>::one() / a.leading());
}

/// Substitutes x -> c * x, i.e. returns p(c x).
template <CommutativeRing R>
Polynomial<R> scale_argument(const Polynomial<R>& p, const R& c) {
  std::vector<R> ascending = p.ascending();
  R factor = RingOps<R>::one();
  for (auto& coeff : ascending) {
    coeff = coeff * factor;
    factor = factor * c;
  }
  return Polynomial<R>::from_ascending(std::move(ascending));
}

/// Human-readable rendering in x, mostly for diagnostics and test output.
template <class R>
std::string to_string(const Polynomial<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int power = p.degree(); power >= 0; --power) {
    const R c = p.coefficient(power);
    if (RingOps<R>::is_zero(c)) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c << ")";
    if (power > 0) out << "*" << var;
    if (power > 1) out << "^" << power;
  }
  return out.str();
}

}  // namespace landen
