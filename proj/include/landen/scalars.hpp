#pragma once

// Exact rational and arbitrary-precision floating scalars, plus the height
// and continued-fraction utilities used to watch coefficient growth.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <ios>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "landen/errors.hpp"
#include "landen/ring.hpp"

namespace landen {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
/// GMP keeps every value canonical: lowest terms, positive denominator.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
/// Precision is taken from the innermost PrecisionScope at construction.
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline constexpr unsigned kDefaultDigits = 50;

/// Sets the decimal precision used for every BigFloat constructed while the
/// scope is alive and restores the previous value on exit. The setting is
/// process-global; run independent precision contexts sequentially.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(std::max(digits, 10u));
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static unsigned current() { return BigFloat::default_precision(); }

 private:
  unsigned saved_;
};

inline Integer numerator_of(const Rational& x) { return mp::numerator(x); }
inline Integer denominator_of(const Rational& x) { return mp::denominator(x); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Rational(num, den);
}

inline BigFloat to_bigfloat(const Rational& x) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

inline BigFloat to_bigfloat(const Integer& x) {
  BigFloat out;
  mpfr_set_z(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

inline BigFloat to_bigfloat(const BigFloat& x) { return BigFloat(x); }

/// pi at the current scope precision.
inline BigFloat pi() {
  BigFloat out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

/// Scientific rendering with `digits` significant digits.
inline std::string to_decimal(const BigFloat& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

inline std::string to_string(const Rational& x) {
  if (denominator_of(x) == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

/// Parses an integer ("-12"), a fraction ("3/7") or a decimal in plain or
/// scientific notation ("0.0001", "1e-5") into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kParseError, "not a rational number: '" + std::string(text) + "'");
  };
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) return fail();

  auto parse_int = [&](std::string_view digits) -> Integer {
    std::size_t i = 0;
    bool negative = false;
    if (i < digits.size() && (digits[i] == '+' || digits[i] == '-')) {
      negative = digits[i] == '-';
      ++i;
    }
    if (i == digits.size()) fail();
    Integer value = 0;
    for (; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) fail();
      value = value * 10 + (digits[i] - '0');
    }
    return negative ? Integer(-value) : value;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_int(std::string_view(s).substr(0, slash));
    Integer den = parse_int(std::string_view(s).substr(slash + 1));
    if (den == 0) fail();
    return Rational(num, den);
  }

  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mantissa = std::string_view(s).substr(0, e);
    Integer ex = parse_int(std::string_view(s).substr(e + 1));
    if (abs(ex) > 100000) fail();
    exponent = ex.convert_to<long>();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      if (seen_point) fail();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++fraction_digits;
    } else {
      fail();
    }
  }
  if (digits.empty()) fail();
  Rational value(parse_int(digits));
  long shift = exponent - fraction_digits;
  Integer ten_power = mp::pow(Integer(10), static_cast<unsigned>(std::labs(shift)));
  value = shift >= 0 ? value * ten_power : value / ten_power;
  return negative ? Rational(-value) : value;
}

/// max(|numerator|, denominator) of x in lowest terms.
inline Integer height(const Rational& x) {
  Integer num = abs(numerator_of(x));
  Integer den = denominator_of(x);
  return num > den ? num : den;
}

inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

/// Simple continued fraction [q0; q1, q2, ...] with q_i >= 1 for i >= 1 and a
/// final term > 1 whenever there is more than one term.
struct ContinuedFraction {
  std::vector<Integer> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// First min(k, full length) terms of the regular expansion of x. Pass
/// k = 0 for the full expansion.
inline ContinuedFraction cf_expand(const Rational& x, std::size_t k = 0) {
  ContinuedFraction cf;
  Integer num = numerator_of(x);
  Integer den = denominator_of(x);
  while (den != 0 && (k == 0 || cf.terms.size() < k)) {
    Integer q = floor_div(num, den);
    cf.terms.push_back(q);
    Integer rem = num - q * den;
    num = den;
    den = rem;
  }
  return cf;
}

inline Rational cf_reconstruct(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw std::invalid_argument("cf_reconstruct: empty continued fraction");
  Rational value(cf.terms.back());
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    value = Rational(*it) + 1 / value;
  }
  return value;
}

/// First convergent y of x with |y - x| <= tol. Convergents alternate around
/// x and are best approximations, so height(y) <= height(x).
inline Rational cf_compress(const Rational& x, const Rational& tol) {
  if (tol < 0) throw std::invalid_argument("cf_compress: negative tolerance");
  if (tol == 0) return x;
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  Integer num = numerator_of(x);
  Integer den = denominator_of(x);
  while (den != 0) {
    Integer q = floor_div(num, den);
    Integer h = q * h_prev + h_prev2;
    Integer k = q * k_prev + k_prev2;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Rational y(h, k);
    if (abs(y - x) <= tol) return y;
    Integer rem = num - q * den;
    num = den;
    den = rem;
  }
  return x;
}

template <>
struct RingOps<Integer> {
  static constexpr bool is_exact = true;
  static constexpr bool is_field = false;
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from_int(long v) { return Integer(v); }
  static bool is_zero(const Integer& x) { return x == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0 || a % b != 0) {
      throw Error(ErrorCode::kNonZeroRemainder, "integer division is not exact");
    }
    return a / b;
  }
};

template <>
struct RingOps<Rational> {
  static constexpr bool is_exact = true;
  static constexpr bool is_field = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
};

template <>
struct RingOps<BigFloat> {
  static constexpr bool is_exact = false;
  static constexpr bool is_field = true;
  static BigFloat zero() { return BigFloat(0); }
  static BigFloat one() { return BigFloat(1); }
  static BigFloat from_int(long v) { return BigFloat(v); }
  static bool is_zero(const BigFloat& x) { return x == 0; }
  static BigFloat exact_div(const BigFloat& a, const BigFloat& b) { return a / b; }
};

/// Converts between scalar types; the target of a BigFloat conversion takes
/// the current scope precision.
template <class To>
To scalar_cast(const Rational& x) {
  if constexpr (std::is_same_v<To, BigFloat>) {
    return to_bigfloat(x);
  } else {
    return To(x);
  }
}

template <class To>
To scalar_cast(const Integer& x) {
  if constexpr (std::is_same_v<To, BigFloat>) {
    return to_bigfloat(x);
  } else {
    return To(x);
  }
}

template <class To>
To scalar_cast(const BigFloat& x) {
  static_assert(std::is_same_v<To, BigFloat>, "BigFloat converts only to BigFloat");
  return x;
}

}  // namespace landen
